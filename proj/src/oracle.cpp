#include "ghinv/oracle.hpp"

#include <charconv>
#include <cmath>

namespace ghinv::oracle {

using Index = FiniteMatrixRing::Index;

FiniteMatrixRing::FiniteMatrixRing(std::int64_t modulus, std::size_t dim,
                                   std::size_t budget)
    : modulus_(modulus), dim_(dim), size_(1), budget_(budget), one_(0) {
  if (modulus < 2 || dim < 1) {
    throw Error(ErrorCode::kPrecondition, "finite ring needs n >= 2 and k >= 1");
  }
  for (std::size_t i = 0; i < dim * dim; ++i) {
    if (size_ > budget / static_cast<std::size_t>(modulus)) {
      throw Error(ErrorCode::kBudget,
                  "M" + std::to_string(dim) + "(Z/" + std::to_string(modulus) +
                      ") exceeds the enumeration budget of " + std::to_string(budget));
    }
    size_ *= static_cast<std::size_t>(modulus);
  }
  std::vector<std::int64_t> id(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1;
  one_ = encode(id);
  unit_cache_.assign(size_, -1);
  qnil_cache_.assign(size_, -1);
}

std::string FiniteMatrixRing::name() const {
  const std::string base = "Z/" + std::to_string(modulus_);
  return dim_ == 1 ? base : "M" + std::to_string(dim_) + "(" + base + ")";
}

std::vector<std::int64_t> FiniteMatrixRing::decode(Index x) const {
  std::vector<std::int64_t> d(dim_ * dim_);
  std::size_t v = x;
  for (std::size_t i = d.size(); i-- > 0;) {
    d[i] = static_cast<std::int64_t>(v % static_cast<std::size_t>(modulus_));
    v /= static_cast<std::size_t>(modulus_);
  }
  return d;
}

Index FiniteMatrixRing::encode(const std::vector<std::int64_t>& digits) const {
  std::size_t v = 0;
  for (auto d : digits) {
    const std::int64_t r = ((d % modulus_) + modulus_) % modulus_;
    v = v * static_cast<std::size_t>(modulus_) + static_cast<std::size_t>(r);
  }
  return static_cast<Index>(v);
}

SquareMatrix FiniteMatrixRing::element(Index x) const {
  const auto ring = RingDescriptor::integers_mod(modulus_);
  std::vector<RingElement> entries;
  for (auto d : decode(x)) entries.emplace_back(ring, d);
  return SquareMatrix(ring, dim_, std::move(entries));
}

Index FiniteMatrixRing::index_of(const SquareMatrix& m) const {
  if (!(m.ring() == RingDescriptor::integers_mod(modulus_)) || m.dim() != dim_) {
    throw Error(ErrorCode::kDescriptorMismatch, "matrix is not in " + name());
  }
  std::vector<std::int64_t> d;
  for (const auto& e : m.entries()) d.push_back(static_cast<std::int64_t>(e.numerator()));
  return encode(d);
}

Index FiniteMatrixRing::add(Index x, Index y) const {
  auto a = decode(x);
  const auto b = decode(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return encode(a);
}

Index FiniteMatrixRing::sub(Index x, Index y) const {
  auto a = decode(x);
  const auto b = decode(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return encode(a);
}

Index FiniteMatrixRing::mul(Index x, Index y) const {
  const auto a = decode(x);
  const auto b = decode(y);
  std::vector<std::int64_t> c(a.size(), 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t l = 0; l < dim_; ++l) {
      for (std::size_t j = 0; j < dim_; ++j) {
        c[i * dim_ + j] = (c[i * dim_ + j] + a[i * dim_ + l] * b[l * dim_ + j]) % modulus_;
      }
    }
  }
  return encode(c);
}

const std::vector<Index>& FiniteMatrixRing::comm(Index a) const {
  auto it = comm_cache_.find(a);
  if (it != comm_cache_.end()) return it->second;
  std::vector<Index> out;
  for (std::size_t x = 0; x < size_; ++x) {
    if (commute(a, static_cast<Index>(x))) out.push_back(static_cast<Index>(x));
  }
  return comm_cache_.emplace(a, std::move(out)).first->second;
}

std::vector<Index> FiniteMatrixRing::comm2(Index a) const {
  const auto& c = comm(a);
  std::vector<Index> out;
  for (std::size_t x = 0; x < size_; ++x) {
    bool all = true;
    for (Index y : c) {
      if (!commute(static_cast<Index>(x), y)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(static_cast<Index>(x));
  }
  return out;
}

bool FiniteMatrixRing::is_unit(Index x) const {
  if (unit_cache_[x] < 0) {
    bool unit = false;
    for (std::size_t y = 0; y < size_ && !unit; ++y) {
      unit = mul(x, static_cast<Index>(y)) == one_ && mul(static_cast<Index>(y), x) == one_;
    }
    unit_cache_[x] = unit ? 1 : 0;
  }
  return unit_cache_[x] == 1;
}

bool FiniteMatrixRing::is_qnil(Index x) const {
  if (qnil_cache_[x] < 0) {
    bool qnil = true;
    for (Index y : comm(x)) {
      if (!is_unit(add(one_, mul(x, y)))) {
        qnil = false;
        break;
      }
    }
    qnil_cache_[x] = qnil ? 1 : 0;
  }
  return qnil_cache_[x] == 1;
}

std::optional<Index> FiniteMatrixRing::brute_force_hirano(Index a) const {
  auto it = hirano_cache_.find(a);
  if (it != hirano_cache_.end()) return it->second;
  const Index a2 = mul(a, a);
  std::optional<Index> found;
  for (Index b : comm2(a)) {
    if (mul(mul(b, a), b) != b) continue;
    if (!is_qnil(sub(a2, mul(a, b)))) continue;
    if (found) {
      throw Error(ErrorCode::kInternal,
                  "two Hirano inverses for " + element(a).to_string() + " in " + name());
    }
    found = b;
  }
  hirano_cache_.emplace(a, found);
  return found;
}

std::optional<Index> FiniteMatrixRing::brute_force_drazin(Index a) const {
  const Index a2 = mul(a, a);
  std::optional<Index> found;
  for (Index b : comm2(a)) {
    if (mul(mul(b, a), b) != b) continue;
    if (!is_qnil(sub(a, mul(a2, b)))) continue;
    if (found) {
      throw Error(ErrorCode::kInternal,
                  "two Drazin inverses for " + element(a).to_string() + " in " + name());
    }
    found = b;
  }
  return found;
}

std::vector<Index> FiniteMatrixRing::spectral_idempotents(Index a) const {
  const Index a2 = mul(a, a);
  std::vector<Index> out;
  for (Index p : comm2(a)) {
    if (is_idempotent(p) && is_qnil(sub(a2, p))) out.push_back(p);
  }
  return out;
}

FiniteMatrixRing parse_finite_ring(std::string_view spec, std::size_t budget) {
  std::size_t dim = 1;
  std::string_view s = spec;
  if (s.size() > 3 && s.front() == 'M' && s.back() == ')') {
    const auto open = s.find('(');
    if (open == std::string_view::npos ||
        std::from_chars(s.data() + 1, s.data() + open, dim).ec != std::errc()) {
      throw Error(ErrorCode::kParse, "bad finite ring '" + std::string(spec) + "'");
    }
    s = s.substr(open + 1, s.size() - open - 2);
  }
  if (s.starts_with("Zn:")) s.remove_prefix(3);
  else if (s.starts_with("Z/")) s.remove_prefix(2);
  std::int64_t n = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "bad finite ring '" + std::string(spec) + "'");
  }
  return FiniteMatrixRing(n, dim, budget);
}

// ---------------------------------------------------------------------------
// Property registry

namespace {

class Tally {
 public:
  Tally(std::string id, const FiniteMatrixRing& ring) {
    report_.property = std::move(id);
    report_.ring = ring.name();
  }

  // Returns false once a counterexample is recorded, to stop enumeration.
  bool check(bool holds, const std::function<std::string()>& describe) {
    ++report_.checked;
    if (holds) {
      ++report_.passed;
      return true;
    }
    if (!report_.counterexample) report_.counterexample = describe();
    return false;
  }

  PropertyReport finish() { return std::move(report_); }

 private:
  PropertyReport report_;
};

std::string show(const FiniteMatrixRing& r, Index x) { return r.element(x).to_string(); }

Index pow_index(const FiniteMatrixRing& r, Index x, int n) {
  Index acc = r.one();
  for (int i = 0; i < n; ++i) acc = r.mul(acc, x);
  return acc;
}

PropertyReport idempotent_characterization(const FiniteMatrixRing& r) {
  Tally t("thm2.5", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    const bool has_inverse = r.brute_force_hirano(a).has_value();
    const bool has_idempotent = !r.spectral_idempotents(a).empty();
    if (!t.check(has_inverse == has_idempotent, [&] { return "a = " + show(r, a); })) break;
  }
  return t.finish();
}

PropertyReport hirano_implies_drazin(const FiniteMatrixRing& r) {
  Tally t("thm2.2", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    auto h = r.brute_force_hirano(a);
    if (!h) continue;
    auto d = r.brute_force_drazin(a);
    if (!t.check(d && *d == *h, [&] { return "a = " + show(r, a); })) break;
  }
  return t.finish();
}

PropertyReport unique_idempotent(const FiniteMatrixRing& r) {
  Tally t("prop2.7", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    const auto ps = r.spectral_idempotents(a);
    auto h = r.brute_force_hirano(a);
    bool ok = ps.size() <= 1;
    // The idempotent is a^2 h^2.
    if (ok && h) ok = ps.size() == 1 && ps[0] == r.mul(r.mul(a, a), r.mul(*h, *h));
    if (!t.check(ok, [&] { return "a = " + show(r, a); })) break;
  }
  return t.finish();
}

PropertyReport product_idempotent(const FiniteMatrixRing& r) {
  Tally t("cor2.6", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    auto h = r.brute_force_hirano(a);
    if (!h) continue;
    if (!t.check(r.is_idempotent(r.mul(a, *h)), [&] { return "a = " + show(r, a); })) break;
  }
  return t.finish();
}

PropertyReport qnil_times_idempotent(const FiniteMatrixRing& r) {
  Tally t("lem2.1", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    if (!r.is_qnil(a)) continue;
    bool stop = false;
    for (Index e : r.comm(a)) {
      if (!r.is_idempotent(e)) continue;
      if (!t.check(r.is_qnil(r.mul(a, e)),
                   [&] { return "a = " + show(r, a) + ", e = " + show(r, e); })) {
        stop = true;
        break;
      }
    }
    if (stop) break;
  }
  return t.finish();
}

PropertyReport commuting_qnil_closure(const FiniteMatrixRing& r) {
  Tally t("lem4.4", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    if (!r.is_qnil(a)) continue;
    bool stop = false;
    for (Index b : r.comm(a)) {
      if (!r.is_qnil(b)) continue;
      if (!t.check(r.is_qnil(r.add(a, b)) && r.is_qnil(r.mul(a, b)),
                   [&] { return "a = " + show(r, a) + ", b = " + show(r, b); })) {
        stop = true;
        break;
      }
    }
    if (stop) break;
  }
  return t.finish();
}

PropertyReport cline_transfer(const FiniteMatrixRing& r) {
  Tally t("thm4.1", r);
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Index>(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = static_cast<Index>(j);
      const Index aba = r.mul(r.mul(a, b), a);
      const Index ba = r.mul(b, a);
      for (std::size_t k = 0; k < n; ++k) {
        const auto c = static_cast<Index>(k);
        if (r.mul(r.mul(a, c), a) != aba) continue;
        auto d = r.brute_force_hirano(r.mul(a, c));
        auto e = r.brute_force_hirano(ba);
        bool ok = d.has_value() == e.has_value();
        if (ok && d) ok = r.mul(r.mul(b, r.mul(*d, *d)), a) == *e;
        if (!t.check(ok, [&] {
              return "a = " + show(r, a) + ", b = " + show(r, b) + ", c = " + show(r, c);
            })) {
          return t.finish();
        }
      }
    }
  }
  return t.finish();
}

PropertyReport power_transfer(const FiniteMatrixRing& r) {
  Tally t("cor4.3", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      const auto b = static_cast<Index>(j);
      for (int k = 1; k <= 3; ++k) {
        const bool ab = r.brute_force_hirano(pow_index(r, r.mul(a, b), k)).has_value();
        const bool ba = r.brute_force_hirano(pow_index(r, r.mul(b, a), k)).has_value();
        if (!t.check(!ab || ba, [&] {
              return "a = " + show(r, a) + ", b = " + show(r, b) + ", k = " + std::to_string(k);
            })) {
          return t.finish();
        }
      }
    }
  }
  return t.finish();
}

PropertyReport commuting_product(const FiniteMatrixRing& r) {
  Tally t("thm4.5", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    auto ha = r.brute_force_hirano(a);
    if (!ha) continue;
    for (Index b : r.comm(a)) {
      auto hb = r.brute_force_hirano(b);
      if (!hb) continue;
      auto hab = r.brute_force_hirano(r.mul(a, b));
      if (!t.check(hab && *hab == r.mul(*ha, *hb),
                   [&] { return "a = " + show(r, a) + ", b = " + show(r, b); })) {
        return t.finish();
      }
    }
  }
  return t.finish();
}

PropertyReport power_rule(const FiniteMatrixRing& r) {
  Tally t("cor4.6", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    auto ha = r.brute_force_hirano(a);
    if (!ha) continue;
    for (int n = 1; n <= 4; ++n) {
      auto hn = r.brute_force_hirano(pow_index(r, a, n));
      if (!t.check(hn && *hn == pow_index(r, *ha, n), [&] {
            return "a = " + show(r, a) + ", n = " + std::to_string(n);
          })) {
        return t.finish();
      }
    }
  }
  return t.finish();
}

PropertyReport qnil_sum(const FiniteMatrixRing& r) {
  Tally t("lem5.2", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    if (!r.is_qnil(a)) continue;
    for (Index b : r.comm(a)) {
      if (!r.is_qnil(b)) continue;
      const Index s = r.add(a, b);
      auto h = r.brute_force_hirano(s);
      if (!t.check(r.is_qnil(s) && h && *h == r.zero(),
                   [&] { return "a = " + show(r, a) + ", b = " + show(r, b); })) {
        return t.finish();
      }
    }
  }
  return t.finish();
}

PropertyReport orthogonal_sum_rule(const FiniteMatrixRing& r) {
  Tally t("cor5.5", r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    auto ha = r.brute_force_hirano(a);
    if (!ha) continue;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const auto b = static_cast<Index>(j);
      if (r.mul(a, b) != r.zero() || r.mul(b, a) != r.zero()) continue;
      auto hb = r.brute_force_hirano(b);
      if (!hb) continue;
      auto hs = r.brute_force_hirano(r.add(a, b));
      if (!t.check(hs && *hs == r.add(*ha, *hb),
                   [&] { return "a = " + show(r, a) + ", b = " + show(r, b); })) {
        return t.finish();
      }
    }
  }
  return t.finish();
}

}  // namespace

const std::map<std::string, PropertyEntry>& property_registry() {
  static const std::map<std::string, PropertyEntry> registry{
      {"thm2.2", {"every Hirano inverse is the Drazin inverse", 1, hirano_implies_drazin}},
      {"thm2.5", {"a has a Hirano inverse iff some idempotent p in comm^2(a) has a^2 - p qnil",
                  1, idempotent_characterization}},
      {"prop2.7", {"the spectral idempotent is unique and equals a^2 (a^h)^2", 1,
                   unique_idempotent}},
      {"cor2.6", {"a a^h is idempotent", 1, product_idempotent}},
      {"lem2.1", {"qnil a, idempotent e with ae = ea: ae is qnil", 2, qnil_times_idempotent}},
      {"lem4.4", {"commuting qnil a, b: a + b and ab are qnil", 2, commuting_qnil_closure}},
      {"thm4.1", {"aba = aca: ac invertible iff ba is, (ba)^h = b ((ac)^h)^2 a", 3,
                  cline_transfer}},
      {"cor4.3", {"(ab)^k invertible implies (ba)^k invertible, k <= 3", 2, power_transfer}},
      {"thm4.5", {"commuting a, b: (ab)^h = a^h b^h", 2, commuting_product}},
      {"cor4.6", {"(a^n)^h = (a^h)^n, n <= 4", 1, power_rule}},
      {"lem5.2", {"commuting qnil a, b: a + b is qnil with inverse 0", 2, qnil_sum}},
      {"cor5.5", {"ab = ba = 0: (a+b)^h = a^h + b^h", 2, orthogonal_sum_rule}},
  };
  return registry;
}

PropertyReport exhaustive_check(std::string_view property_id,
                                const FiniteMatrixRing& ring) {
  const auto& reg = property_registry();
  auto it = reg.find(std::string(property_id));
  if (it == reg.end()) {
    throw Error(ErrorCode::kPrecondition,
                "unknown property '" + std::string(property_id) + "'");
  }
  double work = std::pow(static_cast<double>(ring.size()), it->second.arity);
  if (work > static_cast<double>(ring.budget())) {
    throw Error(ErrorCode::kBudget, "property " + it->first + " over " + ring.name() +
                                        " enumerates " + std::to_string(static_cast<long long>(work)) +
                                        " tuples, over the budget of " +
                                        std::to_string(ring.budget()));
  }
  return it->second.run(ring);
}

}  // namespace ghinv::oracle
