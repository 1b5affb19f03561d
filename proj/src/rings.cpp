#include "ghinv/rings.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace ghinv {

namespace {

BigInt mod_floor(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

// Inverse of a modulo n, if gcd(a, n) = 1.
std::optional<BigInt> inverse_mod(const BigInt& a, const BigInt& n) {
  BigInt old_r = mod_floor(a, n), r = n;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, n);
}

bool parse_integer(std::string_view text, BigInt& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) return false;
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescriptor RingDescriptor::integers_mod(std::int64_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kPrecondition,
                "Z/nZ needs n >= 2, got " + std::to_string(n));
  }
  return {RingKind::kIntegersMod, n};
}

RingDescriptor RingDescriptor::p_local(std::int64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kPrecondition,
                "Z_(p) needs a prime p, got " + std::to_string(p));
  }
  return {RingKind::kPLocal, p};
}

bool RingDescriptor::is_field() const {
  return kind_ == RingKind::kRationals ||
         (kind_ == RingKind::kIntegersMod && is_prime(modulus_));
}

bool RingDescriptor::is_local() const {
  switch (kind_) {
    case RingKind::kRationals:
    case RingKind::kPLocal:
      return true;
    case RingKind::kIntegers:
      return false;
    case RingKind::kIntegersMod:
      return crt_split(modulus_).size() == 1;
  }
  return false;
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::kRationals: return "Q";
    case RingKind::kIntegers: return "Z";
    case RingKind::kIntegersMod: return "Z/" + std::to_string(modulus_);
    case RingKind::kPLocal: return "Z_(" + std::to_string(modulus_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(const RingDescriptor& ring, std::int64_t value)
    : ring_(ring), value_(value) {
  canonicalize();
}

RingElement::RingElement(const RingDescriptor& ring, const BigInt& value)
    : ring_(ring), value_(value) {
  canonicalize();
}

RingElement RingElement::from_fraction(const RingDescriptor& ring,
                                       const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw Error(ErrorCode::kPrecondition, "zero denominator");
  }
  BigRational q = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
  return from_rational(ring, q);
}

RingElement RingElement::from_rational(const RingDescriptor& ring,
                                       const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  switch (ring.kind()) {
    case RingKind::kRationals:
      return {ring, q, true};
    case RingKind::kIntegers:
      if (den != 1) {
        throw Error(ErrorCode::kPrecondition,
                    "fraction " + q.str() + " is not an integer");
      }
      return {ring, q, true};
    case RingKind::kPLocal:
      if (den % ring.modulus() == 0) {
        throw Error(ErrorCode::kPrecondition,
                    "denominator of " + q.str() + " is divisible by p in " +
                        ring.name());
      }
      return {ring, q, true};
    case RingKind::kIntegersMod: {
      const BigInt n = ring.modulus();
      auto inv = inverse_mod(den, n);
      if (!inv) {
        throw Error(ErrorCode::kPrecondition,
                    "denominator of " + q.str() + " is not a unit in " +
                        ring.name());
      }
      return {ring, BigRational(mod_floor(num * *inv, n)), true};
    }
  }
  throw Error(ErrorCode::kInternal, "unknown ring kind");
}

RingElement RingElement::parse(const RingDescriptor& ring,
                               std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  BigInt num, den = 1;
  bool ok = parse_integer(trim(text.substr(0, slash)), num);
  if (ok && slash != std::string_view::npos) {
    ok = parse_integer(trim(text.substr(slash + 1)), den);
  }
  if (!ok || den == 0) {
    throw Error(ErrorCode::kParse,
                "cannot parse ring element '" + std::string(text) + "'");
  }
  return from_fraction(ring, num, den);
}

BigInt RingElement::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt RingElement::denominator() const {
  return boost::multiprecision::denominator(value_);
}

std::string RingElement::to_string() const {
  const BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

void RingElement::canonicalize() {
  switch (ring_.kind()) {
    case RingKind::kRationals:
      break;
    case RingKind::kIntegers:
      if (denominator() != 1) {
        throw Error(ErrorCode::kInternal, "non-integral value over Z");
      }
      break;
    case RingKind::kPLocal:
      if (denominator() % ring_.modulus() == 0) {
        throw Error(ErrorCode::kInternal, "denominator divisible by p");
      }
      break;
    case RingKind::kIntegersMod:
      if (denominator() != 1) {
        throw Error(ErrorCode::kInternal, "fractional residue");
      }
      value_ = BigRational(mod_floor(numerator(), ring_.modulus()));
      break;
  }
}

void RingElement::require_same_ring(const RingElement& other) const {
  if (!(ring_ == other.ring_)) {
    throw Error(ErrorCode::kDescriptorMismatch,
                "ring mismatch: " + ring_.name() + " vs " + other.ring_.name());
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(other);
  value_ += other.value_;
  if (ring_.kind() == RingKind::kIntegersMod) canonicalize();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(other);
  value_ -= other.value_;
  if (ring_.kind() == RingKind::kIntegersMod) canonicalize();
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  require_same_ring(other);
  value_ *= other.value_;
  if (ring_.kind() == RingKind::kIntegersMod) canonicalize();
  return *this;
}

RingElement operator-(const RingElement& x) {
  RingElement r = x;
  r.value_ = -r.value_;
  if (r.ring_.kind() == RingKind::kIntegersMod) r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Units, radical, quasinilpotence

std::optional<RingElement> try_invert(const RingElement& x) {
  const RingDescriptor& ring = x.ring();
  switch (ring.kind()) {
    case RingKind::kRationals:
      if (x.is_zero()) return std::nullopt;
      return RingElement::from_rational(ring, 1 / x.value());
    case RingKind::kIntegers:
      if (x.value() == 1 || x.value() == -1) return x;
      return std::nullopt;
    case RingKind::kPLocal:
      if (x.is_zero() || x.numerator() % ring.modulus() == 0) {
        return std::nullopt;
      }
      return RingElement::from_rational(ring, 1 / x.value());
    case RingKind::kIntegersMod: {
      auto inv = inverse_mod(x.numerator(), ring.modulus());
      if (!inv) return std::nullopt;
      return RingElement(ring, *inv);
    }
  }
  return std::nullopt;
}

bool is_unit(const RingElement& x) { return try_invert(x).has_value(); }

bool in_jacobson_radical(const RingElement& x) {
  const RingDescriptor& ring = x.ring();
  switch (ring.kind()) {
    case RingKind::kRationals:
    case RingKind::kIntegers:
      return x.is_zero();
    case RingKind::kPLocal:
      return x.numerator() % ring.modulus() == 0;
    case RingKind::kIntegersMod:
      return x.numerator() % radical(ring.modulus()) == 0;
  }
  return false;
}

bool is_quasinilpotent_scalar(const RingElement& x) {
  return in_jacobson_radical(x);
}

RingElement change_ring(const RingElement& x, const RingDescriptor& target) {
  const RingDescriptor& source = x.ring();
  if (source == target) return x;
  if (source.kind() == RingKind::kIntegersMod) {
    if (target.kind() == RingKind::kIntegersMod &&
        source.modulus() % target.modulus() == 0) {
      return RingElement(target, x.numerator());
    }
    throw Error(ErrorCode::kUnsupported,
                "no canonical map " + source.name() + " -> " + target.name());
  }
  return RingElement::from_rational(target, x.value());
}

// ---------------------------------------------------------------------------
// Integer factorization and CRT

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (const auto& pp : crt_split(n)) r *= pp.prime;
  return r;
}

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::vector<PrimePower> crt_split(std::int64_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kPrecondition, "crt_split needs n >= 2");
  }
  std::vector<PrimePower> factors;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    factors.push_back({d, e});
  }
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

std::vector<RingElement> crt_project(const RingElement& x) {
  if (x.ring().kind() != RingKind::kIntegersMod) {
    throw Error(ErrorCode::kUnsupported, "crt_project needs Z/nZ");
  }
  std::vector<RingElement> parts;
  for (const auto& pp : crt_split(x.ring().modulus())) {
    parts.emplace_back(RingDescriptor::integers_mod(pp.value()), x.numerator());
  }
  return parts;
}

RingElement crt_reconstruct(std::span<const RingElement> parts,
                            const RingDescriptor& target) {
  if (target.kind() != RingKind::kIntegersMod) {
    throw Error(ErrorCode::kUnsupported, "crt_reconstruct needs Z/nZ");
  }
  const BigInt n = target.modulus();
  BigInt acc = 0;
  BigInt product = 1;
  for (const auto& part : parts) {
    if (part.ring().kind() != RingKind::kIntegersMod) {
      throw Error(ErrorCode::kDescriptorMismatch, "CRT part is not Z/mZ");
    }
    const BigInt m = part.ring().modulus();
    product *= m;
    const BigInt others = n / m;
    auto inv = inverse_mod(others, m);
    if (n % m != 0 || !inv) {
      throw Error(ErrorCode::kPrecondition, "CRT moduli are not coprime");
    }
    acc += part.numerator() * others * *inv;
  }
  if (product != n) {
    throw Error(ErrorCode::kPrecondition, "CRT moduli do not multiply to n");
  }
  return RingElement(target, acc);
}

// ---------------------------------------------------------------------------
// Square roots and quadratics

std::optional<RingElement> rational_square_root(const RingElement& q) {
  if (q.ring().kind() == RingKind::kIntegersMod) {
    throw Error(ErrorCode::kUnsupported,
                "rational_square_root needs a subring of Q");
  }
  if (q.value() < 0) return std::nullopt;
  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return RingElement::from_fraction(q.ring(), rn, rd);
}

namespace {

void order_by_radical(QuadraticRoots& roots) {
  if (!in_jacobson_radical(roots.x1) && in_jacobson_radical(roots.x2)) {
    std::swap(roots.x1, roots.x2);
  }
}

std::optional<QuadraticRoots> roots_in_subring_of_q(const RingElement& t,
                                                    const RingElement& d) {
  const BigRational disc = t.value() * t.value() - 4 * d.value();
  auto r = rational_square_root(
      RingElement::from_rational(RingDescriptor::rationals(), disc));
  if (!r) return std::nullopt;
  const BigRational lo = (t.value() - r->value()) / 2;
  const BigRational hi = (t.value() + r->value()) / 2;
  // Z and Z_(p) are integrally closed in Q: a rational root of a monic
  // polynomial with coefficients in the ring lies in the ring. Checked anyway.
  try {
    QuadraticRoots roots{RingElement::from_rational(t.ring(), lo),
                         RingElement::from_rational(t.ring(), hi)};
    return roots;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<QuadraticRoots> roots_by_search(const RingElement& t,
                                              const RingElement& d) {
  const RingDescriptor& ring = t.ring();
  for (std::int64_t x = 0; x < ring.modulus(); ++x) {
    const RingElement r(ring, x);
    if ((r * r - t * r + d).is_zero()) {
      QuadraticRoots roots{r, t - r};
      order_by_radical(roots);
      return roots;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<QuadraticRoots> quadratic_roots_in_ring(const RingElement& t,
                                                      const RingElement& d) {
  if (!(t.ring() == d.ring())) {
    throw Error(ErrorCode::kDescriptorMismatch,
                "quadratic coefficients live in different rings");
  }
  const RingDescriptor& ring = t.ring();
  std::optional<QuadraticRoots> roots;
  if (ring.kind() != RingKind::kIntegersMod) {
    roots = roots_in_subring_of_q(t, d);
  } else {
    const auto factors = crt_split(ring.modulus());
    if (factors.size() == 1) {
      roots = roots_by_search(t, d);
    } else {
      const auto ts = crt_project(t);
      const auto ds = crt_project(d);
      std::vector<RingElement> x1s, x2s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto local = roots_by_search(ts[i], ds[i]);
        if (!local) return std::nullopt;
        x1s.push_back(local->x1);
        x2s.push_back(local->x2);
      }
      roots = QuadraticRoots{crt_reconstruct(x1s, ring),
                             crt_reconstruct(x2s, ring)};
    }
  }
  if (!roots) return std::nullopt;
  order_by_radical(*roots);
  for (const auto* x : {&roots->x1, &roots->x2}) {
    if (!((*x) * (*x) - t * (*x) + d).is_zero()) {
      throw Error(ErrorCode::kInternal, "quadratic root fails to verify");
    }
  }
  return roots;
}

}  // namespace ghinv
