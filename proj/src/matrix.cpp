#include "ghinv/matrix.hpp"

#include <algorithm>
#include <utility>

namespace ghinv {

SquareMatrix::SquareMatrix(const RingDescriptor& ring, std::size_t dim)
    : ring_(ring), dim_(dim), entries_(dim * dim, RingElement::zero(ring)) {
  if (dim == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix dimension must be >= 1");
  }
}

SquareMatrix::SquareMatrix(const RingDescriptor& ring, std::size_t dim,
                           std::vector<RingElement> entries)
    : ring_(ring), dim_(dim), entries_(std::move(entries)) {
  if (dim == 0 || entries_.size() != dim * dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(dim * dim) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (!(e.ring() == ring_)) {
      throw Error(ErrorCode::kDescriptorMismatch,
                  "matrix entry from " + e.ring().name() + " in " + ring_.name());
    }
  }
}

SquareMatrix SquareMatrix::identity(const RingDescriptor& ring, std::size_t dim) {
  SquareMatrix m(ring, dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = RingElement::one(ring);
  return m;
}

SquareMatrix SquareMatrix::diagonal(const RingDescriptor& ring,
                                    const std::vector<RingElement>& diag) {
  SquareMatrix m(ring, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

SquareMatrix SquareMatrix::diagonal(const RingDescriptor& ring,
                                    std::initializer_list<std::int64_t> diag) {
  std::vector<RingElement> d;
  for (auto v : diag) d.emplace_back(ring, v);
  return diagonal(ring, d);
}

SquareMatrix SquareMatrix::from_rows(
    const RingDescriptor& ring,
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<RingElement> entries;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix rows must be square");
    }
    for (auto v : row) entries.emplace_back(ring, v);
  }
  return SquareMatrix(ring, rows.size(), std::move(entries));
}

SquareMatrix SquareMatrix::from_rows(
    const RingDescriptor& ring, const std::vector<std::vector<RingElement>>& rows) {
  std::vector<RingElement> entries;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix rows must be square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return SquareMatrix(ring, rows.size(), std::move(entries));
}

void SquareMatrix::set(std::size_t i, std::size_t j, const RingElement& value) {
  if (!(value.ring() == ring_)) {
    throw Error(ErrorCode::kDescriptorMismatch,
                "entry from " + value.ring().name() + " in " + ring_.name());
  }
  entries_.at(i * dim_ + j) = value;
}

bool SquareMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool SquareMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

std::string SquareMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

void SquareMatrix::require_conforming(const SquareMatrix& other) const {
  if (!(ring_ == other.ring_)) {
    throw Error(ErrorCode::kDescriptorMismatch,
                "matrix ring mismatch: " + ring_.name() + " vs " + other.ring_.name());
  }
  if (dim_ != other.dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix dimension mismatch: " + std::to_string(dim_) + " vs " +
                    std::to_string(other.dim_));
  }
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& other) {
  require_conforming(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& other) {
  require_conforming(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

SquareMatrix operator-(const SquareMatrix& a) {
  SquareMatrix r = a;
  for (auto& e : r.entries_) e = -e;
  return r;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  a.require_conforming(b);
  const std::size_t n = a.dim_;
  SquareMatrix c(a.ring_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const RingElement& ail = a(i, l);
      if (ail.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        c.entries_[i * n + j] += ail * b(l, j);
      }
    }
  }
  return c;
}

SquareMatrix operator*(const RingElement& s, const SquareMatrix& a) {
  SquareMatrix r = a;
  for (auto& e : r.entries_) e = s * e;
  return r;
}

SquareMatrix pow(const SquareMatrix& a, unsigned exponent) {
  SquareMatrix result = SquareMatrix::identity(a.ring(), a.dim());
  SquareMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

RingElement trace(const SquareMatrix& a) {
  RingElement t = RingElement::zero(a.ring());
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

Polynomial char_poly(const SquareMatrix& a) {
  const RingDescriptor& ring = a.ring();
  const std::size_t n = a.dim();
  const RingElement one = RingElement::one(ring);
  const RingElement zero = RingElement::zero(ring);

  // Coefficients of the trailing principal submatrix's characteristic
  // polynomial, highest degree first. Start from the bottom-right 1x1 block.
  std::vector<RingElement> c{one, -a(n - 1, n - 1)};
  for (std::size_t r = n - 1; r-- > 0;) {
    const std::size_t m = n - 1 - r;  // size of the trailing block
    // First column of the Toeplitz factor: 1, -a_rr, -R C, -R A1 C, ...
    std::vector<RingElement> toeplitz{one, -a(r, r)};
    std::vector<RingElement> v(m, zero);
    for (std::size_t i = 0; i < m; ++i) v[i] = a(r + 1 + i, r);
    for (std::size_t k = 0; k < m; ++k) {
      RingElement rv = zero;
      for (std::size_t i = 0; i < m; ++i) rv += a(r, r + 1 + i) * v[i];
      toeplitz.push_back(-rv);
      if (k + 1 == m) break;
      std::vector<RingElement> next(m, zero);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          next[i] += a(r + 1 + i, r + 1 + j) * v[j];
        }
      }
      v = std::move(next);
    }
    std::vector<RingElement> next_c(m + 2, zero);
    for (std::size_t i = 0; i < m + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, m); ++j) {
        next_c[i] += toeplitz[i - j] * c[j];
      }
    }
    c = std::move(next_c);
  }
  return Polynomial(ring, std::vector<RingElement>(c.rbegin(), c.rend()));
}

RingElement det(const SquareMatrix& a) {
  // det(tI - A) has constant term det(-A) = (-1)^n det(A).
  RingElement c0 = char_poly(a).coefficient(0);
  return a.dim() % 2 == 0 ? c0 : -c0;
}

SquareMatrix adjugate(const SquareMatrix& a) {
  // Cayley-Hamilton: A (A^{n-1} + c_{n-1} A^{n-2} + ... + c_1 I) = -c_0 I,
  // and -c_0 = (-1)^{n+1} det(A).
  const Polynomial chi = char_poly(a);
  const std::size_t n = a.dim();
  SquareMatrix q(a.ring(), n);
  for (std::size_t k = n; k >= 1; --k) {
    q = q * a + chi.coefficient(k) * SquareMatrix::identity(a.ring(), n);
  }
  return n % 2 == 1 ? q : -q;
}

std::optional<SquareMatrix> try_invert_matrix(const SquareMatrix& a) {
  auto inv_det = try_invert(det(a));
  if (!inv_det) return std::nullopt;
  return *inv_det * adjugate(a);
}

SquareMatrix evaluate(const Polynomial& f, const SquareMatrix& a) {
  const auto& c = f.coefficients();
  SquareMatrix acc(a.ring(), a.dim());
  const SquareMatrix id = SquareMatrix::identity(a.ring(), a.dim());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it * id;
  return acc;
}

bool commutes(const SquareMatrix& a, const SquareMatrix& b) {
  return a * b == b * a;
}

bool is_idempotent(const SquareMatrix& a) { return a * a == a; }

namespace {

// Exponent that certifies nilpotence: dim over a reduced ring; over Z/nZ a
// nilpotent matrix is nilpotent modulo rad(n), so dim * (largest prime
// exponent of n) suffices.
std::size_t nilpotence_bound(const SquareMatrix& a) {
  std::size_t bound = a.dim();
  if (a.ring().kind() == RingKind::kIntegersMod) {
    int e = 1;
    for (const auto& pp : crt_split(a.ring().modulus())) e = std::max(e, pp.exponent);
    bound *= static_cast<std::size_t>(e);
  }
  return bound;
}

}  // namespace

std::optional<std::size_t> nilpotency_index(const SquareMatrix& a) {
  const std::size_t bound = nilpotence_bound(a);
  SquareMatrix power = a;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (power.is_zero()) return k;
    power = power * a;
  }
  return std::nullopt;
}

bool is_nilpotent(const SquareMatrix& a) {
  return pow(a, static_cast<unsigned>(nilpotence_bound(a))).is_zero();
}

bool in_radical_matrix(const SquareMatrix& a) {
  for (const auto& e : a.entries()) {
    if (!in_jacobson_radical(e)) return false;
  }
  return true;
}

bool is_quasinilpotent_matrix(const SquareMatrix& a) {
  const SquareMatrix top = pow(a, static_cast<unsigned>(a.dim()));
  if (!a.ring().has_finite_quotient()) return top.is_zero();
  return in_radical_matrix(top);
}

SquareMatrix change_ring(const SquareMatrix& a, const RingDescriptor& target) {
  std::vector<RingElement> entries;
  entries.reserve(a.entries().size());
  for (const auto& e : a.entries()) entries.push_back(change_ring(e, target));
  return SquareMatrix(target, a.dim(), std::move(entries));
}

std::vector<SquareMatrix> crt_project(const SquareMatrix& a) {
  if (a.ring().kind() != RingKind::kIntegersMod) {
    throw Error(ErrorCode::kUnsupported, "crt_project needs Z/nZ");
  }
  std::vector<SquareMatrix> parts;
  for (const auto& pp : crt_split(a.ring().modulus())) {
    parts.push_back(change_ring(a, RingDescriptor::integers_mod(pp.value())));
  }
  return parts;
}

SquareMatrix crt_reconstruct(std::span<const SquareMatrix> parts,
                             const RingDescriptor& target) {
  if (parts.empty()) {
    throw Error(ErrorCode::kPrecondition, "no CRT components");
  }
  const std::size_t n = parts.front().dim();
  std::vector<RingElement> entries;
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    std::vector<RingElement> comp;
    for (const auto& part : parts) {
      if (part.dim() != n) {
        throw Error(ErrorCode::kDimensionMismatch, "CRT components differ in size");
      }
      comp.push_back(part.entries()[idx]);
    }
    entries.push_back(crt_reconstruct(comp, target));
  }
  return SquareMatrix(target, n, std::move(entries));
}

BlockView peirce_blocks(const SquareMatrix& x, const SquareMatrix& p) {
  if (!(x.ring() == p.ring()) || x.dim() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "idempotent does not conform");
  }
  if (!is_idempotent(p)) {
    throw Error(ErrorCode::kPrecondition, "Peirce blocks need p^2 = p");
  }
  const SquareMatrix q = SquareMatrix::identity(p.ring(), p.dim()) - p;
  return {p, p * x * p, p * x * q, q * x * p, q * x * q};
}

SquareMatrix block_recompose(const BlockView& view) {
  return view.top_left + view.top_right + view.bottom_left + view.bottom_right;
}

}  // namespace ghinv
