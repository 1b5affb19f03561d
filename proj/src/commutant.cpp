#include "ghinv/commutant.hpp"

#include "ghinv/linear.hpp"

namespace ghinv {

namespace {

// Matrix of X -> AX - XA acting on vec(X), row-major index i*k + j.
Rows commutator_system(const SquareMatrix& a) {
  const std::size_t k = a.dim();
  const RingDescriptor& ring = a.ring();
  Rows sys(k * k, Vector(k * k, RingElement::zero(ring)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto& row = sys[i * k + j];
      for (std::size_t l = 0; l < k; ++l) {
        row[l * k + j] += a(i, l);
        row[i * k + l] -= a(l, j);
      }
    }
  }
  return sys;
}

SquareMatrix unvec(const RingDescriptor& ring, std::size_t k, Vector v) {
  return SquareMatrix(ring, k, std::move(v));
}

}  // namespace

std::vector<SquareMatrix> centralizer_generators(const SquareMatrix& a) {
  const RingDescriptor& ring = a.ring();
  const std::size_t k = a.dim();
  std::vector<SquareMatrix> gens;

  if (ring.is_field()) {
    for (auto& v : nullspace_field(commutator_system(a), k * k, ring)) {
      gens.push_back(unvec(ring, k, std::move(v)));
    }
    return gens;
  }
  if (ring.kind() == RingKind::kIntegersMod) {
    for (auto& v : nullspace_mod(commutator_system(a), k * k, ring)) {
      gens.push_back(unvec(ring, k, std::move(v)));
    }
    return gens;
  }

  // Z and Z_(p): solve over Q, then scale each basis vector to integers.
  const RingDescriptor q = RingDescriptor::rationals();
  const SquareMatrix aq = change_ring(a, q);
  for (auto& v : nullspace_field(commutator_system(aq), k * k, q)) {
    BigInt lcm = 1;
    for (const auto& e : v) lcm = boost::multiprecision::lcm(lcm, e.denominator());
    const RingElement scale(q, lcm);
    Vector scaled;
    scaled.reserve(v.size());
    for (const auto& e : v) scaled.push_back(change_ring(scale * e, ring));
    gens.push_back(unvec(ring, k, std::move(scaled)));
  }
  return gens;
}

bool in_double_commutant(const SquareMatrix& b, const SquareMatrix& a) {
  if (!(a.ring() == b.ring()) || a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "double-commutant test needs conforming matrices");
  }
  for (const auto& y : centralizer_generators(a)) {
    if (!commutes(b, y)) return false;
  }
  return true;
}

}  // namespace ghinv
