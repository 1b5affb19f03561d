#include "ghinv/spectral.hpp"

#include "ghinv/commutant.hpp"

namespace ghinv {

namespace {

void require_field(const RingDescriptor& ring, const char* what) {
  if (!ring.is_field()) {
    throw Error(ErrorCode::kUnsupported,
                std::string(what) + " needs a field base ring, got " + ring.name());
  }
}

}  // namespace

MultiplicitySplit split_char_poly(const Polynomial& chi, const RingElement& at) {
  const Polynomial factor = Polynomial::linear_factor(at);
  MultiplicitySplit out{0, chi};
  while (!out.cofactor.is_zero()) {
    auto [q, r] = divide(out.cofactor, factor);
    if (!r.is_zero()) break;
    out.cofactor = std::move(q);
    ++out.multiplicity;
  }
  return out;
}

SpectralSplit spectral_idempotent(const SquareMatrix& a, const RingElement& at) {
  const RingDescriptor& ring = a.ring();
  require_field(ring, "spectral_idempotent");
  const Polynomial chi = char_poly(a);
  auto [r, g] = split_char_poly(chi, at);

  Polynomial e(ring);
  if (r == 0) {
    e = Polynomial::constant(RingElement::one(ring));
  } else if (g.degree() > 0) {
    const Polynomial nil_part = pow(Polynomial::linear_factor(at), static_cast<unsigned>(r));
    const ExtendedGcd eg = extended_gcd(nil_part, g);
    if (!(eg.gcd == Polynomial::constant(RingElement::one(ring)))) {
      throw Error(ErrorCode::kInternal, "spectral factors are not coprime");
    }
    e = divide(eg.s * nil_part, chi).remainder;
  }

  SquareMatrix projector = evaluate(e, a);
  if (!is_idempotent(projector) || !commutes(projector, a)) {
    throw Error(ErrorCode::kInternal, "spectral projector failed verification");
  }
  return {at, std::move(projector), r, std::move(e)};
}

SquareMatrix drazin_field(const SquareMatrix& a) {
  const RingDescriptor& ring = a.ring();
  require_field(ring, "drazin_field");
  const SquareMatrix id = SquareMatrix::identity(ring, a.dim());
  const SquareMatrix p = spectral_idempotent(a, RingElement::zero(ring)).projector;
  const SquareMatrix q = id - p;
  auto inv = try_invert_matrix(a + q);
  if (!inv) {
    throw Error(ErrorCode::kInternal, "A + Q is singular");
  }
  SquareMatrix ad = *inv * p;
  if (!(ad * a * ad == ad) || !is_nilpotent(a - a * a * ad) ||
      !in_double_commutant(ad, a)) {
    throw Error(ErrorCode::kInternal, "Drazin inverse failed verification");
  }
  return ad;
}

}  // namespace ghinv
