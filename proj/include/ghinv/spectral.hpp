#pragma once

// Spectral idempotents as explicit polynomials in a matrix, and generalized
// Drazin inverses over fields built from them.

#include "ghinv/matrix.hpp"

namespace ghinv {

struct MultiplicitySplit {
  std::size_t multiplicity;  // r in chi = (t - at)^r g, g(at) != 0
  Polynomial cofactor;       // g
};

MultiplicitySplit split_char_poly(const Polynomial& chi, const RingElement& at);

struct SpectralSplit {
  RingElement at;
  // Idempotent that is 0 on the generalized `at`-eigenspace and 1 on the
  // rest of the spectrum.
  SquareMatrix projector;
  std::size_t multiplicity;
  // projector == evaluate(certificate, a)
  Polynomial certificate;
};

// Field base ring only. The certificate e(t) satisfies e = 0 mod (t - at)^r
// and e = 1 mod g(t), built with the extended Euclidean algorithm.
SpectralSplit spectral_idempotent(const SquareMatrix& a, const RingElement& at);

// Generalized Drazin inverse over a field: (A + Q)^{-1} (I - Q), where Q
// projects onto the generalized null space.
SquareMatrix drazin_field(const SquareMatrix& a);

}  // namespace ghinv
