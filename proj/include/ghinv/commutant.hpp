#pragma once

#include <vector>

#include "ghinv/matrix.hpp"

namespace ghinv {

// Finite generating set of comm(a) = {x : ax = xa}, as a module over the
// base ring.
//
//   Q, Z/p     basis from Gaussian elimination
//   Z/n        Howell-form kernel (complete over non-fields)
//   Z, Z_(p)   Q-basis with denominators cleared; Q-span of the commutant
//              of a matrix over a subring equals the commutant over Q
std::vector<SquareMatrix> centralizer_generators(const SquareMatrix& a);

// b lies in comm^2(a): b commutes with every generator of comm(a). Commuting
// is linear in the generator, so checking generators is enough.
bool in_double_commutant(const SquareMatrix& b, const SquareMatrix& a);

}  // namespace ghinv
