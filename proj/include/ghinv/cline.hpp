#pragma once

// Cline-type transfer and the multiplicative rules for Hirano inverses.

#include <optional>

#include "ghinv/hirano.hpp"

namespace ghinv {

// Requires aba = aca (kPrecondition otherwise). Returns the witness for ba
// with h = b ((ac)^h)^2 a, or nothing when ac has no inverse; in that case
// ba is checked to have none either.
std::optional<HiranoWitness> cline_generalized(const SquareMatrix& a,
                                               const SquareMatrix& b,
                                               const SquareMatrix& c);

// (ba)^h = b ((ab)^h)^2 a.
std::optional<HiranoWitness> cline_classic(const SquareMatrix& a, const SquareMatrix& b);

// Commuting a, b: (ab)^h = a^h b^h. kPrecondition when ab != ba.
std::optional<HiranoWitness> product_commuting(const SquareMatrix& a,
                                               const SquareMatrix& b);

// (a^n)^h = (a^h)^n, n >= 1.
std::optional<HiranoWitness> power_formula(const SquareMatrix& a, int n);

}  // namespace ghinv
