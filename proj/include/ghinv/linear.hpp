#pragma once

// Homogeneous linear systems over the supported base rings. Dense, exact,
// desk-scale (a few hundred unknowns at most).

#include <cstdint>
#include <vector>

#include "ghinv/rings.hpp"

namespace ghinv {

using Vector = std::vector<RingElement>;
using Rows = std::vector<Vector>;

// Reduced row echelon form over a field. Returns the pivot column of each
// nonzero row.
std::vector<std::size_t> row_reduce(Rows& rows, std::size_t cols,
                                    const RingDescriptor& ring);

// Basis of {x : M x = 0} over a field (Q or Z/p).
std::vector<Vector> nullspace_field(Rows m, std::size_t cols,
                                    const RingDescriptor& ring);

// Howell normal form of the row module spanned by `rows` over Z/nZ, as
// residues in [0, n). Zero rows are dropped.
std::vector<std::vector<std::int64_t>> howell_form(
    std::vector<std::vector<std::int64_t>> rows, std::size_t cols,
    std::int64_t n);

// Generating set of the solution module {x : M x = 0} over Z/nZ, complete
// even when n is composite.
std::vector<Vector> nullspace_mod(const Rows& m, std::size_t cols,
                                  const RingDescriptor& ring);

}  // namespace ghinv
