#pragma once

// Hirano inverses of sums a + b under the spectral-complement identities
// relating a, b, a^pi = 1 - a a^h and b^pi = 1 - b b^h.

#include <optional>
#include <string>
#include <vector>

#include "ghinv/hirano.hpp"

namespace ghinv {

struct SumHypotheses {
  bool a_eq_a_bpi = false;               // a = a b^pi
  bool bpi_b_api_eq_bpi_b = false;       // b^pi b a^pi = b^pi b
  bool bpi_api_ba_eq_bpi_api_ab = false; // b^pi a^pi b a = b^pi a^pi a b

  bool all() const {
    return a_eq_a_bpi && bpi_b_api_eq_bpi_b && bpi_api_ba_eq_bpi_api_ab;
  }
};

// Throws kPrecondition naming a or b when one of them has no inverse.
SumHypotheses check_sum_hypotheses(const SquareMatrix& a, const SquareMatrix& b);

struct SeriesSum {
  HiranoWitness witness;
  SumHypotheses hypotheses;
  std::size_t terms = 0;  // series indices evaluated, extra round included
  bool terminated = false;
  std::optional<SquareMatrix> series_value;
  // Partial sum of the printed form over the same indices.
  std::optional<SquareMatrix> literal_value;
  // "series-nonterminating" or "series-mismatch"; the witness then comes
  // from the direct route.
  std::vector<std::string> flags;
};

// Evaluates, with s = a + b,
//   (a+b)^h = (b^h + sum_n (b^h)^{n+2} a s^n) a^pi
//           - sum_n sum_k (b^h)^{n+2} a s^n (a^h)^{k+2} b s^{k+1}
//           - sum_n (b^h)^{n+2} a s^n a^h b
//           - sum_n b^h a (a^h)^{n+2} b s^n
//           + b^pi (a^h + sum_n (a^h)^{n+2} b s^n)
// by exact partial sums. Relative to p = b b^h the first four lines give the
// rows of p and the last line the (1-p) corner. The commonly printed form of
// this expansion has + on the third line and no last line; it fails for
// a = 1, b = 0, and literal_value records what it sums to.
// Summation stops once the index-n contribution is zero at two consecutive
// indices; 2 dim^2 indices is the hard cap. The sum is checked against the
// direct witness for a + b whenever one can be computed.
SeriesSum additive_hirano(const SquareMatrix& a, const SquareMatrix& b);

// ab = ba = 0: (a+b)^h = a^h + b^h.
HiranoWitness orthogonal_sum(const SquareMatrix& a, const SquareMatrix& b);

struct AbsorbingHypotheses {
  bool commute = false;           // ab = ba
  bool a_eq_a_bpi = false;        // a = a b^pi
  bool literal_bpi_eq_b_api = false;    // b^pi = b a^pi
  bool literal_b_api_eq_bpi_b = false;  // b a^pi = b^pi b
  bool bpi_b_api_eq_bpi_b = false;      // b^pi b a^pi = b^pi b

  // Gate used by absorbing_sum: commuting, a = a b^pi and the
  // b^pi b a^pi = b^pi b reading of the third identity.
  bool satisfied() const { return commute && a_eq_a_bpi && bpi_b_api_eq_bpi_b; }
  bool literal_reading() const {
    return commute && a_eq_a_bpi && literal_bpi_eq_b_api && literal_b_api_eq_bpi_b;
  }
};

AbsorbingHypotheses check_absorbing_hypotheses(const SquareMatrix& a,
                                               const SquareMatrix& b);

// (a+b)^h = b^h under the absorbing identities.
HiranoWitness absorbing_sum(const SquareMatrix& a, const SquareMatrix& b);

// x block upper triangular relative to p ((1-p) x p = 0). Field base ring.
// Returns the witness for x when both diagonal corners have inverses in
// their corner rings, nothing when one of them does not.
std::optional<HiranoWitness> triangular_hirano(const SquareMatrix& x,
                                               const SquareMatrix& p);

}  // namespace ghinv
