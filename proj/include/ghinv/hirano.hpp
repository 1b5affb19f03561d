#pragma once

// Generalized Hirano inverses: b with
//   bab = b,   b in comm^2(a),   a^2 - ab quasinilpotent.
// Construction routes: fields in any dimension, the complete 2x2 classifier
// over local rings, the 2x2 integer criterion, and CRT over Z/nZ. Every
// witness is re-verified against the axioms before it is returned.

#include <optional>
#include <string>
#include <string_view>

#include "ghinv/matrix.hpp"

namespace ghinv {

struct HiranoReport {
  bool bab_eq_b = false;              // (i)
  bool in_double_commutant = false;   // (ii)
  bool square_minus_ab_qnil = false;  // (iii)
  bool ab_eq_ba = false;
  bool drazin_residual_qnil = false;  // a - a^2 b quasinilpotent

  bool is_hirano() const {
    return bab_eq_b && in_double_commutant && square_minus_ab_qnil;
  }
  bool is_drazin() const {
    return bab_eq_b && in_double_commutant && drazin_residual_qnil;
  }
};

HiranoReport verify_hirano_axioms(const SquareMatrix& a, const SquareMatrix& b);

struct HiranoWitness {
  SquareMatrix a;          // the element the witness belongs to
  SquareMatrix h;          // a^h
  SquareMatrix p;          // spectral idempotent, p = a^2 h^2
  SquareMatrix qnil_part;  // a^2 - p
  SquareMatrix pi;         // a^pi = I - a h
  SquareMatrix drazin;     // a^d, equal to h
  HiranoReport report;
  std::string route;
};

// Builds the full witness for a candidate inverse and asserts every
// structural identity: the three axioms, ah = ha, p^2 = p, p = a^2 h^2,
// a^2 - p quasinilpotent, (ah)^2 = ah, pi^2 = pi, h^2 a^2 h^2 = h^2.
// Throws `on_failure` naming the first identity that does not hold.
HiranoWitness make_witness(const SquareMatrix& a, const SquareMatrix& h,
                           std::string route,
                           ErrorCode on_failure = ErrorCode::kInternal);

// h = a (a^2 + I - p)^{-1} p. Requires p^2 = p commuting with a and a^2 - p
// quasinilpotent; throws kPrecondition when the data is bad.
HiranoWitness hirano_from_idempotent(const SquareMatrix& a, const SquareMatrix& p);

// Field base ring, any dimension. Exists iff chi(a^2) = t^r (t - 1)^s.
std::optional<HiranoWitness> hirano_field(const SquareMatrix& a);

enum class HiranoCase { kRadicalSquare, kUnitSquare, kMixed, kNoHirano };
std::string_view to_string(HiranoCase c);

struct Classification {
  HiranoCase kind = HiranoCase::kNoHirano;
  RingElement det;              // det(A)
  RingElement trace_of_square;  // tr(A^2)
  bool det_in_radical = false;
  bool trace_square_in_radical = false;
  bool det_square_in_one_plus_radical = false;
  bool trace_square_in_two_plus_radical = false;
  bool trace_square_in_one_plus_radical = false;
  // Mixed only.
  std::optional<QuadraticRoots> roots;        // x1 in J, x2 in 1 + J
  std::optional<SquareMatrix> transform;      // U with U^{-1} A^2 U = diag(x1, x2)
  std::optional<RingElement> discriminant_sqrt;  // u = x1 - x2
  // NoHirano only: "quadratic-unsolvable", "trace-square-not-in-J-or-1+J",
  // "trace-square-not-in-2+J", "det-square-not-in-1+J".
  std::string failed;
};

// 2x2 over a local ring (Q, Z_(p), Z/p^e). Conditions are tested in order:
// (1) det(A), tr(A^2) in J; (2) det(A)^2 in 1+J, tr(A^2) in 2+J;
// (3) det(A) in J, tr(A^2) in 1+J and x^2 - tr(A^2) x + det(A)^2 solvable.
Classification classify_local_2x2(const SquareMatrix& a);
std::optional<HiranoWitness> hirano_local_2x2(const SquareMatrix& a);

// 2x2 over Z: exists iff A^2 = 0, (I - A^2)^2 = 0 or A^2 = A^4. The witness
// is computed over Q and is integral.
std::optional<HiranoWitness> hirano_integer_2x2(const SquareMatrix& a);

// Z/nZ: componentwise over the local factors Z/p^e, reassembled by CRT.
std::optional<HiranoWitness> hirano_Zn(const SquareMatrix& a);

struct HiranoOutcome {
  std::optional<HiranoWitness> witness;
  std::string route;
  std::string failed;  // reason when no inverse exists
  std::optional<Classification> classification;

  bool exists() const { return witness.has_value(); }
};

// Picks the construction route from the base ring and dimension. Over Q in
// dimension 2 both the classifier and the field route run and must agree.
// Throws kUnsupported for dim > 2 over non-field local rings.
HiranoOutcome hirano_inverse(const SquareMatrix& a);
inline std::optional<HiranoWitness> hirano(const SquareMatrix& a) {
  return hirano_inverse(a).witness;
}

struct TripotentSplit {
  SquareMatrix tripotent;  // E^3 = E
  SquareMatrix nilpotent;  // N, commuting with E
};

// Field base ring. A = E + N with E = P(+1) - P(-1) built from spectral
// projectors; exists iff A has a Hirano inverse.
std::optional<TripotentSplit> tripotent_decompose(const SquareMatrix& a);

}  // namespace ghinv
