#include "ghinv/hirano.hpp"

#include "ghinv/commutant.hpp"
#include "ghinv/spectral.hpp"

namespace ghinv {

namespace {

SquareMatrix identity_like(const SquareMatrix& a) {
  return SquareMatrix::identity(a.ring(), a.dim());
}

void require_field(const SquareMatrix& a, const char* what) {
  if (!a.ring().is_field()) {
    throw Error(ErrorCode::kUnsupported,
                std::string(what) + " needs a field base ring, got " + a.ring().name());
  }
}

bool in_one_plus_radical(const RingElement& x, std::int64_t shift) {
  return in_jacobson_radical(x - RingElement(x.ring(), shift));
}

// chi(a^2) = t^r (t - 1)^s.
bool square_spectrum_in_zero_one(const SquareMatrix& a) {
  const RingDescriptor& ring = a.ring();
  const Polynomial chi = char_poly(square(a));
  const auto at0 = split_char_poly(chi, RingElement::zero(ring));
  const auto at1 = split_char_poly(at0.cofactor, RingElement::one(ring));
  return at1.cofactor.degree() == 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Verification

HiranoReport verify_hirano_axioms(const SquareMatrix& a, const SquareMatrix& b) {
  if (!(a.ring() == b.ring()) || a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "verify needs conforming matrices");
  }
  const SquareMatrix ab = a * b;
  const SquareMatrix a2 = square(a);
  HiranoReport r;
  r.bab_eq_b = b * a * b == b;
  r.in_double_commutant = in_double_commutant(b, a);
  r.square_minus_ab_qnil = is_quasinilpotent_matrix(a2 - ab);
  r.ab_eq_ba = ab == b * a;
  r.drazin_residual_qnil = is_quasinilpotent_matrix(a - a2 * b);
  return r;
}

HiranoWitness make_witness(const SquareMatrix& a, const SquareMatrix& h,
                           std::string route, ErrorCode on_failure) {
  const SquareMatrix id = identity_like(a);
  const SquareMatrix a2 = square(a);
  const SquareMatrix h2 = square(h);
  const SquareMatrix ah = a * h;
  HiranoWitness w{a, h, a2 * h2, a2 - a2 * h2, id - ah, h,
                  verify_hirano_axioms(a, h), std::move(route)};

  auto fail = [&](const char* what) {
    throw Error(on_failure, std::string("witness for ") + a.to_string() +
                                " fails " + what + " (candidate " + h.to_string() + ")");
  };
  if (!w.report.bab_eq_b) fail("bab = b");
  if (!w.report.in_double_commutant) fail("b in comm^2(a)");
  if (!w.report.square_minus_ab_qnil) fail("a^2 - ab quasinilpotent");
  if (!w.report.ab_eq_ba) fail("ab = ba");
  if (!w.report.drazin_residual_qnil) fail("a - a^2 b quasinilpotent");
  if (!is_idempotent(w.p)) fail("p^2 = p");
  if (!is_quasinilpotent_matrix(w.qnil_part)) fail("a^2 - p quasinilpotent");
  if (!(ah == w.p)) fail("p = ab");
  if (!is_idempotent(ah)) fail("(ab)^2 = ab");
  if (!is_idempotent(w.pi)) fail("pi^2 = pi");
  if (!(h2 * a2 * h2 == h2)) fail("b^2 a^2 b^2 = b^2");
  return w;
}

HiranoWitness hirano_from_idempotent(const SquareMatrix& a, const SquareMatrix& p) {
  if (!(a.ring() == p.ring()) || a.dim() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "idempotent does not conform");
  }
  if (!is_idempotent(p)) {
    throw Error(ErrorCode::kPrecondition, "p is not idempotent");
  }
  if (!commutes(a, p)) {
    throw Error(ErrorCode::kPrecondition, "p does not commute with a");
  }
  const SquareMatrix id = identity_like(a);
  const SquareMatrix a2 = square(a);
  auto inv = try_invert_matrix(a2 + id - p);
  if (!inv) {
    throw Error(ErrorCode::kPrecondition,
                "a^2 + 1 - p is not invertible: a^2 - p is not quasinilpotent");
  }
  return make_witness(a, a * *inv * p, "idempotent", ErrorCode::kPrecondition);
}

// ---------------------------------------------------------------------------
// Fields

std::optional<HiranoWitness> hirano_field(const SquareMatrix& a) {
  require_field(a, "hirano_field");
  if (!square_spectrum_in_zero_one(a)) return std::nullopt;
  const SquareMatrix a2 = square(a);
  const SquareMatrix p = spectral_idempotent(a2, RingElement::zero(a.ring())).projector;
  HiranoWitness w = hirano_from_idempotent(a, p);
  w.route = "field";
  return w;
}

// ---------------------------------------------------------------------------
// 2x2 over local rings

std::string_view to_string(HiranoCase c) {
  switch (c) {
    case HiranoCase::kRadicalSquare: return "RadicalSquare";
    case HiranoCase::kUnitSquare: return "UnitSquare";
    case HiranoCase::kMixed: return "Mixed";
    case HiranoCase::kNoHirano: return "NoHirano";
  }
  return "?";
}

namespace {

void require_local_2x2(const SquareMatrix& a) {
  if (a.dim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "classifier needs a 2x2 matrix");
  }
  if (!a.ring().is_local()) {
    throw Error(ErrorCode::kUnsupported,
                "classifier needs a local base ring, got " + a.ring().name());
  }
}

SquareMatrix swap_matrix(const RingDescriptor& ring) {
  return SquareMatrix::from_rows(ring, {{0, 1}, {1, 0}});
}

// U = [[b, a - x1], [x1 - a, c]] for A^2 = [[a, b], [c, d]] with a a unit.
SquareMatrix mixed_transform(const SquareMatrix& sq, const RingElement& x1) {
  return SquareMatrix::from_rows(
      sq.ring(), std::vector<std::vector<RingElement>>{{sq(0, 1), sq(0, 0) - x1},
                                                       {x1 - sq(0, 0), sq(1, 0)}});
}

}  // namespace

Classification classify_local_2x2(const SquareMatrix& a) {
  require_local_2x2(a);
  const SquareMatrix sq = square(a);
  const RingElement d = det(a);
  const RingElement t = trace(sq);
  Classification c{.det = d, .trace_of_square = t};
  c.det_in_radical = in_jacobson_radical(d);
  c.trace_square_in_radical = in_jacobson_radical(t);
  c.det_square_in_one_plus_radical = in_one_plus_radical(d * d, 1);
  c.trace_square_in_two_plus_radical = in_one_plus_radical(t, 2);
  c.trace_square_in_one_plus_radical = in_one_plus_radical(t, 1);

  if (c.det_in_radical && c.trace_square_in_radical) {
    c.kind = HiranoCase::kRadicalSquare;
    return c;
  }
  if (c.det_square_in_one_plus_radical && c.trace_square_in_two_plus_radical) {
    c.kind = HiranoCase::kUnitSquare;
    return c;
  }
  if (c.det_in_radical && c.trace_square_in_one_plus_radical) {
    auto roots = quadratic_roots_in_ring(t, d * d);
    if (!roots) {
      c.failed = "quadratic-unsolvable";
      return c;
    }
    c.kind = HiranoCase::kMixed;
    // a + d = tr(A^2) is a unit in a local ring, so a or d is a unit.
    const bool use_swap = !is_unit(sq(0, 0));
    const SquareMatrix s = swap_matrix(a.ring());
    const SquareMatrix work = use_swap ? s * sq * s : sq;
    SquareMatrix u = mixed_transform(work, roots->x1);
    if (use_swap) u = s * u;
    c.roots = roots;
    c.transform = u;
    c.discriminant_sqrt = roots->x1 - roots->x2;
    return c;
  }
  if (c.det_in_radical) {
    c.failed = "trace-square-not-in-J-or-1+J";
  } else if (c.det_square_in_one_plus_radical) {
    c.failed = "trace-square-not-in-2+J";
  } else {
    c.failed = "det-square-not-in-1+J";
  }
  return c;
}

namespace {

std::optional<HiranoWitness> witness_from_classification(const SquareMatrix& a,
                                                         const Classification& c) {
  const RingDescriptor& ring = a.ring();
  const SquareMatrix id = identity_like(a);
  const SquareMatrix sq = square(a);
  SquareMatrix p(ring, 2);
  switch (c.kind) {
    case HiranoCase::kNoHirano:
      return std::nullopt;
    case HiranoCase::kRadicalSquare:
      break;
    case HiranoCase::kUnitSquare:
      p = id;
      break;
    case HiranoCase::kMixed: {
      const SquareMatrix& u = *c.transform;
      auto u_inv = try_invert_matrix(u);
      if (!u_inv) {
        throw Error(ErrorCode::kInternal, "Mixed-case transform is singular");
      }
      const SquareMatrix diag = SquareMatrix::diagonal(ring, {c.roots->x1, c.roots->x2});
      if (!(*u_inv * sq * u == diag)) {
        throw Error(ErrorCode::kInternal, "transform does not diagonalize A^2");
      }
      p = u * SquareMatrix::diagonal(ring, {0, 1}) * *u_inv;
      break;
    }
  }
  HiranoWitness w = hirano_from_idempotent(a, p);
  w.route = "local-2x2";

  // Necessary conditions for a 2x2 Hirano inverse over a local ring.
  const bool radical_square = in_radical_matrix(sq);
  const bool unit_square = in_radical_matrix(square(id - sq));
  bool split_roots = false;
  if (auto r = quadratic_roots_in_ring(trace(sq), det(sq))) {
    split_roots = in_jacobson_radical(r->x1) && in_one_plus_radical(r->x2, 1);
  }
  if (!radical_square && !unit_square && !split_roots) {
    throw Error(ErrorCode::kInternal, "witness violates the 2x2 necessary conditions");
  }
  return w;
}

}  // namespace

std::optional<HiranoWitness> hirano_local_2x2(const SquareMatrix& a) {
  return witness_from_classification(a, classify_local_2x2(a));
}

// ---------------------------------------------------------------------------
// Integers

std::optional<HiranoWitness> hirano_integer_2x2(const SquareMatrix& a) {
  if (a.ring().kind() != RingKind::kIntegers || a.dim() != 2) {
    throw Error(ErrorCode::kUnsupported, "hirano_integer_2x2 needs a 2x2 matrix over Z");
  }
  const SquareMatrix a2 = square(a);
  const SquareMatrix id = identity_like(a);
  const bool holds = a2.is_zero() || square(id - a2).is_zero() || a2 == square(a2);
  if (!holds) return std::nullopt;

  const RingDescriptor q = RingDescriptor::rationals();
  auto wq = hirano_field(change_ring(a, q));
  if (!wq) {
    throw Error(ErrorCode::kInternal, "integer criterion holds but Q has no inverse");
  }
  SquareMatrix h = [&] {
    try {
      return change_ring(wq->h, a.ring());
    } catch (const Error&) {
      throw Error(ErrorCode::kInternal, "Hirano inverse over Z is not integral");
    }
  }();
  return make_witness(a, h, "integer-2x2");
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {

HiranoOutcome local_scalar(const SquareMatrix& a) {
  const RingDescriptor& ring = a.ring();
  const RingElement& x = a(0, 0);
  HiranoOutcome out;
  out.route = "local-1x1";
  if (in_jacobson_radical(x)) {
    out.witness = hirano_from_idempotent(a, SquareMatrix(ring, 1));
  } else if (in_one_plus_radical(x * x, 1)) {
    out.witness = hirano_from_idempotent(a, SquareMatrix::identity(ring, 1));
  } else {
    out.failed = "square-not-in-J-or-1+J";
  }
  if (out.witness) out.witness->route = out.route;
  return out;
}

HiranoOutcome field_outcome(const SquareMatrix& a) {
  HiranoOutcome out;
  out.route = "field";
  out.witness = hirano_field(a);
  if (!out.witness) {
    out.failed = "square-spectrum-not-in-{0,1}: chi(A^2) = " +
                 char_poly(square(a)).to_string();
  }
  return out;
}

HiranoOutcome local_2x2_outcome(const SquareMatrix& a) {
  HiranoOutcome out;
  out.route = "local-2x2";
  out.classification = classify_local_2x2(a);
  out.witness = witness_from_classification(a, *out.classification);
  if (!out.witness) out.failed = out.classification->failed;
  return out;
}

HiranoOutcome crt_outcome(const SquareMatrix& a) {
  HiranoOutcome out;
  out.route = "crt";
  std::vector<SquareMatrix> parts;
  for (const auto& component : crt_project(a)) {
    HiranoOutcome local = hirano_inverse(component);
    if (!local.witness) {
      out.failed = "component " + component.ring().name() + ": " + local.failed;
      return out;
    }
    parts.push_back(local.witness->h);
  }
  out.witness = make_witness(a, crt_reconstruct(parts, a.ring()), "crt");
  return out;
}

HiranoOutcome integer_outcome(const SquareMatrix& a) {
  HiranoOutcome out;
  if (a.dim() == 2) {
    out.route = "integer-2x2";
    out.witness = hirano_integer_2x2(a);
    if (!out.witness) out.failed = "no-integer-condition";
    return out;
  }
  out.route = "integer";
  auto wq = hirano_field(change_ring(a, RingDescriptor::rationals()));
  if (!wq) {
    out.failed = "no-inverse-over-Q";
    return out;
  }
  try {
    out.witness = make_witness(a, change_ring(wq->h, a.ring()), out.route);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPrecondition) throw;
    out.failed = "inverse-over-Q-not-integral";
  }
  return out;
}

}  // namespace

std::optional<HiranoWitness> hirano_Zn(const SquareMatrix& a) {
  if (a.ring().kind() != RingKind::kIntegersMod) {
    throw Error(ErrorCode::kUnsupported, "hirano_Zn needs Z/nZ");
  }
  return hirano_inverse(a).witness;
}

HiranoOutcome hirano_inverse(const SquareMatrix& a) {
  const RingDescriptor& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::kRationals: {
      if (a.dim() != 2) return field_outcome(a);
      HiranoOutcome local = local_2x2_outcome(a);
      auto field = hirano_field(a);
      if (local.exists() != field.has_value() ||
          (field && !(field->h == local.witness->h))) {
        throw Error(ErrorCode::kInternal,
                    "classifier and field route disagree on " + a.to_string());
      }
      return local;
    }
    case RingKind::kIntegers:
      return integer_outcome(a);
    case RingKind::kPLocal:
      if (a.dim() == 1) return local_scalar(a);
      if (a.dim() == 2) return local_2x2_outcome(a);
      break;
    case RingKind::kIntegersMod: {
      if (ring.is_field()) return field_outcome(a);
      if (crt_split(ring.modulus()).size() > 1) return crt_outcome(a);
      if (a.dim() == 1) return local_scalar(a);
      if (a.dim() == 2) return local_2x2_outcome(a);
      break;
    }
  }
  throw Error(ErrorCode::kUnsupported,
              "no constructive route for " + std::to_string(a.dim()) + "x" +
                  std::to_string(a.dim()) + " matrices over " + ring.name());
}

// ---------------------------------------------------------------------------
// Tripotent + nilpotent

std::optional<TripotentSplit> tripotent_decompose(const SquareMatrix& a) {
  require_field(a, "tripotent_decompose");
  if (!square_spectrum_in_zero_one(a)) return std::nullopt;
  const RingDescriptor& ring = a.ring();
  const SquareMatrix id = identity_like(a);
  const RingElement one = RingElement::one(ring);
  // P(l) projects onto the generalized l-eigenspace.
  const SquareMatrix plus = id - spectral_idempotent(a, one).projector;
  SquareMatrix e = plus;
  if (!(one == -one)) e = plus - (id - spectral_idempotent(a, -one).projector);
  TripotentSplit split{e, a - e};
  if (!(e * e * e == e) || !is_nilpotent(split.nilpotent) ||
      !commutes(e, split.nilpotent) || !(e + split.nilpotent == a)) {
    throw Error(ErrorCode::kInternal, "tripotent decomposition failed verification");
  }
  return split;
}

}  // namespace ghinv
