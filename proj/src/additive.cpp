#include "ghinv/additive.hpp"

#include "ghinv/linear.hpp"

namespace ghinv {

namespace {

struct Inverses {
  HiranoWitness a;
  HiranoWitness b;
};

Inverses require_inverses(const SquareMatrix& a, const SquareMatrix& b) {
  auto wa = hirano(a);
  if (!wa) throw Error(ErrorCode::kPrecondition, "a has no Hirano inverse");
  auto wb = hirano(b);
  if (!wb) throw Error(ErrorCode::kPrecondition, "b has no Hirano inverse");
  return {std::move(*wa), std::move(*wb)};
}

SumHypotheses hypotheses_from(const SquareMatrix& a, const SquareMatrix& b,
                              const Inverses& inv) {
  const SquareMatrix& api = inv.a.pi;
  const SquareMatrix& bpi = inv.b.pi;
  SumHypotheses h;
  h.a_eq_a_bpi = a == a * bpi;
  h.bpi_b_api_eq_bpi_b = bpi * b * api == bpi * b;
  h.bpi_api_ba_eq_bpi_api_ab = bpi * api * b * a == bpi * api * a * b;
  return h;
}

// Stopping rule for a partial sum: two consecutive all-zero rounds.
struct SeriesState {
  std::size_t index = 0;
  std::size_t zero_run = 0;
  bool done = false;

  void record(bool zero_round) {
    ++index;
    zero_run = zero_round ? zero_run + 1 : 0;
    done = zero_run >= 2;
  }
};

std::optional<HiranoWitness> direct_witness(const SquareMatrix& s) {
  try {
    return hirano(s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupported) throw;
    return std::nullopt;
  }
}

}  // namespace

SumHypotheses check_sum_hypotheses(const SquareMatrix& a, const SquareMatrix& b) {
  return hypotheses_from(a, b, require_inverses(a, b));
}

SeriesSum additive_hirano(const SquareMatrix& a, const SquareMatrix& b) {
  const Inverses inv = require_inverses(a, b);
  const SumHypotheses hyp = hypotheses_from(a, b, inv);
  if (!hyp.all()) {
    throw Error(ErrorCode::kPrecondition, "sum hypotheses do not hold");
  }
  const SquareMatrix& ah = inv.a.h;
  const SquareMatrix& bh = inv.b.h;
  const SquareMatrix& api = inv.a.pi;
  const SquareMatrix s = a + b;
  const std::size_t cap = 2 * a.dim() * a.dim();

  // Inner sum over k of (a^h)^{k+2} b s^{k+1}; independent of n.
  SquareMatrix inner(a.ring(), a.dim());
  bool terminated = true;
  {
    SeriesState st;
    SquareMatrix r = square(ah) * b * s;
    while (!st.done && st.index < cap) {
      inner += r;
      st.record(r.is_zero());
      r = ah * r * s;
    }
    terminated = st.done;
  }

  // left(n) = (b^h)^{n+2} a s^n and right(n) = (a^h)^{n+2} b s^n. Index n
  // contributes left(n) (a^pi - inner - a^h b) - b^h a right(n) + b^pi right(n);
  // the first factor is s^pi on the range of b^pi, so once a contribution
  // vanishes every later one does.
  const SquareMatrix& bpi = inv.b.pi;
  const SquareMatrix ah_b = ah * b;
  const SquareMatrix bh_a = bh * a;
  const SquareMatrix complement = api - inner - ah_b;
  const SquareMatrix printed_complement = api - inner + ah_b;
  SquareMatrix total = bh * api + bpi * ah;
  SquareMatrix printed = bh * api;
  SquareMatrix left = square(bh) * a;
  SquareMatrix right = square(ah) * b;
  SeriesState st;
  while (!st.done && st.index < cap) {
    const SquareMatrix tail = bh_a * right;
    const SquareMatrix term = left * complement - tail + bpi * right;
    total += term;
    printed += left * printed_complement - tail;
    st.record(term.is_zero());
    left = bh * left * s;
    right = ah * right * s;
  }
  terminated = terminated && st.done;

  SeriesSum out{.witness = inv.b, .hypotheses = hyp, .terms = st.index,
                .terminated = terminated};
  if (terminated) out.literal_value = printed;
  auto direct = direct_witness(s);
  if (!terminated) {
    out.flags.push_back("series-nonterminating");
  } else {
    out.series_value = total;
    if (direct && !(direct->h == total)) out.flags.push_back("series-mismatch");
  }

  if (terminated && (!direct || direct->h == total)) {
    out.witness = make_witness(s, total, "series");
  } else if (direct) {
    out.witness = *direct;
  } else {
    throw Error(ErrorCode::kInternal,
                "series did not terminate and a + b has no direct route");
  }
  return out;
}

HiranoWitness orthogonal_sum(const SquareMatrix& a, const SquareMatrix& b) {
  if (!(a * b).is_zero() || !(b * a).is_zero()) {
    throw Error(ErrorCode::kPrecondition, "orthogonal sum needs ab = ba = 0");
  }
  const Inverses inv = require_inverses(a, b);
  return make_witness(a + b, inv.a.h + inv.b.h, "orthogonal-sum");
}

AbsorbingHypotheses check_absorbing_hypotheses(const SquareMatrix& a,
                                               const SquareMatrix& b) {
  const Inverses inv = require_inverses(a, b);
  const SquareMatrix& api = inv.a.pi;
  const SquareMatrix& bpi = inv.b.pi;
  AbsorbingHypotheses h;
  h.commute = a * b == b * a;
  h.a_eq_a_bpi = a == a * bpi;
  h.literal_bpi_eq_b_api = bpi == b * api;
  h.literal_b_api_eq_bpi_b = b * api == bpi * b;
  h.bpi_b_api_eq_bpi_b = bpi * b * api == bpi * b;
  return h;
}

HiranoWitness absorbing_sum(const SquareMatrix& a, const SquareMatrix& b) {
  if (!check_absorbing_hypotheses(a, b).satisfied()) {
    throw Error(ErrorCode::kPrecondition, "absorbing-sum identities do not hold");
  }
  return make_witness(a + b, require_inverses(a, b).b.h, "absorbing-sum");
}

namespace {

// Columns of m that form a basis of its column space.
std::vector<std::size_t> column_basis(const SquareMatrix& m) {
  Rows rows(m.dim(), Vector(m.dim(), RingElement::zero(m.ring())));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  }
  return row_reduce(rows, m.dim(), m.ring());
}

SquareMatrix corner(const SquareMatrix& m, std::size_t from, std::size_t size) {
  std::vector<RingElement> entries;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) entries.push_back(m(from + i, from + j));
  }
  return SquareMatrix(m.ring(), size, std::move(entries));
}

}  // namespace

std::optional<HiranoWitness> triangular_hirano(const SquareMatrix& x,
                                               const SquareMatrix& p) {
  if (!x.ring().is_field()) {
    throw Error(ErrorCode::kUnsupported, "corner-ring reduction needs a field");
  }
  const BlockView blocks = peirce_blocks(x, p);
  if (!blocks.bottom_left.is_zero()) {
    throw Error(ErrorCode::kPrecondition, "x is not block triangular: (1-p) x p != 0");
  }
  const std::size_t k = x.dim();
  const SquareMatrix q = SquareMatrix::identity(x.ring(), k) - p;
  const auto range_p = column_basis(p);
  const auto range_q = column_basis(q);
  const std::size_t r = range_p.size();

  // Columns of S: a basis of range(p) followed by a basis of range(1 - p).
  SquareMatrix s(x.ring(), k);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t i = 0; i < k; ++i) s.set(i, c, p(i, range_p[c]));
  }
  for (std::size_t c = 0; c < range_q.size(); ++c) {
    for (std::size_t i = 0; i < k; ++i) s.set(i, r + c, q(i, range_q[c]));
  }
  auto s_inv = try_invert_matrix(s);
  if (!s_inv) throw Error(ErrorCode::kInternal, "Peirce basis is singular");
  const SquareMatrix m = *s_inv * x * s;

  if (r > 0 && !hirano_field(corner(m, 0, r))) return std::nullopt;
  if (r < k && !hirano_field(corner(m, r, k - r))) return std::nullopt;

  auto w = hirano_field(x);
  if (!w) {
    throw Error(ErrorCode::kInternal,
                "diagonal corners have inverses but the triangular matrix has none");
  }
  w->route = "triangular";
  return w;
}

}  // namespace ghinv
