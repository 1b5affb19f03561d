#pragma once

// Random instances satisfying the hypotheses of the transfer and sum rules.

#include "support/oracles.hpp"

namespace ghinv::testing {

// A = U diag(...) U^{-1} with diagonal entries drawn from {-1, 0, 1} and a
// strictly upper part: a matrix whose square has spectrum in {0, 1}.
inline SquareMatrix hirano_invertible(Generator& gen, const RingDescriptor& ring,
                                      std::size_t dim) {
  const auto u = gen.unimodular(ring, dim, 2);
  SquareMatrix core = gen.strictly_upper(ring, dim, 2);
  for (std::size_t i = 0; i < dim; ++i) core.set(i, i, RingElement(ring, gen.integer(-1, 1)));
  return u * core * *try_invert_matrix(u);
}

struct ClineInstance {
  SquareMatrix a, b, c;
};

// c = b + z with a z a = 0: a = U D V with D singular, z = V^{-1} E U^{-1}
// where E lives on the rows and columns killed by D.
inline ClineInstance cline_instance(Generator& gen, const RingDescriptor& ring) {
  const std::size_t k = static_cast<std::size_t>(gen.integer(2, 4));
  const auto u = gen.unimodular(ring, k, 2);
  const auto v = gen.unimodular(ring, k, 2);
  SquareMatrix d(ring, k);
  for (std::size_t i = 0; i + 1 < k; ++i) d.set(i, i, RingElement(ring, gen.integer(-1, 1)));
  SquareMatrix e(ring, k);
  for (std::size_t i = 0; i < k; ++i) {
    e.set(k - 1, i, RingElement(ring, gen.integer(-2, 2)));
    e.set(i, k - 1, RingElement(ring, gen.integer(-2, 2)));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i).is_zero()) {
      for (std::size_t j = 0; j < k; ++j) e.set(i, j, RingElement(ring, gen.integer(-1, 1)));
    }
  }
  const auto a = u * d * v;
  const auto z = *try_invert_matrix(v) * e * *try_invert_matrix(u);
  // b: half the time a Hirano-invertible shape so that ba often has one.
  const auto b = gen.integer(0, 1) ? hirano_invertible(gen, ring, k) * *try_invert_matrix(v)
                                   : gen.matrix(ring, k, 1);
  return {a, b, b + z};
}

struct SumPair {
  SquareMatrix a, b;
};

// b = S diag(B1, B2) S^{-1} and a = S [[0, A1], [0, A2]] S^{-1}, with B1
// invertible of spectrum {1, -1}. In a basis T of the second block,
// A2 = diag(X1, X2) with X1^2 of spectrum {1} and X2 nilpotent, and
// B2 = [[0, Y12], [0, Y22]] with Y22 a polynomial in X2 without constant
// term. Then a = a b^pi, b^pi b a^pi = b^pi b and b^pi a^pi (ba - ab) = 0.
inline SumPair additive_instance(Generator& gen, const RingDescriptor& ring) {
  const std::size_t k1 = static_cast<std::size_t>(gen.integer(1, 2));
  const std::size_t m1 = static_cast<std::size_t>(gen.integer(0, 2));
  const std::size_t m2 = static_cast<std::size_t>(gen.integer(m1 == 0 ? 1 : 0, 2));
  const std::size_t k2 = m1 + m2;
  const std::size_t k = k1 + k2;

  SquareMatrix b1 = gen.strictly_upper(ring, k1, 2);
  for (std::size_t i = 0; i < k1; ++i) b1.set(i, i, RingElement(ring, gen.integer(0, 1) ? 1 : -1));

  SquareMatrix a2(ring, k2), b2(ring, k2);
  if (m1 > 0) {
    SquareMatrix x1 = gen.strictly_upper(ring, m1, 2);
    for (std::size_t i = 0; i < m1; ++i) x1.set(i, i, RingElement(ring, gen.integer(0, 1) ? 1 : -1));
    for (std::size_t i = 0; i < m1; ++i) {
      for (std::size_t j = 0; j < m1; ++j) a2.set(i, j, x1(i, j));
      for (std::size_t j = 0; j < m2; ++j) b2.set(i, m1 + j, RingElement(ring, gen.integer(-2, 2)));
    }
  }
  if (m2 > 0) {
    const SquareMatrix x2 = gen.strictly_upper(ring, m2, 2);
    const SquareMatrix y22 = RingElement(ring, gen.integer(-2, 2)) * x2 +
                             RingElement(ring, gen.integer(-2, 2)) * (x2 * x2);
    for (std::size_t i = 0; i < m2; ++i) {
      for (std::size_t j = 0; j < m2; ++j) {
        a2.set(m1 + i, m1 + j, x2(i, j));
        b2.set(m1 + i, m1 + j, y22(i, j));
      }
    }
  }
  const auto t = gen.unimodular(ring, k2, 1);
  const auto t_inv = *try_invert_matrix(t);
  a2 = t * a2 * t_inv;
  b2 = t * b2 * t_inv;

  SquareMatrix bm(ring, k), am(ring, k);
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k1; ++j) bm.set(i, j, b1(i, j));
    for (std::size_t j = 0; j < k2; ++j) am.set(i, k1 + j, RingElement(ring, gen.integer(-2, 2)));
  }
  for (std::size_t i = 0; i < k2; ++i) {
    for (std::size_t j = 0; j < k2; ++j) {
      am.set(k1 + i, k1 + j, a2(i, j));
      bm.set(k1 + i, k1 + j, b2(i, j));
    }
  }
  const auto s = gen.unimodular(ring, k, 1);
  const auto s_inv = *try_invert_matrix(s);
  return {s * am * s_inv, s * bm * s_inv};
}

// Polynomials in a common matrix commute.
inline std::pair<SquareMatrix, SquareMatrix> commuting_pair(Generator& gen,
                                                            const RingDescriptor& ring) {
  const std::size_t k = static_cast<std::size_t>(gen.integer(1, 4));
  const auto base = hirano_invertible(gen, ring, k);
  auto poly_in = [&](const SquareMatrix& m) {
    SquareMatrix acc(ring, k);
    SquareMatrix power = SquareMatrix::identity(ring, k);
    const auto degree = gen.integer(1, 3);
    for (std::int64_t i = 0; i <= degree; ++i) {
      acc += RingElement(ring, gen.integer(-1, 1)) * power;
      power = power * m;
    }
    return acc;
  };
  return {poly_in(base), poly_in(base)};
}

}  // namespace ghinv::testing
