#include <doctest.h>

#include <set>

#include "ghinv/commutant.hpp"
#include "ghinv/linear.hpp"
#include "ghinv/oracle.hpp"
#include "support/oracles.hpp"

using namespace ghinv;
using ghinv::testing::Generator;

namespace {

const RingDescriptor kQ = RingDescriptor::rationals();

// Additive span of the generators inside a finite matrix ring.
std::set<oracle::FiniteMatrixRing::Index> span_of(const oracle::FiniteMatrixRing& r,
                                                  const std::vector<SquareMatrix>& gens) {
  std::set<oracle::FiniteMatrixRing::Index> span{r.zero()};
  std::vector<oracle::FiniteMatrixRing::Index> frontier{r.zero()};
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      const auto y = r.add(x, r.index_of(g));
      if (span.insert(y).second) frontier.push_back(y);
    }
  }
  return span;
}

}  // namespace

TEST_CASE("field nullspace") {
  Generator gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 5));
    const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 6));
    Rows m(rows);
    std::vector<std::vector<BigRational>> mq(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const auto v = gen.integer(-1, 1) * gen.integer(0, 3);
        m[i].emplace_back(kQ, v);
        mq[i].push_back(v);
      }
    }
    const auto basis = nullspace_field(m, cols, kQ);
    CHECK(basis.size() == cols - ghinv::testing::rank_q(mq));
    for (const auto& x : basis) {
      for (std::size_t i = 0; i < rows; ++i) {
        RingElement acc = RingElement::zero(kQ);
        for (std::size_t j = 0; j < cols; ++j) acc += m[i][j] * x[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("Howell form") {
  // Row module of [[2, 0]] over Z/4 also contains the annihilator relation.
  const auto h = howell_form({{2, 2}, {0, 2}}, 2, 4);
  CHECK_FALSE(h.empty());
  for (const auto& row : h) {
    for (auto v : row) {
      CHECK(v >= 0);
      CHECK(v < 4);
    }
  }
}

TEST_CASE("centralizers over fields") {
  auto gens = centralizer_generators(SquareMatrix::identity(kQ, 2));
  CHECK(gens.size() == 4);
  gens = centralizer_generators(SquareMatrix::diagonal(kQ, {1, 2}));
  CHECK(gens.size() == 2);
  for (const auto& g : gens) {
    CHECK(g(0, 1).is_zero());
    CHECK(g(1, 0).is_zero());
  }
}

TEST_CASE("centralizers over Z/4 are complete") {
  const oracle::FiniteMatrixRing r(4, 2);
  const auto z4 = RingDescriptor::integers_mod(4);
  const auto nil = SquareMatrix::from_rows(z4, {{0, 1}, {0, 0}});
  for (const auto& g : centralizer_generators(nil)) CHECK(commutes(nil, g));

  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<oracle::FiniteMatrixRing::Index>(i);
    const auto gens = centralizer_generators(r.element(a));
    const auto span = span_of(r, gens);
    const auto& comm = r.comm(a);
    const std::set<oracle::FiniteMatrixRing::Index> expected(comm.begin(), comm.end());
    if (span != expected) FAIL("centralizer span differs for ", r.element(a).to_string());
  }
}

TEST_CASE("centralizers over Z/6 and Z are complete") {
  const oracle::FiniteMatrixRing r(6, 2, 2'000'000);
  for (std::size_t i = 0; i < r.size(); i += 37) {
    const auto a = static_cast<oracle::FiniteMatrixRing::Index>(i);
    const auto span = span_of(r, centralizer_generators(r.element(a)));
    CHECK(span.size() == r.comm(a).size());
  }
  const auto z = RingDescriptor::integers();
  const auto a = SquareMatrix::from_rows(z, {{1, 2}, {3, 4}});
  for (const auto& g : centralizer_generators(a)) CHECK(commutes(a, g));
}

TEST_CASE("double commutant membership") {
  const auto a = SquareMatrix::from_rows(kQ, {{1, 2}, {0, 3}});
  CHECK(in_double_commutant(square(a), a));
  CHECK_FALSE(in_double_commutant(SquareMatrix::from_rows(kQ, {{0, 1}, {0, 0}}),
                                  SquareMatrix::identity(kQ, 2)));

  for (std::int64_t n : {2, 3, 4}) {
    const oracle::FiniteMatrixRing r(n, 2);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto ai = static_cast<oracle::FiniteMatrixRing::Index>(i);
      const auto c2 = r.comm2(ai);
      const std::set<oracle::FiniteMatrixRing::Index> expected(c2.begin(), c2.end());
      const auto am = r.element(ai);
      for (std::size_t j = 0; j < r.size(); ++j) {
        const auto bj = static_cast<oracle::FiniteMatrixRing::Index>(j);
        if (in_double_commutant(r.element(bj), am) != expected.contains(bj)) {
          FAIL("comm2 disagreement in ", r.name(), " for a = ", am.to_string(), ", b = ",
               r.element(bj).to_string());
        }
      }
    }
  }

  Generator gen(22);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 4));
    const auto m = gen.matrix(kQ, k, 2);
    const auto b = trial % 2 ? gen.matrix(kQ, k, 2) : square(m) - m + SquareMatrix::identity(kQ, k);
    CHECK(in_double_commutant(b, m) == ghinv::testing::is_polynomial_in(b, m));
  }
}
