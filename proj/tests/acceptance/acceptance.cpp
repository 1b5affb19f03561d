// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ghinv/additive.hpp"
#include "ghinv/cline.hpp"
#include "ghinv/hirano.hpp"
#include "ghinv/oracle.hpp"
#include "ghinv/spectral.hpp"
#include "support/families.hpp"
#include "support/oracles.hpp"

using namespace ghinv;
using ghinv::testing::Generator;
using oracle::FiniteMatrixRing;
using Index = FiniteMatrixRing::Index;

namespace {

const RingDescriptor kQ = RingDescriptor::rationals();
const RingDescriptor kZ = RingDescriptor::integers();
const RingDescriptor kZ2loc = RingDescriptor::p_local(2);

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass || notes.size() < 8) notes.push_back("violated: " + what);
      pass = false;
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

// Every witness produced by the suite is recorded here and audited by the
// structural-identity criterion.
std::vector<HiranoWitness>& witness_log() {
  static std::vector<HiranoWitness> log;
  return log;
}

void record(const HiranoWitness& w) { witness_log().push_back(w); }
void record(const std::optional<HiranoWitness>& w) {
  if (w) record(*w);
}

// Axioms over M_k(Z/n) decided by the brute-force oracle.
bool oracle_axioms(const FiniteMatrixRing& r, Index a, Index b) {
  const auto c2 = r.comm2(a);
  const bool in_c2 = std::find(c2.begin(), c2.end(), b) != c2.end();
  return r.mul(r.mul(b, a), b) == b && in_c2 && r.is_qnil(r.sub(r.mul(a, a), r.mul(a, b)));
}

Outcome example_no_inverse() {
  Outcome out;
  const auto a = SquareMatrix::from_rows(kZ2loc, {{1, 2}, {3, 4}});
  classify_local_2x2(a);  // warm-up
  const auto start = Clock::now();
  const Classification c = classify_local_2x2(a);
  const double ms = elapsed_ms(start);
  out.require(c.det == RingElement(kZ2loc, -2), "det(A) = -2");
  out.require(c.det_in_radical, "det(A) in J");
  out.require(c.trace_of_square == RingElement(kZ2loc, 29), "tr(A^2) = 29");
  out.require(c.trace_square_in_one_plus_radical, "tr(A^2) in 1+J");
  out.require(c.kind == HiranoCase::kNoHirano, "NoHirano");
  out.require(c.failed == "quadratic-unsolvable", "failed = quadratic-unsolvable");
  out.require(ms < 1.0, "runtime < 1 ms");
  std::ostringstream s;
  s << "case " << to_string(c.kind) << ", failed " << c.failed << ", " << ms << " ms";
  out.note(s.str());
  return out;
}

Outcome example_mixed() {
  Outcome out;
  const auto a = SquareMatrix::from_rows(kZ2loc, {{5, 6}, {3, 2}});
  hirano_local_2x2(a);  // warm-up
  const auto start = Clock::now();
  const Classification c = classify_local_2x2(a);
  const auto w = hirano_local_2x2(a);
  const double ms = elapsed_ms(start);
  out.require(c.kind == HiranoCase::kMixed, "Mixed");
  out.require(c.roots && c.roots->x1 == RingElement(kZ2loc, 64) &&
                  c.roots->x2 == RingElement(kZ2loc, 1),
              "roots {64, 1}");
  out.require(w.has_value(), "witness exists");
  if (w) {
    record(w);
    const auto r = verify_hirano_axioms(a, w->h);
    out.require(r.bab_eq_b && r.in_double_commutant && r.square_minus_ab_qnil, "axioms");
    out.note("h = " + w->h.to_string());
  }
  out.require(ms < 10.0, "runtime < 10 ms");
  std::ostringstream s;
  s << ms << " ms";
  out.note(s.str());
  return out;
}

Outcome example_z5() {
  Outcome out;
  const FiniteMatrixRing z5(5, 1);
  out.require(!z5.brute_force_hirano(3).has_value(), "-2 mod 5 has no inverse");
  std::optional<Index> h;
  try {
    h = z5.brute_force_hirano(4);
  } catch (const Error&) {
    out.require(false, "-1 mod 5 has a unique inverse");
  }
  out.require(h.has_value(), "-1 mod 5 has an inverse");
  if (h) {
    out.require(oracle_axioms(z5, 4, *h), "oracle witness satisfies the axioms");
    const auto w = hirano_Zn(z5.element(4));
    out.require(w && z5.index_of(w->h) == *h, "library agrees with the oracle");
    record(w);
    out.note("oracle witness for -1 mod 5 is " + std::to_string(*h));
    if (*h != 1) out.note("FLAG: differs from the value 1 stated in the source text");
  }
  return out;
}

Outcome integer_sweep() {
  Outcome out;
  const auto start = Clock::now();
  std::size_t count = 0, found = 0;
  const auto id = SquareMatrix::identity(kZ, 2);
  for (std::int64_t x = -4; x <= 4; ++x) {
    for (std::int64_t y = -4; y <= 4; ++y) {
      for (std::int64_t z = -4; z <= 4; ++z) {
        for (std::int64_t t = -4; t <= 4; ++t) {
          const auto a = SquareMatrix::from_rows(kZ, {{x, y}, {z, t}});
          const auto a2 = a * a;
          const auto c = id - a2;
          const bool criterion = a2.is_zero() || (c * c).is_zero() || a2 == a2 * a2;
          const auto w = hirano_integer_2x2(a);
          ++count;
          out.require(w.has_value() == criterion, "existence iff criterion at " + a.to_string());
          if (w) {
            ++found;
            record(w);
            const auto r = verify_hirano_axioms(change_ring(a, kQ), change_ring(w->h, kQ));
            out.require(r.is_hirano(), "witness verifies over Q at " + a.to_string());
          }
        }
      }
    }
  }
  const double ms = elapsed_ms(start);
  out.require(count == 6561, "6561 matrices");
  out.require(ms < 30'000.0, "runtime < 30 s");
  std::ostringstream s;
  s << count << " matrices, " << found << " with inverse, " << ms / 1000.0 << " s";
  out.note(s.str());
  return out;
}

void compare_with_oracle(const FiniteMatrixRing& r, Outcome& out, std::size_t& checked,
                         std::size_t& uniqueness_violations) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto a = static_cast<Index>(i);
    std::optional<Index> expected;
    try {
      expected = r.brute_force_hirano(a);
    } catch (const Error&) {
      ++uniqueness_violations;
      continue;
    }
    const auto got = hirano_Zn(r.element(a));
    record(got);
    ++checked;
    out.require(got.has_value() == expected.has_value(),
                "existence over " + r.name() + " at " + r.element(a).to_string());
    if (got && expected) {
      out.require(r.index_of(got->h) == *expected,
                  "witness over " + r.name() + " at " + r.element(a).to_string());
    }
  }
}

Outcome oracle_equivalence() {
  Outcome out;
  const auto start = Clock::now();
  std::size_t checked = 0, violations = 0;
  for (std::int64_t n = 2; n <= 30; ++n) compare_with_oracle(FiniteMatrixRing(n, 1), out, checked, violations);
  compare_with_oracle(FiniteMatrixRing(2, 2), out, checked, violations);
  compare_with_oracle(FiniteMatrixRing(3, 2), out, checked, violations);
  const double ms = elapsed_ms(start);
  out.require(violations == 0, "no uniqueness violations");
  out.require(checked == 464 + 16 + 81, "all elements compared");
  out.require(ms < 120'000.0, "runtime < 2 min");
  std::ostringstream s;
  s << checked << " elements, " << violations << " uniqueness violations, " << ms / 1000.0 << " s";
  out.note(s.str());
  return out;
}

Outcome hirano_implies_drazin() {
  Outcome out;
  Generator gen(2002);
  std::size_t both = 0, drazin_only = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 4));
    const auto a = trial % 2 ? ghinv::testing::hirano_invertible(gen, kQ, k) : gen.matrix(kQ, k, 3);
    const auto w = hirano_field(a);
    const auto d = drazin_field(a);
    if (w) {
      ++both;
      record(w);
      out.require(w->h == d, "Hirano inverse equals Drazin inverse at " + a.to_string());
    } else {
      ++drazin_only;
      const auto r = verify_hirano_axioms(a, d);
      out.require(r.bab_eq_b && r.in_double_commutant && r.drazin_residual_qnil &&
                      !r.square_minus_ab_qnil,
                  "only axiom (iii) fails at " + a.to_string());
    }
  }
  std::ostringstream s;
  s << "2000 matrices: " << both << " Hirano, " << drazin_only << " Drazin only";
  out.note(s.str());
  return out;
}

Outcome cline_suite() {
  Outcome out;
  const FiniteMatrixRing r(2, 2);
  std::size_t triples = 0, with_inverse = 0;
  for (std::size_t ia = 0; ia < r.size(); ++ia) {
    for (std::size_t ib = 0; ib < r.size(); ++ib) {
      for (std::size_t ic = 0; ic < r.size(); ++ic) {
        const auto a = static_cast<Index>(ia), b = static_cast<Index>(ib), c = static_cast<Index>(ic);
        if (r.mul(r.mul(a, b), a) != r.mul(r.mul(a, c), a)) continue;
        ++triples;
        const auto ac = r.brute_force_hirano(r.mul(a, c));
        const auto ba = r.brute_force_hirano(r.mul(b, a));
        const std::string where = r.element(a).to_string() + ", " + r.element(b).to_string() +
                                  ", " + r.element(c).to_string();
        out.require(ac.has_value() == ba.has_value(), "existence transfers at " + where);
        const auto w = cline_generalized(r.element(a), r.element(b), r.element(c));
        record(w);
        out.require(w.has_value() == ba.has_value(), "formula existence at " + where);
        if (w && ba) {
          ++with_inverse;
          out.require(r.index_of(w->h) == *ba, "formula equals oracle at " + where);
        }
      }
    }
  }
  Generator gen(4141);
  std::size_t random_with_inverse = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = ghinv::testing::cline_instance(gen, kQ);
    out.require(inst.a * inst.b * inst.a == inst.a * inst.c * inst.a, "instance has aba = aca");
    const auto ac = hirano(inst.a * inst.c);
    const auto ba = hirano(inst.b * inst.a);
    out.require(ac.has_value() == ba.has_value(), "existence transfers (random)");
    const auto w = cline_generalized(inst.a, inst.b, inst.c);
    record(w);
    out.require(w.has_value() == ba.has_value(), "formula existence (random)");
    if (w && ba) {
      ++random_with_inverse;
      out.require(w->h == ba->h, "formula equals direct inverse (random)");
    }
    // Classical case c = b, both directions.
    const auto ab = hirano(inst.a * inst.b);
    const auto ba_b = hirano(inst.b * inst.a);
    out.require(ab.has_value() == ba_b.has_value(), "ab and ba invertibility agree");
  }
  std::ostringstream s;
  s << triples << " M2(Z/2) triples (" << with_inverse << " with inverse), 500 random over Q ("
    << random_with_inverse << " with inverse)";
  out.note(s.str());
  return out;
}

Outcome multiplicative_suite() {
  Outcome out;
  Generator gen(4545);
  std::size_t products = 0, powers = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto [a, b] = ghinv::testing::commuting_pair(gen, kQ);
    out.require(a * b == b * a, "pair commutes");
    const auto ha = hirano(a);
    const auto hb = hirano(b);
    if (ha && hb) {
      const auto hab = hirano(a * b);
      out.require(hab && hab->h == ha->h * hb->h, "(ab)^h = a^h b^h at " + a.to_string());
      const auto w = product_commuting(a, b);
      record(w);
      out.require(w && hab && w->h == hab->h, "product rule witness");
      ++products;
    }
    if (ha) {
      for (int n = 1; n <= 4; ++n) {
        const auto hn = hirano(pow(a, static_cast<unsigned>(n)));
        out.require(hn && hn->h == pow(ha->h, static_cast<unsigned>(n)),
                    "(a^n)^h = (a^h)^n at " + a.to_string());
        const auto w = power_formula(a, n);
        record(w);
        ++powers;
      }
    }
  }
  std::ostringstream s;
  s << "500 pairs: " << products << " product checks, " << powers << " power checks";
  out.note(s.str());
  return out;
}

Outcome additive_suite() {
  Outcome out;
  Generator gen(5353);
  std::map<std::size_t, std::size_t> term_counts;
  const std::size_t pairs = 240;
  std::size_t printed_matches = 0, coupled = 0;
  for (std::size_t trial = 0; trial < pairs; ++trial) {
    const auto pair = ghinv::testing::additive_instance(gen, kQ);
    const auto hyp = check_sum_hypotheses(pair.a, pair.b);
    out.require(hyp.all(), "constructed pair satisfies the hypotheses");
    const auto s = additive_hirano(pair.a, pair.b);
    record(s.witness);
    out.require(s.terminated, "series terminates under the cap");
    out.require(s.flags.empty(), "no series flags");
    const auto direct = hirano(pair.a + pair.b);
    out.require(direct && s.series_value && *s.series_value == direct->h,
                "series equals direct witness");
    ++term_counts[s.terms];
    if (s.literal_value && s.series_value && *s.literal_value == *s.series_value) ++printed_matches;
    if (!(hirano(pair.a)->h * pair.b).is_zero()) ++coupled;
  }

  // Commuting nilpotents: the sum has inverse 0.
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = gen.strictly_upper(kQ, 3, 3);
    const auto s = additive_hirano(n, square(n) - n * n * n);
    record(s.witness);
    out.require(s.witness.h.is_zero(), "commuting nilpotents sum to inverse 0");
  }

  // Absorbing sums: b invertible part, a nilpotent where b vanishes.
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 4;
    SquareMatrix b(kQ, k), a(kQ, k);
    b.set(0, 0, RingElement(kQ, gen.integer(0, 1) ? 1 : -1));
    b.set(1, 1, RingElement(kQ, gen.integer(0, 1) ? 1 : -1));
    a.set(2, 3, RingElement(kQ, gen.integer(-3, 3)));
    const auto s = gen.unimodular(kQ, k, 2);
    const auto si = *try_invert_matrix(s);
    const auto aa = s * a * si, bb = s * b * si;
    const auto w = absorbing_sum(aa, bb);
    record(w);
    const auto direct = hirano(aa + bb);
    out.require(direct && direct->h == w.h, "absorbing sum equals direct witness");
  }

  // Orthogonal sums, exhaustive over M2(Z/2).
  const FiniteMatrixRing r(2, 2);
  std::size_t orthogonal = 0;
  for (std::size_t ia = 0; ia < r.size(); ++ia) {
    for (std::size_t ib = 0; ib < r.size(); ++ib) {
      const auto a = static_cast<Index>(ia), b = static_cast<Index>(ib);
      if (r.mul(a, b) != r.zero() || r.mul(b, a) != r.zero()) continue;
      if (!r.brute_force_hirano(a) || !r.brute_force_hirano(b)) continue;
      ++orthogonal;
      const auto expected = r.brute_force_hirano(r.add(a, b));
      const auto w = orthogonal_sum(r.element(a), r.element(b));
      record(w);
      out.require(expected && r.index_of(w.h) == *expected,
                  "orthogonal sum equals oracle at " + r.element(a).to_string() + ", " +
                      r.element(b).to_string());
    }
  }

  std::ostringstream s;
  s << pairs << " series pairs, term counts {";
  bool first = true;
  for (const auto& [terms, n] : term_counts) {
    s << (first ? "" : ", ") << terms << ": " << n;
    first = false;
  }
  s << "}; " << coupled << " pairs with a^h b != 0; printed form without the corner term agrees on "
    << printed_matches << "/" << pairs << "; " << orthogonal << " orthogonal M2(Z/2) pairs";
  out.note(s.str());
  return out;
}

Outcome structural_identities() {
  Outcome out;
  std::size_t tripotent_checks = 0;
  for (const auto& w : witness_log()) {
    const auto ah = w.a * w.h;
    out.require(is_idempotent(ah), "a h idempotent for " + w.a.to_string());
    out.require(w.p == square(w.a) * square(w.h), "p = a^2 h^2 for " + w.a.to_string());
    out.require(w.report.is_hirano(), "axioms for " + w.a.to_string());
    if (w.a.ring().is_field()) {
      const auto split = tripotent_decompose(w.a);
      out.require(split.has_value(), "tripotent split exists for " + w.a.to_string());
      if (split) {
        const auto& e = split->tripotent;
        const auto& n = split->nilpotent;
        out.require(e * e * e == e, "E^3 = E");
        out.require(is_nilpotent(n), "N nilpotent");
        out.require(e * n == n * e, "EN = NE");
        out.require(e + n == w.a, "E + N = A");
        ++tripotent_checks;
      }
    }
  }
  std::ostringstream s;
  s << witness_log().size() << " witnesses audited, " << tripotent_checks << " tripotent round trips";
  out.note(s.str());
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "2x2 over Z_(2) without inverse: quadratic unsolvable", example_no_inverse},
      {2, "2x2 over Z_(2) in the mixed case with roots 1 and 64", example_mixed},
      {3, "inverses of -2 and -1 in Z/5 by brute force", example_z5},
      {4, "integer 2x2 criterion over all entries in [-4, 4]", integer_sweep},
      {5, "Z/n (n <= 30), M2(Z/2), M2(Z/3) agree with the oracle", oracle_equivalence},
      {6, "Hirano inverse is the Drazin inverse (2000 random over Q)", hirano_implies_drazin},
      {7, "Cline transfer under aba = aca", cline_suite},
      {8, "commuting products and powers", multiplicative_suite},
      {9, "additive series, absorbing and orthogonal sums", additive_suite},
      {10, "structural identities on every produced witness", structural_identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = Clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = elapsed_ms(start) / 1000.0;
    failures += out.pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
