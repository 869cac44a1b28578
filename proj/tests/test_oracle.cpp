// The skein-recursion HOMFLY evaluator: pinned values, the defining skein
// relation checked after the fact, Markov invariance, and derivative limits.

#include "braidsurf/oracle.hpp"

#include "braidsurf/random.hpp"

#include <gtest/gtest.h>

using namespace braidsurf;

namespace {

LaurentPoly2 trefoil_homfly() {
  LaurentPoly2 p;
  p.add_term(-2, 2, 1);
  p.add_term(-2, 0, 2);
  p.add_term(-4, 0, -1);
  return p;
}

LaurentPoly2 hopf_homfly() {
  // a^-1 z + (a^-1 - a^-3) z^-1
  LaurentPoly2 p;
  p.add_term(-1, 1, 1);
  p.add_term(-1, -1, 1);
  p.add_term(-3, -1, -1);
  return p;
}

}  // namespace

TEST(Oracle, PinnedValues) {
  const HomflyOracle oracle;
  EXPECT_EQ(oracle.homfly(parse_braid("1 1 1", 2)), trefoil_homfly());
  EXPECT_EQ(oracle.homfly(parse_braid("1 1", 2)), hopf_homfly());
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(oracle.homfly(parse_braid("", r)), unlink_homfly(r));
  // unknots in several presentations
  EXPECT_EQ(oracle.homfly(parse_braid("1", 2)), LaurentPoly2::constant(1));
  EXPECT_EQ(oracle.homfly(parse_braid("1 1 -1", 2)), LaurentPoly2::constant(1));
  EXPECT_EQ(oracle.homfly(parse_braid("1 2 3", 4)), LaurentPoly2::constant(1));
  // freely reducible word whose closure is the 2-unlink, not an unknot
  EXPECT_EQ(oracle.homfly(parse_braid("-1 1", 2)), unlink_homfly(2));
}

TEST(Oracle, ConwayValues) {
  const HomflyOracle oracle;
  EXPECT_EQ(oracle.conway(parse_braid("1 1 1", 2)), LaurentPoly1::term(1, 2) + LaurentPoly1::constant(1));
  EXPECT_TRUE(oracle.conway(parse_braid("", 2)).is_zero());
  EXPECT_EQ(oracle.conway(parse_braid("1 1", 2)), LaurentPoly1::term(1, 1));
  EXPECT_EQ(oracle.conway(parse_braid("1 -2 1 -2", 3)),
            LaurentPoly1::constant(1) + LaurentPoly1::term(-1, 2));
}

TEST(Oracle, DerivativeValues) {
  const HomflyOracle oracle;
  const BraidWord trefoil = parse_braid("1 1 1", 2);
  EXPECT_EQ(oracle.homfly_derivative(trefoil, 2), LaurentPoly1::term(6, 4) + LaurentPoly1::term(-8, 2));
  EXPECT_EQ(oracle.homfly_derivative(trefoil, 0), oracle.conway(trefoil));

  // unlink closed form: nonzero only when r <= k+1
  for (int r = 1; r <= 4; ++r) {
    const BraidWord id{r, {}};
    for (int k = 0; k <= 4; ++k) {
      const LaurentPoly1 got = oracle.homfly_derivative(id, k);
      const LaurentPoly1 expect =
          eval_a1(derivative_a(unlink_homfly(r), k)).shifted(k);
      EXPECT_EQ(got, expect) << "r=" << r << " k=" << k;
      if (r > k + 1) EXPECT_TRUE(got.is_zero()) << "r=" << r << " k=" << k;
    }
  }
}

TEST(Oracle, SkeinRelationHolds) {
  // a P(L+) - a^-1 P(L-) = z P(L0) at random positions
  const HomflyOracle oracle;
  WordSampler sampler(13);
  for (int iter = 0; iter < 40; ++iter) {
    const BraidWord w = sampler.word(4, 7);
    if (w.letters.empty()) continue;
    const size_t i = static_cast<size_t>(sampler.index(static_cast<int>(w.letters.size())));
    const ConwayTriple t = conway_triple(w, i);
    const LaurentPoly2 lhs = oracle.homfly(t.plus) * LaurentPoly2::term(1, 1, 0) -
                             oracle.homfly(t.minus) * LaurentPoly2::term(1, -1, 0);
    EXPECT_EQ(lhs, oracle.homfly(t.zero) * LaurentPoly2::term(1, 0, 1)) << format_braid(w);
  }
}

TEST(Oracle, DerivativeSkein) {
  // d_k(L+) - d_k(L-) + k z d_{k-1}(L+)
  //   + sum_i (-1)^(k-1-i) k!/i! z^(k-i) d_i(L-) = z d_k(L0)
  const HomflyOracle oracle;
  WordSampler sampler(17);
  auto factorial = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int iter = 0; iter < 20; ++iter) {
    const BraidWord w = sampler.word(4, 6);
    if (w.letters.empty()) continue;
    const size_t idx = static_cast<size_t>(sampler.index(static_cast<int>(w.letters.size())));
    const ConwayTriple t = conway_triple(w, idx);
    for (int k = 0; k <= 3; ++k) {
      LaurentPoly1 lhs = oracle.homfly_derivative(t.plus, k) - oracle.homfly_derivative(t.minus, k);
      if (k >= 1) lhs += oracle.homfly_derivative(t.plus, k - 1).shifted(1).scaled(k);
      for (int i = 0; i < k; ++i) {
        const BigInt coeff = factorial(k) / factorial(i) * ((k - 1 - i) % 2 == 0 ? 1 : -1);
        lhs += oracle.homfly_derivative(t.minus, i).shifted(k - i).scaled(coeff);
      }
      EXPECT_EQ(lhs, oracle.homfly_derivative(t.zero, k).shifted(1)) << format_braid(w) << " k=" << k;
    }
  }
}

TEST(Oracle, MarkovInvariance) {
  const HomflyOracle oracle;
  WordSampler sampler(19);
  for (int iter = 0; iter < 30; ++iter) {
    const BraidWord w = sampler.word(4, 6);
    const LaurentPoly2 base = oracle.homfly(w);
    const BraidWord g = sampler.word_exact(w.strands, 2);
    EXPECT_EQ(oracle.homfly(conjugate(w, g)), base) << format_braid(w);
    EXPECT_EQ(oracle.homfly(stabilize(w, 1)), base) << format_braid(w);
    EXPECT_EQ(oracle.homfly(stabilize(w, -1)), base) << format_braid(w);
  }
}

TEST(Oracle, MemoizationTransparent) {
  const HomflyOracle oracle;
  WordSampler sampler(29);
  for (int iter = 0; iter < 10; ++iter) {
    const BraidWord w = sampler.word(4, 6);
    EXPECT_EQ(oracle.homfly(w, true), oracle.homfly(w, false)) << format_braid(w);
  }
}

TEST(Oracle, LetterBound) {
  const HomflyOracle small(4);
  EXPECT_THROW(small.homfly(parse_braid("1 1 1 1 1", 2)), ResourceLimitError);
  EXPECT_NO_THROW(small.homfly(parse_braid("1 1 1 1", 2)));
  const HomflyOracle wide(20);
  EXPECT_NO_THROW(wide.homfly(parse_braid("1 1 1 1 1", 2)));
}
