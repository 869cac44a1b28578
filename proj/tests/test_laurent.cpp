// Exact-arithmetic checks for the Laurent polynomial layer: pinned values
// plus the ring/derivative identities that must hold for all inputs.

#include "braidsurf/laurent.hpp"
#include "braidsurf/serialize.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace braidsurf;

namespace {

LaurentPoly2 a_pow(int e) { return LaurentPoly2::term(1, e, 0); }

LaurentPoly2 random_poly2(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_terms(0, 4), exp(-4, 4), coeff(-5, 5);
  LaurentPoly2 p;
  const int n = n_terms(rng);
  for (int i = 0; i < n; ++i) p.add_term(exp(rng), exp(rng), coeff(rng));
  return p;
}

}  // namespace

TEST(Laurent, RingBasics) {
  const LaurentPoly2 am = a_pow(1) - a_pow(-1);  // a - a^-1
  LaurentPoly2 sq = am * am;
  LaurentPoly2 expect = a_pow(2) + a_pow(-2) + LaurentPoly2::constant(-2);
  EXPECT_EQ(sq, expect);

  const LaurentPoly1 p = LaurentPoly1::term(3, 2) + LaurentPoly1::term(-1, 0);
  EXPECT_EQ(p + LaurentPoly1(), p);

  const LaurentPoly1 zpz = (LaurentPoly1::term(1, 1) + LaurentPoly1::term(1, -1)) * LaurentPoly1::term(1, 1);
  EXPECT_EQ(zpz, LaurentPoly1::term(1, 2) + LaurentPoly1::constant(1));
}

TEST(Laurent, DerivativeValues) {
  // (a^-4)'' = 20 a^-6
  EXPECT_EQ(derivative_a(a_pow(-4), 2), LaurentPoly2::term(20, -6, 0));
  EXPECT_EQ(eval_a1(derivative_a(a_pow(-4), 2)), LaurentPoly1::constant(20));

  // (a^-4 (a^2 - 1))'' at a = 1 is -14
  const LaurentPoly2 p = a_pow(-4) * (a_pow(2) - LaurentPoly2::constant(1));
  EXPECT_EQ(eval_a1(derivative_a(p, 2)), LaurentPoly1::constant(-14));

  std::mt19937 rng(1);
  const LaurentPoly2 q = random_poly2(rng);
  EXPECT_EQ(derivative_a(q, 0), q);
}

TEST(Laurent, EvalAtOne) {
  // the trefoil HOMFLY value collapses to the Conway polynomial
  LaurentPoly2 trefoil;
  trefoil.add_term(-2, 2, 1);
  trefoil.add_term(-2, 0, 2);
  trefoil.add_term(-4, 0, -1);
  EXPECT_EQ(eval_a1(trefoil), LaurentPoly1::term(1, 2) + LaurentPoly1::constant(1));

  EXPECT_TRUE(eval_a1(a_pow(1) - a_pow(-1)).is_zero());
  EXPECT_EQ(eval_a1(LaurentPoly2::term(1, 0, 3)), LaurentPoly1::term(1, 3));
}

TEST(Laurent, UnlinkNormalization) {
  EXPECT_EQ(unlink_homfly(1), LaurentPoly2::constant(1));
  EXPECT_EQ(unlink_homfly(2), LaurentPoly2::term(1, 1, -1) + LaurentPoly2::term(-1, -1, -1));
  LaurentPoly2 three;
  three.add_term(2, -2, 1);
  three.add_term(0, -2, -2);
  three.add_term(-2, -2, 1);
  EXPECT_EQ(unlink_homfly(3), three);
  EXPECT_THROW(unlink_homfly(0), std::invalid_argument);
}

TEST(Laurent, UnlinkRecurrence) {
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(unlink_homfly(r + 1), unlink_homfly(r) * unlink_homfly(2));
}

TEST(Laurent, DerivativeComposesAndLeibniz) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ord(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    const LaurentPoly2 p = random_poly2(rng);
    const LaurentPoly2 q = random_poly2(rng);
    const int i = ord(rng), j = ord(rng);
    EXPECT_EQ(derivative_a(derivative_a(p, i), j), derivative_a(p, i + j));
    EXPECT_EQ(derivative_a(p * q, 1), derivative_a(p, 1) * q + p * derivative_a(q, 1));
  }
}

TEST(Laurent, EvalIsRingHomomorphism) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const LaurentPoly2 p = random_poly2(rng);
    const LaurentPoly2 q = random_poly2(rng);
    EXPECT_EQ(eval_a1(p * q), eval_a1(p) * eval_a1(q));
    EXPECT_EQ(eval_a1(p + q), eval_a1(p) + eval_a1(q));
  }
}

TEST(Laurent, RingAxiomsExact) {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const LaurentPoly2 p = random_poly2(rng);
    const LaurentPoly2 q = random_poly2(rng);
    const LaurentPoly2 r = random_poly2(rng);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p - p, LaurentPoly2());
  }
}

TEST(Laurent, NoZeroCoefficientsStored) {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    LaurentPoly2 p = random_poly2(rng);
    const LaurentPoly2 q = random_poly2(rng);
    p += q;
    p -= q;
    for (const auto& [k, c] : p.terms()) EXPECT_NE(c, 0);
    const LaurentPoly2 prod = p * q;
    for (const auto& [k, c] : prod.terms()) EXPECT_NE(c, 0);
  }
}

TEST(Laurent, Printing) {
  LaurentPoly1 p = LaurentPoly1::term(6, 4) + LaurentPoly1::term(-8, 2);
  EXPECT_EQ(p.str(), "6*z^4 - 8*z^2");
  EXPECT_EQ(LaurentPoly1().str(), "0");
  EXPECT_EQ((LaurentPoly1::term(1, 2) + LaurentPoly1::constant(1)).str(), "z^2 + 1");
  EXPECT_EQ((LaurentPoly1::term(-1, 2) + LaurentPoly1::term(1, -1)).str(), "-z^2 + z^-1");

  LaurentPoly2 t;
  t.add_term(-2, 2, 1);
  t.add_term(-2, 0, 2);
  t.add_term(-4, 0, -1);
  EXPECT_EQ(t.str(), "a^-2*z^2 + 2*a^-2 - a^-4");
}

TEST(Laurent, JsonSortedByExponent) {
  LaurentPoly2 t;
  t.add_term(-2, 2, 1);
  t.add_term(-4, 0, -1);
  t.add_term(-2, 0, 2);
  const Json j = to_json(t);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["a"], -4);
  EXPECT_EQ(j[1]["a"], -2);
  EXPECT_EQ(j[1]["z"], 0);
  EXPECT_EQ(j[2]["z"], 2);
  EXPECT_EQ(j[2]["c"], "1");

  const Json j1 = to_json(LaurentPoly1::term(6, 4) + LaurentPoly1::term(-8, 2));
  EXPECT_EQ(j1[0]["z"], 2);
  EXPECT_EQ(j1[0]["c"], "-8");
  EXPECT_FALSE(j1[0].contains("a"));
}
