#include <gtest/gtest.h>

#include <random>

#include "grids.hpp"
#include "rscrit/rscrit.hpp"

using namespace rscrit;

namespace {

Weight w1(IntVec b) {
  const int n = static_cast<int>(b.size());
  return makeWeight(n, 1, {std::move(b)});
}

}  // namespace

TEST(ToFundamental, WeightTwelveCuspForm) {
  auto f = toFundamental(w1({-1, -11}));
  EXPECT_EQ(f.a[0], IntVec{11});
  EXPECT_EQ(f.d[0], Rational(-6));
  EXPECT_EQ(f.rLambda[0], Rational(-11));
}

TEST(ToFundamental, ZeroWeight) {
  auto f = toFundamental(w1({0, 0, 0}));
  EXPECT_EQ(f.a[0], (IntVec{1, 1}));
  EXPECT_EQ(f.d[0], Rational(0));
  EXPECT_EQ(f.rLambda[0], Rational(0));
}

TEST(ToFundamental, HalfIntegralMean) {
  auto f = toFundamental(w1({-1, -2}));
  EXPECT_EQ(f.a[0], IntVec{2});
  EXPECT_EQ(f.d[0], Rational(-3, 2));
  EXPECT_EQ(f.rLambda[0], Rational(-2));
}

TEST(FromFundamental, Inverse) {
  auto f = makeFundamental(2, {{11}}, {Rational(-6)});
  EXPECT_EQ(fromFundamental(f, 2, 1).coords[0], (IntVec{-1, -11}));
  auto z = makeFundamental(4, {{1, 1, 1}}, {Rational(0)});
  EXPECT_EQ(fromFundamental(z, 4, 1).coords[0], (IntVec{0, 0, 0, 0}));
}

TEST(FromFundamental, NonIntegral) {
  auto f = makeFundamental(2, {{2}}, {Rational(0)});
  EXPECT_FALSE(isIntegral(f, 2));
  try {
    fromFundamental(f, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegralResult);
  }
}

TEST(Predicates, Examples) {
  auto w = w1({-1, -11});
  EXPECT_TRUE(isDominant(w));
  EXPECT_TRUE(isAlgebraic(w));
  EXPECT_TRUE(isPure(w));
  EXPECT_EQ(doubledDegree(w), -12);

  auto mixed = makeWeight(2, 2, {{1, 0}, {2, 0}});
  EXPECT_FALSE(isAlgebraic(mixed));
  EXPECT_FALSE(isPure(mixed));

  EXPECT_FALSE(isPure(w1({3, 1, 0})));
  EXPECT_FALSE(isPure(w1({0, 1})));  // not dominant
}

TEST(CuspidalParams, Examples) {
  auto c = cuspidalParams(w1({-1, -11}));
  EXPECT_EQ(c.ell[0], (IntVec{11, -11}));
  EXPECT_EQ(c.motivicWeight, 11);
  EXPECT_EQ(c.purityWeightDoubled, -12);

  auto one = cuspidalParams(w1({5}));
  EXPECT_EQ(one.ell[0], IntVec{0});
  EXPECT_EQ(one.motivicWeight, 0);

  auto three = cuspidalParams(w1({1, 0, -1}));
  EXPECT_EQ(three.ell[0], (IntVec{4, 0, -4}));
  EXPECT_EQ(three.motivicWeight, 4);
}

TEST(CuspidalParams, RequiresPure) {
  EXPECT_THROW(cuspidalParams(w1({3, 1, 0})), Error);
}

TEST(DualAndTwist, Examples) {
  EXPECT_EQ(dualWeight(w1({-1, -11})).coords[0], (IntVec{11, 1}));
  auto t = tateTwist(w1({0, 0}), 3);
  EXPECT_EQ(t.coords[0], (IntVec{-3, -3}));
  EXPECT_EQ(meanCoord(t, 0), Rational(-3));
  auto w = w1({1, 0, -1});
  EXPECT_EQ(cuspidalParams(tateTwist(w, 5)).ell, cuspidalParams(w).ell);
  EXPECT_EQ(dualWeight(dualWeight(w)), w);
  EXPECT_EQ(tateTwist(tateTwist(w, 4), -4), w);
}

TEST(CuspidalWidth, Examples) {
  EXPECT_EQ(cuspidalWidth(w1({-1, -11}), w1({0})), 11);
  EXPECT_EQ(cuspidalWidth(w1({1, 0, -1}), w1({1, 0, -1})), 0);
  auto mu = pureWeightFromParams(3, {{6}}, 0);
  auto mup = pureWeightFromParams(3, {{2}}, 0);
  EXPECT_EQ(cuspidalParams(mu).ell[0], (IntVec{6, 0, -6}));
  EXPECT_EQ(cuspidalWidthPlus(mu, mup), 4);
  EXPECT_EQ(cuspidalWidth(mu, mup), 0);
}

TEST(CuspidalWidth, PlusNeedsRankThree) {
  try {
    cuspidalWidthPlus(w1({0}), pureWeightFromParams(3, {{2}}, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateIndexRange);
  }
}

TEST(Hilbert, WeightTwelve) {
  EXPECT_EQ(hilbertWeight({12}, 0).coords[0], (IntVec{-1, -11}));
  EXPECT_THROW(hilbertWeight({12, 13}, 0), Error);
}

TEST(Properties, RoundTripRandom) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), val(-20, 20), deg(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = dim(rng), r = deg(rng);
    std::vector<IntVec> coords(r, IntVec(n));
    for (auto& b : coords)
      for (auto& x : b) x = val(rng);
    Weight w = makeWeight(n, r, coords);
    EXPECT_EQ(fromFundamental(toFundamental(w), n, r), w);
  }
}

TEST(Properties, PureWeightIdentities) {
  for (int n = 1; n <= 6; ++n)
    for (int p : {0, 1}) {
      if (n % 2 == 1 && p == 1) continue;
      for (const auto& heads : rscrit::testing::headTuples(n, 2, 9, p)) {
        Weight mu = rscrit::testing::basePure(n, heads);
        for (Int m : {-3, 0, 2}) {
          Weight w = tateTwist(mu, m);
          ASSERT_TRUE(isPure(w));
          auto f = toFundamental(w);
          auto c = cuspidalParams(w);
          for (int t = 0; t < w.r; ++t) {
            Rational s = 0;
            for (Int a : f.a[t]) s += a - 1;
            EXPECT_EQ(Rational(c.purityWeightDoubled), s + 2 * f.rLambda[t]);
            for (Int l : c.ell[t]) {
              EXPECT_EQ(((l - c.motivicWeight) % 2 + 2) % 2, 0);
              EXPECT_EQ(((l - c.purityWeightDoubled - n + 1) % 2 + 2) % 2, 0);
              if (n % 2 == 1) EXPECT_EQ(l % 2, 0);
            }
          }
          if (n % 2 == 1) EXPECT_EQ(c.purityWeightDoubled % 2, 0);
        }
      }
    }
}

TEST(Properties, WidthSymmetricAndTwistInvariant) {
  for (const auto& h : rscrit::testing::headTuples(2, 1, 9, 1))
    for (const auto& hp : rscrit::testing::headTuples(4, 1, 9, 0)) {
      Weight mu = rscrit::testing::basePure(2, h);
      Weight mup = rscrit::testing::basePure(4, hp);
      const Int w = cuspidalWidth(mu, mup);
      EXPECT_EQ(w, cuspidalWidth(mup, mu));
      EXPECT_EQ(w, cuspidalWidth(tateTwist(mu, 3), tateTwist(mup, -2)));
    }
}

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(toString(parseRational("-6/4")), "-3/2");
  EXPECT_EQ(toString(parseRational("7")), "7");
  EXPECT_THROW(parseRational("1/0"), Error);
  EXPECT_THROW(parseRational("x"), Error);
  EXPECT_EQ(doubledToString(-5), "-5/2");
}
