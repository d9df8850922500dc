#include <gtest/gtest.h>

#include "hgfree/params.hpp"
#include "oracles.hpp"

using namespace hgfree;

TEST(Validate, RejectsNonPrimeAndEvenP) {
  EXPECT_FALSE(validate({4, 1, 1, 1}).ok());
  EXPECT_FALSE(validate({2, 1, 1, 1}).ok());
  EXPECT_FALSE(validate({9, 1, 2, 1}).ok());
}

TEST(Validate, RejectsNonPositiveFields) {
  EXPECT_FALSE(validate({5, 0, 1, 1}).ok());
  EXPECT_FALSE(validate({5, 1, 0, 1}).ok());
  EXPECT_FALSE(validate({5, 1, 1, 0}).ok());
  EXPECT_FALSE(validate({5, 1, 1, -3}).ok());
}

TEST(Validate, RequiresRDividingPMinusOne) {
  EXPECT_FALSE(validate({7, 1, 4, 1}).ok());
  EXPECT_TRUE(validate({7, 1, 3, 1}).ok());
}

TEST(Validate, UpperBoundOnJump) {
  // rpe/(p-1) = 5 for (5,1,4)
  EXPECT_TRUE(validate({5, 1, 4, 5}).ok());
  EXPECT_FALSE(validate({5, 1, 4, 6}).ok());
  // at equality t is automatically a multiple of p
  EXPECT_TRUE(validate({7, 1, 6, 7}).ok());
  EXPECT_TRUE(validate({3, 2, 1, 3}).ok());
}

TEST(Validate, JumpBelowBoundIsPrimeToP) {
  EXPECT_FALSE(validate({5, 5, 1, 5}).ok());
  EXPECT_TRUE(validate({5, 5, 1, 4}).ok());
}

TEST(Validate, CoprimalityIsWarningUnlessStrict) {
  const ExtensionParams x{5, 1, 4, 2};
  const auto lax = validate(x);
  EXPECT_TRUE(lax.ok());
  EXPECT_EQ(lax.warnings.size(), 1u);
  EXPECT_FALSE(validate(x, true).ok());
}

TEST(Derive, WorkedExampleP13) {
  const auto d = derive({13, 1, 12, 5});
  EXPECT_EQ(d.c, 5);
  EXPECT_EQ(d.b, -5);
  EXPECT_EQ(d.ell, 60);
  EXPECT_EQ(d.a, 8);
  EXPECT_EQ(d.a0, 4);
  EXPECT_EQ(d.regime, Regime::TypicalBoundary);
}

TEST(Derive, MaximalCase) {
  const auto d = derive({3, 1, 2, 3});
  EXPECT_EQ(d.a, 0);
  EXPECT_EQ(d.regime, Regime::Maximal);
  EXPECT_FALSE(d.typical());
}

TEST(Derive, ThrowsOnInvalid) { EXPECT_THROW(derive({4, 1, 1, 1}), InvalidParameters); }

TEST(Derive, DihedralEllIsHalfOfPPlusT) {
  for (Int p : {5, 7, 11, 13, 17, 19, 23})
    for (Int e = 1; e <= 4; ++e)
      for (Int t = 1; t * (p - 1) < 2 * p * e; t += 2) {
        if (!validate({p, e, 2, t}).ok()) continue;
        const auto d = derive({p, e, 2, t});
        EXPECT_EQ(d.c, 1);
        EXPECT_EQ(d.ell, (p + t) / 2) << p << ' ' << e << ' ' << t;
      }
}

TEST(Derive, GaloisCaseHasEllEqualT) {
  for_each_valid_tuple(31, 4, [](const ExtensionParams& x) {
    if (x.r != 1) return;
    const auto d = derive(x);
    EXPECT_EQ(d.c, 0);
    EXPECT_EQ(d.ell, x.t);
    EXPECT_EQ(d.a, x.t % x.p);
  });
}

TEST(Derive, MatchesClosedFormEverywhere) {
  Int count = 0;
  for_each_valid_tuple(43, 5, [&](const ExtensionParams& x) {
    const auto d = derive(x);
    const auto o = oracle::ell_of(x.p, x.r, x.t);
    ASSERT_EQ(d.ell, o.ell);
    ASSERT_EQ(d.a, o.a);
    ASSERT_EQ(d.c, o.c);
    ASSERT_EQ(x.t, x.p * d.c + d.b * x.r);
    ASSERT_EQ(d.ell, d.a0 * x.p + d.a);
    ++count;
  });
  EXPECT_GT(count, 1000);
}

TEST(Derive, RegimePartition) {
  for_each_valid_tuple(31, 5, [](const ExtensionParams& x) {
    const auto d = derive(x);
    const Int rpe = x.r * x.p * x.e;
    const bool maximal = x.t * (x.p - 1) == rpe;
    const bool stable = !maximal && (x.t + x.r) * (x.p - 1) < rpe;
    EXPECT_EQ(d.regime == Regime::Maximal, maximal);
    EXPECT_EQ(d.regime == Regime::TypicalStable, stable);
    EXPECT_EQ(d.regime == Regime::TypicalBoundary, !maximal && !stable);
  });
}
