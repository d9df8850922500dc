#include <gtest/gtest.h>

#include "hgfree/tateoort.hpp"
#include "oracles.hpp"

using namespace hgfree;

TEST(Ring, Basics) {
  const TruncatedRing R(5, 3);
  EXPECT_EQ(R.modulus(), 125);
  EXPECT_EQ(R.reduce(-1), 124);
  EXPECT_EQ(R.mul(R.inverse(7), 7), 1);
  EXPECT_THROW(R.inverse(10), std::domain_error);
  EXPECT_THROW(TruncatedRing(4, 2), std::invalid_argument);
  EXPECT_THROW(TruncatedRing(5, 0), std::invalid_argument);
}

TEST(Teichmuller, MatchesPowerFormula) {
  for (Int p : {3, 5, 7, 13})
    for (Int N = 1; N <= 8; ++N) {
      const TruncatedRing R(p, N);
      for (Int m = 1; m < p; ++m) ASSERT_EQ(teichmuller(m, R), oracle::teichmuller_power(m, p, N));
    }
}

TEST(Teichmuller, P5N2) { EXPECT_EQ(teichmuller(2, TruncatedRing(5, 2)), 7); }

TEST(Algebra, ConvolutionOfGroupLikes) {
  const TruncatedRing R(7, 4);
  for (Int a = 0; a < 7; ++a)
    for (Int b = 0; b < 7; ++b)
      EXPECT_EQ(GroupAlgebraElement::group_like(R, a) * GroupAlgebraElement::group_like(R, b),
                GroupAlgebraElement::group_like(R, a + b));
}

TEST(Algebra, PowerMapOnGroupLikes) {
  const TruncatedRing R(5, 3);
  const auto s = GroupAlgebraElement::group_like(R, 1);
  EXPECT_EQ(hopf_power_map(3, s), GroupAlgebraElement::group_like(R, 3));
  EXPECT_EQ(hopf_power_map(0, s), GroupAlgebraElement::identity(R));
}

TEST(Psi, EigenspaceIdentity) {
  for (Int p : {3, 5, 7, 13}) {
    const TruncatedRing R(p, 6);
    for (Int i = 1; i < p; ++i) {
      const auto x = psi(i, R);
      EXPECT_EQ(x.counit(), 0);
      for (Int m = 1; m < p; ++m)
        ASSERT_EQ(hopf_power_map(m, x), x.scaled(R.pow(oracle::teichmuller_power(m, p, 6), i)));
    }
  }
}

TEST(Psi, P3Explicit) {
  const TruncatedRing R(3, 6);
  // psi_1 = sigma^2 - sigma
  EXPECT_EQ(psi(1, R), GroupAlgebraElement(R, {0, -1, 1}));
  // psi_2 = 2 Id - sigma - sigma^2
  EXPECT_EQ(psi(2, R), GroupAlgebraElement(R, {2, -1, -1}));
}

TEST(BTable, ReducesToFactorials) {
  for (Int p : {3, 5, 7, 11, 13}) {
    const TruncatedRing R(p, 6);
    const auto b = b_table(R);
    for (Int i = 1; i < p; ++i) EXPECT_EQ(mod_floor(b[i], p), oracle::factorial_mod(i, p)) << p << ' ' << i;
    EXPECT_EQ(b[p], R.mul(p, b[p - 1]));
    EXPECT_EQ(compute_b(p - 1, R), b[p - 1]);
  }
}

TEST(Epsilon, KnownValues) {
  EXPECT_EQ(epsilon_unit(TruncatedRing(3, 6)), 728);
  const Int chi2 = oracle::teichmuller_power(2, 5, 6);
  EXPECT_EQ(epsilon_unit(TruncatedRing(5, 6)), mod_floor(-(3 + 4 * chi2), 15625));
  EXPECT_EQ(epsilon_unit(TruncatedRing(5, 2)), 19);
  for (Int p : {7, 11, 13}) EXPECT_EQ(mod_floor(epsilon_unit(TruncatedRing(p, 4)), p), p - 1);
}

TEST(Proportionality, RejectsNonMultiple) {
  const TruncatedRing R(5, 3);
  EXPECT_THROW(proportionality_scalar(GroupAlgebraElement::identity(R), psi(1, R)), InternalInvariant);
}
