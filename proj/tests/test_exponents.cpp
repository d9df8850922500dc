#include <gtest/gtest.h>

#include "hgfree/contfrac.hpp"
#include "hgfree/exponents.hpp"
#include "oracles.hpp"

using namespace hgfree;

TEST(NuTable, WorkedExample) {
  const auto d = derive({13, 1, 12, 5});
  const auto tab = make_exponent_table({13, 1, 12, 5}, d);
  EXPECT_EQ(tab.nu, (std::vector<Int>{0, 5, 9, 14, 19, 23, 28, 32, 37, 42, 46, 51, 56}));
  EXPECT_EQ(tab.n, (std::vector<Int>{0, 4, 9, 13, 18, 23, 27, 32, 37, 41, 46, 51, 56}));
  EXPECT_EQ(tab.E, (std::vector<Int>{1, 2, 5}));
  EXPECT_EQ(tab.precision, 8);
}

TEST(NuTable, ZerothEntriesVanish) {
  const auto nu = nu_table(3, 8, 5);
  EXPECT_EQ(nu.front(), 0);
  EXPECT_EQ(n_table(nu).front(), 0);
}

TEST(NuTable, MaximalCaseHasNoTable) {
  const ExtensionParams x{3, 1, 2, 3};
  EXPECT_THROW(make_exponent_table(x, derive(x)), std::invalid_argument);
  EXPECT_THROW(scaffold_precision(x, derive(x)), std::invalid_argument);
}

TEST(NuTable, AgreesWithOracle) {
  for_each_valid_tuple(37, 5, [](const ExtensionParams& x) {
    const auto d = derive(x);
    if (!d.typical()) return;
    const auto o = oracle::ell_of(x.p, x.r, x.t);
    const auto nu = oracle::nu(o.a, o.ell, x.p);
    const auto tab = make_exponent_table(x, d);
    ASSERT_EQ(tab.nu, nu);
    ASSERT_EQ(tab.n, oracle::n_min(nu));
  });
}

TEST(NTable, ClosedFormThroughE) {
  for (Int p = 3; p <= 97; p += 2) {
    if (!oracle::prime(p)) continue;
    for (Int a = 1; a < p; ++a)
      for (Int a0 = 0; a0 < 3; ++a0) {
        const auto nu = nu_table(a, a0 * p + a, p);
        ASSERT_EQ(n_table(nu), n_table_closed_form(a, a0, p, set_E_bruteforce(a, p))) << a << '/' << p;
      }
  }
}

TEST(Scaffold, ShiftAddsLinearTerm) {
  for_each_valid_tuple(29, 4, [](const ExtensionParams& x) {
    const auto d = derive(x);
    if (!d.typical()) return;
    const auto tab = make_exponent_table(x, d);
    const auto base = scaffold_tables(d.b, x.p);
    EXPECT_EQ(tab.d, tab.nu);
    EXPECT_EQ(tab.omega, tab.n);
    for (Int i = 0; i < x.p; ++i) {
      ASSERT_EQ(tab.d[i], base.d[i] + d.c * i);
      ASSERT_EQ(tab.omega[i], base.omega[i] + d.c * i);
    }
  });
}

TEST(Precision, IdentityAndBounds) {
  for_each_valid_tuple(47, 6, [](const ExtensionParams& x) {
    const auto d = derive(x);
    if (!d.typical()) return;
    const auto tab = make_exponent_table(x, d);
    // c = pe - (p-1)t/r computed directly
    ASSERT_EQ(tab.precision, x.p * x.e - (x.p - 1) * x.t / x.r);
    ASSERT_TRUE(precision_identity_check(x, d, tab));
    ASSERT_EQ(boundary_check(x, d, tab), d.regime == Regime::TypicalBoundary);
    ASSERT_EQ(tab.precision < x.p + d.a, d.regime == Regime::TypicalBoundary);
  });
}

TEST(RingCondition, FourWayEquivalence) {
  Int stable_fail = 0;
  for_each_valid_tuple(47, 6, [&](const ExtensionParams& x) {
    const auto d = derive(x);
    if (!d.typical()) return;
    const auto tab = make_exponent_table(x, d);
    const auto rc = ring_condition(x, d, tab);
    const bool div = divides(d.a, x.p - 1);
    ASSERT_EQ(rc.holds, div);
    ASSERT_EQ(tab.nu_equals_n(), div);
    ASSERT_EQ(cf_expand(d.ell, x.p).length() <= 2, div);
    if (!rc.holds) {
      const auto [i, j] = *rc.witness;
      ASSERT_GT(tab.nu[i] + tab.nu[j], tab.nu[i + j]);
      ++stable_fail;
    }
  });
  EXPECT_GT(stable_fail, 0);
}

TEST(RingCondition, WorkedExampleWitness) {
  const ExtensionParams x{13, 1, 12, 5};
  const auto d = derive(x);
  const auto rc = ring_condition(x, d, make_exponent_table(x, d));
  EXPECT_FALSE(rc.holds);
  ASSERT_TRUE(rc.witness.has_value());
}
