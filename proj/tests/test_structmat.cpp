#include <gtest/gtest.h>

#include "hgfree/structmat.hpp"
#include "hgfree/verdict.hpp"
#include "oracles.hpp"

using namespace hgfree;

namespace {

void check_against_valuations(const ExtensionParams& x) {
  const auto an = analyze(x);
  const auto& d = an.derived;
  const auto o = oracle::ell_of(x.p, x.r, x.t);
  const auto nu = oracle::nu(o.a, o.ell, x.p);
  const auto n = oracle::n_min(nu);
  const auto patterns = build_all_patterns(*an.table, d);
  for (Int k = 0; k < x.p; ++k)
    for (Int i = 0; i < x.p; ++i) {
      const auto cell = oracle::pattern_cell(k, i, x.p, x.e, x.r, o.c, nu, n);
      ASSERT_GE(cell.valuation, 0) << k << ' ' << i;
      const auto row = patterns[k].support_row(i);
      ASSERT_EQ(row.has_value(), cell.valuation == 0)
          << "p=" << x.p << " e=" << x.e << " r=" << x.r << " t=" << x.t << " k=" << k << " i=" << i;
      if (row) {
        ASSERT_EQ(*row, cell.row);
      }
    }
}

}  // namespace

TEST(Patterns, MatchValuationOracle) {
  Int boundary = 0;
  for_each_valid_tuple(41, 6, [&](const ExtensionParams& x) {
    if (derive(x).regime != Regime::TypicalBoundary) return;
    ++boundary;
    check_against_valuations(x);
  });
  EXPECT_GT(boundary, 100);
}

TEST(Patterns, OnlyInBoundaryRegime) {
  const ExtensionParams x{5, 3, 4, 7};
  const auto an = analyze(x);
  EXPECT_THROW(build_pattern(0, *an.table, an.derived), std::invalid_argument);
}

TEST(Patterns, ColumnHoldsOneEntry) {
  StructureMatrix m(0, 3);
  m.set(1, 0, Entry::One);
  EXPECT_EQ(m.at(1, 0), Entry::One);
  EXPECT_EQ(m.at(0, 0), Entry::Zero);
  EXPECT_THROW(m.set(2, 0, Entry::One), InternalInvariant);
  EXPECT_EQ(m.count(Entry::One), 1);
  EXPECT_EQ(m.count(Entry::Zero), 2);
}

TEST(Certificates, WorkedExampleHall) {
  const ExtensionParams x{13, 1, 12, 5};
  const auto an = analyze(x);
  const auto sv = structural_verdict(*an.table, an.derived, an.cf);
  EXPECT_FALSE(sv.free);
  ASSERT_TRUE(sv.hall.has_value());
  EXPECT_FALSE(sv.generator.has_value());
  EXPECT_EQ(sv.hall->columns, (std::vector<Int>{9, 6, 3}));
  EXPECT_EQ(sv.hall->h_values, (std::vector<Int>{4, 7, 10}));
  EXPECT_LE(sv.hall->support_rows.size(), 2u);
  EXPECT_LT(sv.matching, 13);
}

TEST(Certificates, GeneratorPermutationIsValid) {
  const ExtensionParams x{5, 2, 4, 7};  // n = 3
  const auto an = analyze(x);
  const auto patterns = build_all_patterns(*an.table, an.derived);
  const auto sv = structural_verdict(*an.table, an.derived, an.cf);
  ASSERT_TRUE(sv.free);
  ASSERT_TRUE(sv.generator.has_value());
  const auto& g = *sv.generator;
  EXPECT_EQ(g.k, 1);  // q_2 - 1 for 13/5 = [2;1,1,2]
  const auto& m = patterns[g.k];
  std::vector<bool> hit(static_cast<std::size_t>(x.p), false);
  ASSERT_EQ(g.permutation[0], 0);
  for (Int i = 1; i < x.p; ++i) {
    ASSERT_EQ(m.support_row(i), g.permutation[i]);
    ASSERT_NE(g.permutation[i], i);
    ASSERT_FALSE(hit[g.permutation[i]]);
    hit[g.permutation[i]] = true;
  }
}

TEST(Certificates, AgreeWithDecideUpTo40) {
  Int hall = 0, gen = 0;
  for_each_valid_tuple(40, 8, [&](const ExtensionParams& x) {
    const auto an = analyze(x);
    if (an.derived.regime != Regime::TypicalBoundary) return;
    const auto sv = structural_verdict(*an.table, an.derived, an.cf);
    ASSERT_EQ(sv.free, an.verdict.free);
    const auto n = an.cf.length();
    ASSERT_EQ(sv.generator.has_value(), n <= 4);
    ASSERT_EQ(sv.hall.has_value(), n >= 5);
    ASSERT_EQ(sv.matching == x.p, sv.free);
    (sv.hall ? hall : gen)++;
  });
  EXPECT_GT(hall, 0);
  EXPECT_GT(gen, 0);
}
