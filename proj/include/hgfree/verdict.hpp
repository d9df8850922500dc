#pragma once

// Freeness of O_L over its associated order in the unique Hopf-Galois
// structure of a degree p extension, decided from (p, e, r, t).
//
//   a = 0                        -> associated order maximal, free
//   a != 0, (t+r)(p-1) <  rpe    -> free iff a | p-1
//   a != 0, (t+r)(p-1) >= rpe    -> free iff the expansion of ell/p has n <= 4

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgfree/contfrac.hpp"
#include "hgfree/exponents.hpp"
#include "hgfree/params.hpp"

namespace hgfree {

enum class Clause { MaximalRamification, StableDivisibility, BoundaryContinuedFraction };

inline std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::MaximalRamification: return "maximal_ramification";
    case Clause::StableDivisibility: return "stable_divisibility";
    case Clause::BoundaryContinuedFraction: return "boundary_continued_fraction";
  }
  return "?";
}

struct FreenessVerdict {
  bool free = false;
  Clause clause = Clause::MaximalRamification;
  std::optional<Int> cf_length;  // absent in the maximal clause
  std::optional<bool> divides;   // a | p-1; absent in the maximal clause
  bool associated_order_maximal = false;
  std::vector<std::string> notes;
};

/// Everything computed for one tuple.
struct Analysis {
  ExtensionParams params;
  DerivedInvariants derived;
  ContinuedFraction cf;                  // expansion of ell/p
  std::optional<ExponentTable> table;    // typical regime only
  FreenessVerdict verdict;
  std::vector<std::string> warnings;
};

/// Throws InvalidParameters if validation fails (honouring `strict`).
inline Analysis analyze(const ExtensionParams& x, bool strict = false) {
  const auto rep = validate(x, strict);
  if (!rep.ok()) throw InvalidParameters(rep.describe());

  Analysis an;
  an.params = x;
  an.derived = derive(x);
  an.warnings = rep.warnings;
  an.cf = cf_expand(an.derived.ell, x.p);
  const auto& d = an.derived;
  auto& v = an.verdict;

  if (!d.typical()) {
    v.free = true;
    v.clause = Clause::MaximalRamification;
    v.associated_order_maximal = true;
    v.notes.push_back("a = 0: associated order is the maximal order");
    return an;
  }

  an.table = make_exponent_table(x, d);
  const auto& tab = *an.table;
  const Int n = static_cast<Int>(an.cf.length());
  const bool div = divides(d.a, x.p - 1);
  v.cf_length = n;
  v.divides = div;

  if (d.regime == Regime::TypicalStable) {
    v.clause = Clause::StableDivisibility;
    v.free = div;
    if (!div) {
      const auto rc = ring_condition(x, d, tab);
      require_invariant(!rc.holds, "a does not divide p-1 but A_theta is a ring");
      v.notes.push_back("A_theta is not a ring: nu_" + std::to_string(rc.witness->first) +
                        " + nu_" + std::to_string(rc.witness->second) + " > nu_" +
                        std::to_string(rc.witness->first + rc.witness->second));
    } else {
      v.notes.push_back("a | p-1: nu = n, A_theta equals the associated order");
    }
  } else {
    v.clause = Clause::BoundaryContinuedFraction;
    v.free = n <= 4;
    v.notes.push_back("ell/p = " + an.cf.to_string() + ", n = " + std::to_string(n));
  }

  require_invariant(!div || v.free, "a | p-1 must imply freeness");
  require_invariant(div == tab.nu_equals_n(), "a | p-1 must coincide with nu = n");
  for (const auto& w : an.warnings) v.notes.push_back("warning: " + w);
  return an;
}

inline FreenessVerdict decide(const ExtensionParams& x, bool strict = false) {
  return analyze(x, strict).verdict;
}

struct SweepOptions {
  /// Keep tuples with gcd(t mod r, r) > 1 (not realizable as typical
  /// extensions) instead of emitting them as skipped rows.
  bool allow_gcd = false;
};

struct SweepRow {
  ExtensionParams params;
  std::optional<DerivedInvariants> derived;
  std::optional<FreenessVerdict> verdict;
  std::string skipped;  // empty unless the tuple was skipped
};

/// Rows in lexicographic (e, t) order. Without an explicit t range, t runs
/// over the typical range 1 <= t < rpe/(p-1).
inline std::vector<SweepRow> sweep(Int p, Int r, Int e_min, Int e_max,
                                   std::optional<std::pair<Int, Int>> t_range = std::nullopt,
                                   SweepOptions opts = {}) {
  std::vector<SweepRow> rows;
  for (Int e = e_min; e <= e_max; ++e) {
    Int t_lo = 1, t_hi = 0;
    if (t_range) {
      t_lo = t_range->first;
      t_hi = t_range->second;
    } else if (p > 1) {
      const Int bound = r * p * e;
      t_hi = bound / (p - 1);
      if (t_hi * (p - 1) == bound) --t_hi;
    }
    for (Int t = t_lo; t <= t_hi; ++t) {
      SweepRow row;
      row.params = {p, e, r, t};
      const auto rep = validate(row.params);
      if (!rep.ok()) {
        row.skipped = "invalid";
      } else if (!rep.warnings.empty() && !opts.allow_gcd) {
        row.skipped = "gcd_c_r";
      } else {
        auto an = analyze(row.params);
        row.derived = an.derived;
        row.verdict = std::move(an.verdict);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace hgfree
