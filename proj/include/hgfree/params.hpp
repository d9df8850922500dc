#pragma once

// Ramification parameters of a degree p extension and the scalar invariants
// derived from them. The input tuple (p, e, r, t) describes the totally
// ramified normal closure: e is the absolute ramification index of the base,
// r the degree of the closure over the top field, t the ramification jump.

#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hgfree/arith.hpp"
#include "hgfree/error.hpp"

namespace hgfree {

struct ExtensionParams {
  Int p = 0;
  Int e = 0;
  Int r = 0;
  Int t = 0;

  friend bool operator==(const ExtensionParams&, const ExtensionParams&) = default;
};

enum class Regime { Maximal, TypicalStable, TypicalBoundary };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Maximal: return "maximal";
    case Regime::TypicalStable: return "typical_stable";
    case Regime::TypicalBoundary: return "typical_boundary";
  }
  return "?";
}

struct DerivedInvariants {
  Int c = 0;     // t mod r
  Int b = 0;     // t = p*c + b*r, may be negative
  Int ell = 0;   // c*p + b
  Int a = 0;     // ell mod p
  Int a0 = 0;    // floor(ell / p)
  Regime regime = Regime::Maximal;
  bool coprimality_warning = false;  // gcd(c, r) > 1

  bool typical() const { return regime != Regime::Maximal; }
  friend bool operator==(const DerivedInvariants&, const DerivedInvariants&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }

  std::string describe() const {
    std::ostringstream os;
    for (const auto& v : violations) os << "violation: " << v << '\n';
    for (const auto& w : warnings) os << "warning: " << w << '\n';
    return os.str();
  }
};

/// Checks every admissibility condition on the tuple. Total: never throws.
/// With `strict`, a non-coprime pair (t mod r, r) is a violation instead of a
/// warning.
inline ValidationReport validate(const ExtensionParams& x, bool strict = false) {
  ValidationReport rep;
  auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

  if (x.p < 3 || !is_prime(x.p)) fail("p=" + std::to_string(x.p) + " is not an odd prime");
  if (x.e < 1) fail("e=" + std::to_string(x.e) + " must be >= 1");
  if (x.r < 1) fail("r=" + std::to_string(x.r) + " must be >= 1");
  if (x.t < 1) fail("t=" + std::to_string(x.t) + " must be >= 1");
  if (!rep.ok()) return rep;

  if (!divides(x.r, x.p - 1))
    fail("r=" + std::to_string(x.r) + " does not divide p-1=" + std::to_string(x.p - 1));

  const Int lhs = x.t * (x.p - 1);
  const Int bound = x.r * x.p * x.e;
  if (lhs > bound) {
    fail("t(p-1)=" + std::to_string(lhs) + " > rpe=" + std::to_string(bound));
  } else if (lhs == bound) {
    if (!divides(x.p, x.t)) fail("t(p-1)=rpe but p does not divide t");
  } else if (divides(x.p, x.t)) {
    // Jumps strictly below rpe/(p-1) are prime to p.
    fail("p divides t=" + std::to_string(x.t) + " but t(p-1)=" + std::to_string(lhs) +
         " < rpe=" + std::to_string(bound));
  }
  if (!rep.ok()) return rep;

  const Int c = x.t % x.r;
  const Int g = std::gcd(c, x.r);
  if (g > 1) {
    std::string msg = "gcd(c,r)=gcd(" + std::to_string(c) + "," + std::to_string(x.r) +
                      ")=" + std::to_string(g) + " > 1";
    if (strict)
      fail(msg);
    else
      rep.warnings.push_back(std::move(msg));
  }
  return rep;
}

/// Derives c, b, ell, a, a0 and the regime. Throws InvalidParameters if the
/// tuple fails non-strict validation.
inline DerivedInvariants derive(const ExtensionParams& x) {
  if (auto rep = validate(x); !rep.ok()) throw InvalidParameters(rep.describe());

  DerivedInvariants d;
  d.c = x.t % x.r;
  const Int num = x.t - x.p * d.c;
  require_invariant(num % x.r == 0, "t - pc not divisible by r");
  d.b = num / x.r;
  d.ell = d.c * x.p + d.b;
  require_invariant(x.r * d.ell == x.p * d.c * (x.r - 1) + x.t, "r*ell != pc(r-1)+t");
  require_invariant(d.ell > 0, "ell must be positive");
  d.a = mod_floor(d.ell, x.p);
  d.a0 = floor_div(d.ell, x.p);
  d.coprimality_warning = std::gcd(d.c, x.r) > 1;

  const Int bound = x.r * x.p * x.e;
  const bool maximal = x.t * (x.p - 1) == bound;
  require_invariant((d.a == 0) == maximal, "a = 0 must coincide with t(p-1) = rpe");
  if (maximal)
    d.regime = Regime::Maximal;
  else if ((x.t + x.r) * (x.p - 1) < bound)
    d.regime = Regime::TypicalStable;
  else
    d.regime = Regime::TypicalBoundary;
  return d;
}

/// Visits every tuple with p <= p_max, e <= e_max that passes non-strict
/// validation, in lexicographic (p, r, e, t) order.
inline void for_each_valid_tuple(Int p_max, Int e_max,
                                 const std::function<void(const ExtensionParams&)>& fn) {
  for (Int p = 3; p <= p_max; p += 2) {
    if (!is_prime(p)) continue;
    for (Int r = 1; r <= p - 1; ++r) {
      if (!divides(r, p - 1)) continue;
      for (Int e = 1; e <= e_max; ++e) {
        const Int t_max = r * p * e / (p - 1);
        for (Int t = 1; t <= t_max; ++t) {
          ExtensionParams x{p, e, r, t};
          if (validate(x).ok()) fn(x);
        }
      }
    }
  }
}

}  // namespace hgfree
