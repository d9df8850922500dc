#pragma once

// Exponent tables for the typical case. nu[i] are the exponents of the
// O_K-basis {pi^-nu_i w^i} of the order A_theta (theta = pi_L^a), n[i] those
// of the associated order. The scaffold tables d, omega are the same
// quantities computed from the scaffold's own shift parameter.

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hgfree/arith.hpp"
#include "hgfree/contfrac.hpp"
#include "hgfree/error.hpp"
#include "hgfree/params.hpp"

namespace hgfree {

inline std::vector<Int> nu_table(Int a, Int ell, Int p) {
  if (a <= 0 || a >= p || mod_floor(ell, p) != a)
    throw std::invalid_argument("nu_table: need 0 < a < p and ell = a mod p");
  std::vector<Int> nu(static_cast<std::size_t>(p));
  for (Int i = 0; i < p; ++i) nu[i] = floor_div(a + i * ell, p);
  return nu;
}

/// n_i = min_{0 <= j <= p-1-i} (nu_{i+j} - nu_j).
inline std::vector<Int> n_table(std::span<const Int> nu) {
  const auto p = nu.size();
  std::vector<Int> n(p);
  for (std::size_t i = 0; i < p; ++i) {
    Int best = nu[i] - nu[0];
    for (std::size_t j = 1; i + j < p; ++j) best = std::min(best, nu[i + j] - nu[j]);
    n[i] = best;
  }
  return n;
}

/// n_i = i*a0 + floor(i*a/p) + [p - i in E]. E must be sorted.
inline std::vector<Int> n_table_closed_form(Int a, Int a0, Int p, std::span<const Int> E) {
  std::vector<Int> n(static_cast<std::size_t>(p));
  for (Int i = 0; i < p; ++i) {
    const bool in_E = std::binary_search(E.begin(), E.end(), p - i);
    n[i] = i * a0 + floor_div(i * a, p) + (in_E ? 1 : 0);
  }
  return n;
}

struct ScaffoldTables {
  std::vector<Int> d;
  std::vector<Int> omega;
};

/// Scaffold parameters for the map s -> shift*s:
/// d(i) = floor((a + shift*i)/p) with a = shift mod p, omega(i) = min_j d(i+j) - d(j).
inline ScaffoldTables scaffold_tables(Int shift, Int p) {
  const Int a = mod_floor(shift, p);
  ScaffoldTables s;
  s.d.resize(static_cast<std::size_t>(p));
  for (Int i = 0; i < p; ++i) s.d[i] = floor_div(a + shift * i, p);
  s.omega = n_table(s.d);
  return s;
}

struct ExponentTable {
  std::vector<Int> nu;
  std::vector<Int> n;
  std::vector<Int> d;
  std::vector<Int> omega;
  Int precision = 0;
  std::vector<Int> E;

  Int p() const { return static_cast<Int>(nu.size()); }
  bool nu_equals_n() const { return nu == n; }
};

/// e + ((p-1)/r)(r-1)c, the valuation bound appearing in the ring condition.
inline Int valuation_bound(const ExtensionParams& x, const DerivedInvariants& d) {
  return x.e + (x.p - 1) / x.r * (x.r - 1) * d.c;
}

/// c = pe - (p-1)t/r. Typical regime only.
inline Int scaffold_precision(const ExtensionParams& x, const DerivedInvariants& d) {
  if (!d.typical()) throw std::invalid_argument("scaffold_precision: maximal case has no scaffold");
  const Int prec = x.p * x.e - (x.p - 1) / x.r * x.t;
  require_invariant(prec >= 1, "scaffold precision must be >= 1");
  return prec;
}

inline ExponentTable make_exponent_table(const ExtensionParams& x, const DerivedInvariants& d) {
  if (!d.typical()) throw std::invalid_argument("exponent tables exist only when a != 0");
  ExponentTable tab;
  tab.nu = nu_table(d.a, d.ell, x.p);
  tab.n = n_table(tab.nu);
  auto sc = scaffold_tables(d.ell, x.p);
  tab.d = std::move(sc.d);
  tab.omega = std::move(sc.omega);
  tab.precision = scaffold_precision(x, d);
  tab.E = set_E(d.a, x.p);
  require_invariant(tab.nu[0] == 0 && tab.n[0] == 0, "nu_0 and n_0 must vanish");
  require_invariant(tab.nu.back() == d.a + (x.p - 1) * d.a0, "nu_{p-1} != a + (p-1)a0");
  return tab;
}

/// c == p*(e + ((p-1)/r)(r-1)c - nu_{p-1}) + a.
inline bool precision_identity_check(const ExtensionParams& x, const DerivedInvariants& d,
                                     const ExponentTable& tab) {
  return tab.precision == x.p * (valuation_bound(x, d) - tab.nu.back()) + d.a;
}

/// Asserts nu_{p-1} <= e + ((p-1)/r)(r-1)c and returns whether equality holds
/// (which happens exactly in the boundary regime).
inline bool boundary_check(const ExtensionParams& x, const DerivedInvariants& d,
                           const ExponentTable& tab) {
  const Int bound = valuation_bound(x, d);
  require_invariant(tab.nu.back() <= bound, "nu_{p-1} exceeds e + ((p-1)/r)(r-1)c");
  return tab.nu.back() == bound;
}

struct RingConditionResult {
  bool holds = true;
  std::optional<std::pair<Int, Int>> witness;  // (i, j) with nu_i + nu_j > nu_{i+j}
};

/// Whether the lattice spanned by {pi^-nu_i w^i} is closed under products.
/// The wrap-around half (i + j >= p) must always hold; a failure there throws.
inline RingConditionResult ring_condition(const ExtensionParams& x, const DerivedInvariants& d,
                                          const ExponentTable& tab) {
  const Int p = x.p;
  const Int bound = valuation_bound(x, d);
  RingConditionResult res;
  for (Int i = 0; i < p; ++i) {
    for (Int j = 0; j < p; ++j) {
      const Int lhs = tab.nu[i] + tab.nu[j];
      if (i + j <= p - 1) {
        if (lhs > tab.nu[i + j] && res.holds) {
          res.holds = false;
          res.witness = std::pair{i, j};
        }
      } else {
        require_invariant(lhs <= bound + tab.nu[i + j + 1 - p],
                          "wrap-around ring inequality failed at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
  }
  return res;
}

}  // namespace hgfree
