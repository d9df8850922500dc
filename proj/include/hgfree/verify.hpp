#pragma once

// Exhaustive invariant suites shared by the `verify` subcommand and the test
// binaries. Each check counts the instances it examined and records the first
// witness of a failure.

#include <cstdint>
#include <deque>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hgfree/contfrac.hpp"
#include "hgfree/exponents.hpp"
#include "hgfree/structmat.hpp"
#include "hgfree/tateoort.hpp"
#include "hgfree/verdict.hpp"

namespace hgfree::verify {

struct Check {
  std::string name;
  std::int64_t instances = 0;
  std::int64_t failures = 0;
  std::string witness;

  bool passed() const { return failures == 0; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) witness = describe();
  }
};

struct SuiteResult {
  std::string suite;
  std::deque<Check> checks;  // add() hands out references

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }

  Check& add(std::string name) {
    checks.push_back(Check{std::move(name), 0, 0, {}});
    return checks.back();
  }
};

inline std::string tuple_str(const ExtensionParams& x) {
  std::ostringstream os;
  os << "(p=" << x.p << ",e=" << x.e << ",r=" << x.r << ",t=" << x.t << ")";
  return os.str();
}

inline std::string ap_str(Int a, Int p) {
  return "(a=" + std::to_string(a) + ",p=" + std::to_string(p) + ")";
}

/// Convergent-denominator properties, E descriptions and the density property.
inline SuiteResult contfrac_suite(Int p_max, Int density_p_max = 50) {
  SuiteResult res{"contfrac", {}};
  Check& c1 = res.add("distance to nearest integer strictly decreases along q_i (i >= 1, or q_0 < q_1)");
  Check& c2 = res.add("no q < q_i beats q_{i-1}");
  Check& c3 = res.add("frac(q_i a/p) < 1/2 for even 0<i<n, > 1/2 for odd 0<i<n");
  Check& c4 = res.add("||q_{n-1} a/p|| = 1/p with parity-determined side");
  Check& cE = res.add("E by semiconvergents equals E by scan (n >= 2)");
  Check& cd = res.add("density property");
  Check& cdiv = res.add("a | p-1 iff expansion length <= 2");

  for (Int p = 3; p <= p_max; p += 2) {
    if (!is_prime(p)) continue;
    for (Int a = 1; a < p; ++a) {
      const auto cf = cf_expand(a, p);
      const auto ct = convergents(cf);
      const auto n = static_cast<Int>(cf.length());
      auto who = [&] { return ap_str(a, p); };
      for (Int i = 0; i < n; ++i) {
        if (ct.q[i + 1] == ct.q[i]) continue;  // q_0 = q_1 = 1 when a_1 = 1
        c1.record(dist_nearest(ct.q[i + 1], a, p) < dist_nearest(ct.q[i], a, p), who);
      }
      for (Int i = 1; i <= n; ++i) {
        bool ok = true;
        for (Int q = 1; q < ct.q[i] && ok; ++q) ok = dist_nearest(q, a, p) >= dist_nearest(ct.q[i - 1], a, p);
        c2.record(ok, who);
      }
      for (Int i = 1; i < n; ++i) {
        const Int twice = 2 * frac_part(ct.q[i], a, p).num;
        c3.record(i % 2 == 0 ? twice < p : twice > p, who);
      }
      const Int res_last = frac_part(ct.q[n - 1], a, p).num;
      c4.record(dist_nearest(ct.q[n - 1], a, p) == Fraction{1, p} &&
                    res_last == (n % 2 == 1 ? 1 : p - 1),
                who);
      if (n >= 2) cE.record(set_E_semiconvergents(a, p) == set_E_bruteforce(a, p), who);
      if (p <= density_p_max) cd.record(density_check(a, p), who);
      cdiv.record(divides(a, p - 1) == (n <= 2), who);
    }
  }
  return res;
}

/// Exponent-table identities over every valid typical tuple.
inline SuiteResult exponents_suite(Int p_max, Int e_max = 6) {
  SuiteResult res{"exponents", {}};
  Check& cclosed = res.add("n_table equals closed form via E");
  Check& cfour = res.add("nu = n <=> n_cf <= 2 <=> a | p-1 <=> ring condition");
  Check& cwrap = res.add("wrap-around ring inequality always holds");
  Check& cprec = res.add("precision identity");
  Check& cbound = res.add("nu_{p-1} bound, equality iff boundary regime");
  Check& cmin = res.add("precision >= max(a,1); precision >= p+a iff stable");
  Check& cscaf = res.add("scaffold tables d = nu, omega = n; shift change adds c*i");
  Check& cnu = res.add("nu_{p-1} = a + (p-1)a0, n_i <= nu_i");

  for_each_valid_tuple(p_max, e_max, [&](const ExtensionParams& x) {
    const auto d = derive(x);
    if (!d.typical()) return;
    auto who = [&] { return tuple_str(x); };
    const auto tab = make_exponent_table(x, d);
    const auto E = set_E_bruteforce(d.a, x.p);
    cclosed.record(tab.n == n_table_closed_form(d.a, d.a0, x.p, E), who);

    const bool nu_eq_n = tab.nu_equals_n();
    const bool short_cf = cf_expand(d.ell, x.p).length() <= 2;
    const bool div = divides(d.a, x.p - 1);
    bool wrap_ok = true;
    bool ring = false;
    try {
      ring = ring_condition(x, d, tab).holds;
    } catch (const InternalInvariant&) {
      wrap_ok = false;
    }
    cwrap.record(wrap_ok, who);
    cfour.record(nu_eq_n == short_cf && short_cf == div && div == ring, who);
    cprec.record(precision_identity_check(x, d, tab), who);
    bool bound_ok = true;
    try {
      bound_ok = boundary_check(x, d, tab) == (d.regime == Regime::TypicalBoundary);
    } catch (const InternalInvariant&) {
      bound_ok = false;
    }
    cbound.record(bound_ok, who);
    cmin.record(tab.precision >= std::max<Int>(d.a, 1) &&
                    (tab.precision >= x.p + d.a) == (d.regime == Regime::TypicalStable),
                who);

    const auto orig = scaffold_tables(d.b, x.p);
    bool shift_ok = tab.d == tab.nu && tab.omega == tab.n;
    for (Int i = 0; i < x.p; ++i)
      shift_ok = shift_ok && tab.d[i] == orig.d[i] + d.c * i && tab.omega[i] == orig.omega[i] + d.c * i;
    cscaf.record(shift_ok, who);

    bool nu_ok = tab.nu.back() == d.a + (x.p - 1) * d.a0;
    for (Int i = 0; i < x.p; ++i) nu_ok = nu_ok && tab.n[i] <= tab.nu[i];
    cnu.record(nu_ok, who);
  });
  return res;
}

/// Boundary-regime matrix machinery against the continued-fraction verdict.
inline SuiteResult matrices_suite(Int p_max, Int e_max = 6) {
  SuiteResult res{"matrices", {}};
  Check& cagree = res.add("structural verdict equals decide()");
  Check& cgen = res.add("generator certificate iff n <= 4");
  Check& chall = res.add("Hall certificate iff n >= 5");
  Check& cdiag = res.add("M(1) diagonal entry is 1 iff n_i = nu_i");
  Check& czero = res.add("designated columns vanish for k = 0 and k > h-1 (n >= 5)");

  for_each_valid_tuple(p_max, e_max, [&](const ExtensionParams& x) {
    const auto an = analyze(x);
    if (an.derived.regime != Regime::TypicalBoundary) return;
    auto who = [&] { return tuple_str(x); };
    const auto& tab = *an.table;
    const auto ct = convergents(an.cf);
    const auto n = static_cast<Int>(an.cf.length());
    const auto patterns = build_all_patterns(tab, an.derived);

    bool diag_ok = true;
    for (Int i = 0; i < x.p; ++i)
      diag_ok = diag_ok && ((patterns[0].at(i, i) == Entry::One) == (tab.n[i] == tab.nu[i]));
    cdiag.record(diag_ok, who);

    try {
      const auto sv = generic_det_nonzero(patterns, tab, an.derived, ct);
      cagree.record(sv.free == an.verdict.free, who);
      cgen.record(sv.generator.has_value() == (n <= 4), who);
      chall.record(sv.hall.has_value() == (n >= 5), who);
      if (sv.hall) {
        bool ok = true;
        for (std::size_t c = 0; c < sv.hall->columns.size(); ++c) {
          const Int col = sv.hall->columns[c], h = sv.hall->h_values[c];
          for (Int k = 0; k < x.p; ++k)
            if (k == 0 || k > h - 1) ok = ok && !patterns[k].support_row(col);
        }
        czero.record(ok, who);
      }
    } catch (const InternalInvariant& e) {
      cagree.record(false, [&] { return tuple_str(x) + ": " + e.what(); });
    }
  });
  return res;
}

inline Int factorial_mod(Int i, Int p) {
  Int f = 1;
  for (Int j = 2; j <= i; ++j) f = f * j % p;
  return f;
}

/// Group-algebra identities for the given primes at precision N.
inline SuiteResult tateoort_suite(const std::vector<Int>& primes, Int precision = 6,
                                  std::uint64_t seed = 1) {
  SuiteResult res{"tateoort", {}};
  Check& cmult = res.add("Teichmuller lift is multiplicative");
  Check& ceig = res.add("[m](psi_i) = chi(m)^i psi_i");
  Check& cgrade = res.add("psi_i psi_j is a multiple of psi_{i+j} (i+j <= p-1)");
  Check& cfact = res.add("b_i = i! mod p for 1 <= i <= p-1");
  Check& cbp = res.add("b_p = p b_{p-1} mod p^N");
  Check& ceps = res.add("epsilon is a unit congruent to -1 mod p");
  Check& chom = res.add("[n] is multiplicative on sampled elements");
  Check& ccounit = res.add("counit(psi_i) = 0");

  std::mt19937_64 rng(seed);
  for (Int p : primes) {
    const TruncatedRing ring(p, precision);
    auto who = [&] { return "p=" + std::to_string(p); };
    std::vector<Int> chi(static_cast<std::size_t>(p), 0);
    for (Int m = 1; m < p; ++m) chi[m] = teichmuller(m, ring);
    for (Int m = 1; m < p; ++m)
      for (Int m2 = 1; m2 < p; ++m2)
        cmult.record(ring.mul(chi[m], chi[m2]) == chi[m * m2 % p], who);

    std::vector<GroupAlgebraElement> psis;
    for (Int i = 1; i < p; ++i) psis.push_back(psi(i, ring));
    for (Int i = 1; i < p; ++i) {
      ccounit.record(psis[i - 1].counit() == 0, who);
      for (Int m = 1; m < p; ++m)
        ceig.record(hopf_power_map(m, psis[i - 1]) == psis[i - 1].scaled(ring.pow(chi[m], i)), who);
    }
    for (Int i = 1; i < p; ++i)
      for (Int j = 1; i + j <= p - 1; ++j) {
        bool ok = true;
        try {
          proportionality_scalar(psis[i - 1] * psis[j - 1], psis[i + j - 1]);
        } catch (const InternalInvariant&) {
          ok = false;
        }
        cgrade.record(ok, who);
      }
    const auto b = b_table(ring);
    for (Int i = 1; i < p; ++i) cfact.record(mod_floor(b[i], p) == factorial_mod(i, p), who);
    cbp.record(b[p] == ring.mul(p, b[p - 1]), who);
    const Int eps = epsilon_unit(ring);
    ceps.record(ring.is_unit(eps) && mod_floor(eps, p) == p - 1, who);

    std::uniform_int_distribution<Int> coeff(0, ring.modulus() - 1);
    for (int sample = 0; sample < 8; ++sample) {
      std::vector<Int> xs(static_cast<std::size_t>(p)), ys(static_cast<std::size_t>(p));
      for (auto& v : xs) v = coeff(rng);
      for (auto& v : ys) v = coeff(rng);
      const GroupAlgebraElement x(ring, xs), y(ring, ys);
      for (Int n = 0; n < p; ++n)
        chom.record(hopf_power_map(n, x * y) == hopf_power_map(n, x) * hopf_power_map(n, y), who);
    }
  }
  return res;
}

inline void print_suite(std::ostream& os, const SuiteResult& s) {
  for (const auto& c : s.checks) {
    os << (c.passed() ? "[PASS] " : "[FAIL] ") << s.suite << ": " << c.name << " (" << c.instances
       << " instances";
    if (!c.passed()) os << ", " << c.failures << " failures, first " << c.witness;
    os << ")\n";
  }
}

}  // namespace hgfree::verify
