#pragma once

// Finite continued fractions of x/p, convergent denominators, semiconvergents,
// and the circle geometry of the points h*a/p mod 1.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgfree/arith.hpp"
#include "hgfree/error.hpp"

namespace hgfree {

struct ContinuedFraction {
  Int numerator = 0;
  Int denominator = 1;
  std::vector<Int> quotients;  // a_0; a_1, ..., a_n

  /// Index n of the last partial quotient.
  std::size_t length() const { return quotients.size() - 1; }

  std::string to_string() const {
    std::ostringstream os;
    os << '[' << quotients.front();
    for (std::size_t i = 1; i < quotients.size(); ++i) os << (i == 1 ? ";" : ",") << quotients[i];
    os << ']';
    return os.str();
  }
};

/// Canonical expansion: the last quotient is >= 2 whenever n >= 1.
inline ContinuedFraction cf_expand(Int num, Int den) {
  if (den <= 0) throw std::invalid_argument("cf_expand: denominator must be positive");
  if (num < 0) throw std::invalid_argument("cf_expand: numerator must be nonnegative");
  const Int g = std::gcd(num, den);
  ContinuedFraction cf;
  cf.numerator = g ? num / g : 0;
  cf.denominator = g ? den / g : 1;
  Int x = cf.numerator, y = cf.denominator;
  while (y != 0) {
    cf.quotients.push_back(x / y);
    Int rem = x % y;
    x = y;
    y = rem;
  }
  return cf;
}

struct ConvergentTable {
  std::vector<Int> p;  // numerators p_i
  std::vector<Int> q;  // denominators q_i
  std::vector<Int> quotients;

  /// Semiconvergent denominator q_{i,r} = r*q_{i+1} + q_i, 0 <= r <= a_{i+2}.
  Int semiconvergent(std::size_t i, Int r) const {
    if (i + 2 >= q.size() || r < 0 || r > quotients[i + 2])
      throw std::out_of_range("semiconvergent index out of range");
    return r * q[i + 1] + q[i];
  }
};

inline ConvergentTable convergents(const ContinuedFraction& cf) {
  ConvergentTable t;
  t.quotients = cf.quotients;
  Int p_prev2 = 0, p_prev1 = 1;
  Int q_prev2 = 1, q_prev1 = 0;
  for (Int a : cf.quotients) {
    const Int pn = a * p_prev1 + p_prev2;
    const Int qn = a * q_prev1 + q_prev2;
    t.p.push_back(pn);
    t.q.push_back(qn);
    p_prev2 = p_prev1;
    p_prev1 = pn;
    q_prev2 = q_prev1;
    q_prev1 = qn;
  }
  require_invariant(t.q.back() == cf.denominator, "q_n must equal the denominator");
  return t;
}

/// Fractional part of h*a/p, as (h*a mod p)/p.
inline Fraction frac_part(Int h, Int a, Int p) { return {mod_floor(h * a, p), p}; }

/// Distance of h*a/p to the nearest integer.
inline Fraction dist_nearest(Int h, Int a, Int p) {
  const Int m = mod_floor(h * a, p);
  return {std::min(m, p - m), p};
}

/// Running strict minima of h -> frac(h*a/p) over 1 <= h < p, by direct scan.
inline std::vector<Int> set_E_bruteforce(Int a, Int p) {
  std::vector<Int> out;
  Int best = p;
  for (Int h = 1; h < p; ++h) {
    const Int m = mod_floor(h * a, p);
    if (m < best) {
      out.push_back(h);
      best = m;
    }
  }
  return out;
}

/// E as the union of even-index semiconvergent denominators of a/p.
/// Requires n >= 2.
inline std::vector<Int> set_E_semiconvergents(Int a, Int p) {
  const auto cf = cf_expand(a, p);
  const auto n = static_cast<Int>(cf.length());
  if (n < 2) throw std::invalid_argument("set_E_semiconvergents: requires expansion length >= 2");
  const auto ct = convergents(cf);
  std::vector<Int> out;
  for (Int i = 0; 2 * i < n - 1; ++i) {
    const Int top = (2 * i == n - 3) ? cf.quotients[2 * i + 2] : cf.quotients[2 * i + 2] - 1;
    for (Int r = 0; r <= top; ++r) out.push_back(ct.semiconvergent(2 * i, r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// E for any 0 < a < p: semiconvergent description where it applies, brute
/// force otherwise.
inline std::vector<Int> set_E(Int a, Int p) {
  if (cf_expand(a, p).length() >= 2) return set_E_semiconvergents(a, p);
  return set_E_bruteforce(a, p);
}

/// Circle distance between the points M_h and M_k.
inline Fraction circle_distance(Int h, Int k, Int a, Int p) { return dist_nearest(h - k, a, p); }

/// Checks the density property for every 1 <= h < p: whenever M_h lies strictly
/// between M_{q_{2i+2}} and M_{q_{2i}}, some semiconvergent q_{2i,r} lies
/// within ||q_{2i+1} a/p|| of h, and every such q_{2i,r} closer than q_{2i+2}
/// in index equals h.
inline bool density_check(Int a, Int p) {
  const auto cf = cf_expand(a, p);
  const auto n = static_cast<Int>(cf.length());
  const auto ct = convergents(cf);
  for (Int h = 1; h < p; ++h) {
    const Fraction fh = frac_part(h, a, p);
    for (Int i = 0; 2 * i < n - 1; ++i) {
      const Fraction lo = frac_part(ct.q[2 * i + 2], a, p);
      const Fraction hi = frac_part(ct.q[2 * i], a, p);
      if (!(lo < fh && fh < hi)) continue;
      const Fraction radius = dist_nearest(ct.q[2 * i + 1], a, p);
      bool found = false;
      for (Int r = 0; r <= cf.quotients[2 * i + 2]; ++r) {
        const Int qr = ct.semiconvergent(2 * i, r);
        if (!(circle_distance(h, qr, a, p) < radius)) continue;
        found = true;
        const Int gap = h > qr ? h - qr : qr - h;
        if (gap < ct.q[2 * i + 2] && h != qr) return false;
      }
      if (!found) return false;
    }
  }
  return true;
}

struct CirclePoint {
  Int h;
  Int residue;  // h*a mod p; the arc length from the origin is residue/p
};

inline std::vector<CirclePoint> circle_points(Int a, Int p) {
  std::vector<CirclePoint> pts;
  for (Int h = 1; h < p; ++h) pts.push_back({h, mod_floor(h * a, p)});
  return pts;
}

}  // namespace hgfree
