#pragma once

// Independent reference computations for the test binaries. Nothing here
// calls into the library's derived tables; only plain integer helpers are
// shared.

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline Int fdiv(Int x, Int y) {
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

inline Int fmod(Int x, Int y) { return x - y * fdiv(x, y); }

inline bool prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// ell and a straight from the closed formula ell = (pc(r-1) + t)/r.
struct Ell {
  Int c, ell, a;
};

inline Ell ell_of(Int p, Int r, Int t) {
  const Int c = t % r;
  const Int num = p * c * (r - 1) + t;
  return {c, num / r, (num / r) % p};
}

inline std::vector<Int> nu(Int a, Int ell, Int p) {
  std::vector<Int> out;
  for (Int i = 0; i < p; ++i) out.push_back(fdiv(a + i * ell, p));
  return out;
}

inline std::vector<Int> n_min(const std::vector<Int>& v) {
  const Int p = static_cast<Int>(v.size());
  std::vector<Int> out;
  for (Int i = 0; i < p; ++i) {
    Int best = v[i] - v[0];
    for (Int j = 1; i + j < p; ++j) best = std::min(best, v[i + j] - v[j]);
    out.push_back(best);
  }
  return out;
}

/// Continued fraction quotients by repeated reciprocal of the remainder.
inline std::vector<Int> quotients(Int num, Int den) {
  std::vector<Int> out;
  while (den != 0) {
    out.push_back(fdiv(num, den));
    const Int r = num - den * out.back();
    num = den;
    den = r;
  }
  return out;
}

/// Value of [q_0; q_1, ..., q_k] as a reduced fraction, evaluated from the
/// tail upward.
inline std::pair<Int, Int> evaluate(const std::vector<Int>& qs, std::size_t k) {
  Int num = qs[k], den = 1;
  for (std::size_t j = k; j-- > 0;) {
    std::swap(num, den);
    num += qs[j] * den;
    const Int g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return {num, den};
}

/// Freeness for cyclic degree p extensions with jump t (r = 1).
inline bool cyclic_free(Int p, Int e, Int t) {
  const Int a = t % p;
  if (a == 0) return true;
  if ((t + 1) * (p - 1) < p * e) return (p - 1) % a == 0;
  return quotients(t, p).size() - 1 <= 4;
}

/// Valuation of the entry in column i of M(pi^-nu_k w^k) together with its
/// row, from the action of w raising valuations by ell and the relation
/// w^p = lambda w with v(lambda) = e + (p-1)(r-1)c/r.
struct Cell {
  Int row;
  Int valuation;
};

inline Cell pattern_cell(Int k, Int i, Int p, Int e, Int r, Int c, const std::vector<Int>& nu_tab,
                         const std::vector<Int>& n_tab) {
  if (k + i <= p - 1) return {k + i, nu_tab[k + i] - nu_tab[k] - n_tab[i]};
  const Int m = k + i - (p - 1);
  return {m, e + (p - 1) * (r - 1) * c / r + nu_tab[m] - nu_tab[k] - n_tab[i]};
}

/// Teichmuller lift as m^(p^(N-1)) mod p^N.
inline Int teichmuller_power(Int m, Int p, Int N) {
  Int mod = 1;
  for (Int i = 0; i < N; ++i) mod *= p;
  Int exp = mod / p;
  Int base = fmod(m, mod), out = 1;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) out = static_cast<Int>(static_cast<unsigned __int128>(out) * base % mod);
    base = static_cast<Int>(static_cast<unsigned __int128>(base) * base % mod);
  }
  return out;
}

inline Int factorial_mod(Int i, Int p) {
  Int f = 1;
  for (Int j = 2; j <= i; ++j) f = f * j % p;
  return f;
}

}  // namespace oracle
