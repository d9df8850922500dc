#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>

namespace hgfree {

using Int = std::int64_t;

constexpr bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Floor division and non-negative remainder for a positive divisor.
constexpr Int floor_div(Int x, Int m) {
  Int q = x / m;
  if ((x % m != 0) && (x < 0)) --q;
  return q;
}

constexpr Int mod_floor(Int x, Int m) { return x - m * floor_div(x, m); }

constexpr bool divides(Int d, Int n) { return d != 0 && n % d == 0; }

/// Exact nonnegative rational num/den with den > 0. Only ever compared by
/// cross-multiplication; never normalized to floating point.
struct Fraction {
  Int num = 0;
  Int den = 1;

  friend constexpr bool operator==(const Fraction& x, const Fraction& y) {
    return x.num * y.den == y.num * x.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
    return x.num * y.den <=> y.num * x.den;
  }
  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.num << '/' << f.den;
  }
};

}  // namespace hgfree
