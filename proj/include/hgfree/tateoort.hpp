#pragma once

// Arithmetic in the truncated group algebra (Z/p^N)[C_p], C_p = <sigma>.
// Provides the Teichmuller lift, the maps [n], the eigenelements psi_i of the
// eigenspace decomposition and the scalars b_i with psi^i = b_i psi_i
// (psi^p = b_p psi), where psi = psi_1.

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hgfree/arith.hpp"
#include "hgfree/error.hpp"

namespace hgfree {

__extension__ using Wide = __int128;

/// Z/p^N with exact residue arithmetic.
class TruncatedRing {
 public:
  TruncatedRing(Int p, Int precision) : p_(p), precision_(precision) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("TruncatedRing: p must be an odd prime");
    if (precision < 1) throw std::invalid_argument("TruncatedRing: precision must be >= 1");
    modulus_ = 1;
    for (Int i = 0; i < precision; ++i) {
      if (modulus_ > std::numeric_limits<Int>::max() / 4 / p)
        throw std::invalid_argument("TruncatedRing: p^N too large");
      modulus_ *= p;
    }
  }

  Int p() const { return p_; }
  Int precision() const { return precision_; }
  Int modulus() const { return modulus_; }

  Int reduce(Int x) const { return mod_floor(x, modulus_); }
  Int add(Int x, Int y) const { return reduce(x + y); }
  Int sub(Int x, Int y) const { return reduce(x - y); }
  Int neg(Int x) const { return reduce(-x); }
  Int mul(Int x, Int y) const {
    return static_cast<Int>(static_cast<Wide>(reduce(x)) * reduce(y) % modulus_);
  }
  Int pow(Int x, Int e) const {
    Int result = 1 % modulus_, base = reduce(x);
    for (; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  bool is_unit(Int x) const { return mod_floor(x, p_) != 0; }
  Int inverse(Int x) const {
    if (!is_unit(x)) throw std::domain_error("TruncatedRing: inverse of a non-unit");
    // x^(phi(p^N) - 1)
    const Int phi = modulus_ / p_ * (p_ - 1);
    return pow(x, phi - 1);
  }

  friend bool operator==(const TruncatedRing& x, const TruncatedRing& y) {
    return x.p_ == y.p_ && x.precision_ == y.precision_;
  }

 private:
  Int p_;
  Int precision_;
  Int modulus_ = 1;
};

/// sum_m c_m sigma^m in (Z/p^N)[C_p].
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(TruncatedRing ring)
      : ring_(ring), coeffs_(static_cast<std::size_t>(ring.p()), 0) {}

  GroupAlgebraElement(TruncatedRing ring, std::vector<Int> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    if (static_cast<Int>(coeffs_.size()) != ring_.p())
      throw std::invalid_argument("GroupAlgebraElement: need exactly p coefficients");
    for (auto& c : coeffs_) c = ring_.reduce(c);
  }

  static GroupAlgebraElement identity(TruncatedRing ring) { return group_like(ring, 0); }
  static GroupAlgebraElement group_like(TruncatedRing ring, Int m) {
    GroupAlgebraElement x(ring);
    x.coeffs_[static_cast<std::size_t>(mod_floor(m, ring.p()))] = 1;
    return x;
  }

  const TruncatedRing& ring() const { return ring_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int operator[](Int m) const { return coeffs_[static_cast<std::size_t>(m)]; }

  /// Augmentation: sum of coefficients.
  Int counit() const {
    Int s = 0;
    for (Int c : coeffs_) s = ring_.add(s, c);
    return s;
  }

  GroupAlgebraElement scaled(Int s) const {
    GroupAlgebraElement out(ring_);
    for (std::size_t m = 0; m < coeffs_.size(); ++m) out.coeffs_[m] = ring_.mul(s, coeffs_[m]);
    return out;
  }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    GroupAlgebraElement out(x.ring_);
    for (std::size_t m = 0; m < x.coeffs_.size(); ++m) out.coeffs_[m] = x.ring_.add(x.coeffs_[m], y.coeffs_[m]);
    return out;
  }
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    return x + y.scaled(-1);
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    const auto p = x.coeffs_.size();
    GroupAlgebraElement out(x.ring_);
    for (std::size_t i = 0; i < p; ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) {
        auto& slot = out.coeffs_[(i + j) % p];
        slot = x.ring_.add(slot, x.ring_.mul(x.coeffs_[i], y.coeffs_[j]));
      }
    }
    return out;
  }
  friend bool operator==(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    return x.ring_ == y.ring_ && x.coeffs_ == y.coeffs_;
  }

 private:
  TruncatedRing ring_;
  std::vector<Int> coeffs_;
};

/// Teichmuller lift chi(m): the (p-1)-st root of unity congruent to m mod p,
/// reached as the fixed point of x -> x^p.
inline Int teichmuller(Int m, const TruncatedRing& ring) {
  if (mod_floor(m, ring.p()) == 0) throw std::invalid_argument("teichmuller: m must be prime to p");
  Int x = ring.reduce(m);
  for (Int iter = 0; iter <= ring.precision() + 1; ++iter) {
    const Int next = ring.pow(x, ring.p());
    if (next == x) break;
    x = next;
  }
  require_invariant(ring.pow(x, ring.p()) == x, "Teichmuller iteration did not stabilize");
  require_invariant(mod_floor(x - m, ring.p()) == 0, "Teichmuller lift not congruent to m");
  return x;
}

/// psi_i = -sum_{m=1}^{p-1} chi(m)^{-i} sigma^m for 1 <= i <= p-2, and
/// psi_{p-1} = (p-1) Id - sum_{m=1}^{p-1} sigma^m.
inline GroupAlgebraElement psi(Int i, const TruncatedRing& ring) {
  const Int p = ring.p();
  if (i < 1 || i > p - 1) throw std::invalid_argument("psi: index must be in [1, p-1]");
  std::vector<Int> c(static_cast<std::size_t>(p), 0);
  if (i == p - 1) {
    c[0] = p - 1;
    for (Int m = 1; m < p; ++m) c[m] = -1;
  } else {
    for (Int m = 1; m < p; ++m) {
      const Int chi_inv = ring.inverse(teichmuller(m, ring));
      c[m] = ring.neg(ring.pow(chi_inv, i));
    }
  }
  return GroupAlgebraElement(ring, std::move(c));
}

/// [n](sigma^m) = sigma^{nm}, extended linearly; [0] is the counit times Id.
inline GroupAlgebraElement hopf_power_map(Int n, const GroupAlgebraElement& x) {
  const auto& ring = x.ring();
  const Int p = ring.p();
  std::vector<Int> c(static_cast<std::size_t>(p), 0);
  for (Int m = 0; m < p; ++m) {
    auto& slot = c[static_cast<std::size_t>(mod_floor(n * m, p))];
    slot = ring.add(slot, x[m]);
  }
  return GroupAlgebraElement(ring, std::move(c));
}

/// Solves value = s * target for the scalar s. Requires a unit coefficient in
/// the target and agreement on every coefficient.
inline Int proportionality_scalar(const GroupAlgebraElement& value, const GroupAlgebraElement& target) {
  const auto& ring = target.ring();
  const Int p = ring.p();
  Int pivot = -1;
  for (Int m = 0; m < p && pivot < 0; ++m)
    if (ring.is_unit(target[m])) pivot = m;
  require_invariant(pivot >= 0, "target has no unit coefficient");
  const Int s = ring.mul(value[pivot], ring.inverse(target[pivot]));
  for (Int m = 0; m < p; ++m)
    require_invariant(ring.mul(s, target[m]) == value[m], "element is not proportional to target");
  return s;
}

/// b_i with psi^i = b_i psi_i for 1 <= i <= p-1, and psi^p = b_p psi.
inline Int compute_b(Int i, const TruncatedRing& ring) {
  const Int p = ring.p();
  if (i < 1 || i > p) throw std::invalid_argument("compute_b: index must be in [1, p]");
  const auto base = psi(1, ring);
  auto power = base;
  for (Int j = 2; j <= i; ++j) power = power * base;
  return proportionality_scalar(power, i == p ? base : psi(i, ring));
}

/// All b_1..b_p at once (index 0 unused).
inline std::vector<Int> b_table(const TruncatedRing& ring) {
  const Int p = ring.p();
  std::vector<Int> b(static_cast<std::size_t>(p + 1), 0);
  const auto base = psi(1, ring);
  auto power = base;
  b[1] = proportionality_scalar(power, base);
  for (Int i = 2; i <= p; ++i) {
    power = power * base;
    b[i] = proportionality_scalar(power, i == p ? base : psi(i, ring));
  }
  return b;
}

/// The unit epsilon = b_{p-1} in w^p = epsilon p y^{(p-1)(r-1)} w.
inline Int epsilon_unit(const TruncatedRing& ring) {
  const Int eps = compute_b(ring.p() - 1, ring);
  require_invariant(ring.is_unit(eps), "epsilon is not a unit");
  return eps;
}

}  // namespace hgfree
