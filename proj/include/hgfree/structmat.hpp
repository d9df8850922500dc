#pragma once

// Residue patterns of the matrices M(pi^-nu_k w^k) mod p_K in the boundary
// regime, and the combinatorial certificates that decide whether some
// alpha = sum x_k pi^-nu_k w^k has det M(alpha) != 0 mod p_K.
//
// Row j, column i. Every column has at most one non-zero entry, so a pattern
// is stored as one optional (row, value) per column.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hgfree/arith.hpp"
#include "hgfree/contfrac.hpp"
#include "hgfree/error.hpp"
#include "hgfree/exponents.hpp"
#include "hgfree/params.hpp"

namespace hgfree {

enum class Entry : unsigned char { Zero, One, UnknownUnit };

inline bool nonzero(Entry e) { return e != Entry::Zero; }

class StructureMatrix {
 public:
  struct Cell {
    Int row = -1;
    Entry value = Entry::Zero;
  };

  StructureMatrix(Int k, Int size) : k_(k), cols_(static_cast<std::size_t>(size)) {}

  Int k() const { return k_; }
  Int size() const { return static_cast<Int>(cols_.size()); }

  Entry at(Int j, Int i) const {
    const auto& c = cols_.at(static_cast<std::size_t>(i));
    return c.row == j ? c.value : Entry::Zero;
  }

  /// Row of the only possibly non-zero entry of column i, if it is non-zero.
  std::optional<Int> support_row(Int i) const {
    const auto& c = cols_.at(static_cast<std::size_t>(i));
    if (c.row < 0 || c.value == Entry::Zero) return std::nullopt;
    return c.row;
  }

  void set(Int j, Int i, Entry value) {
    auto& c = cols_.at(static_cast<std::size_t>(i));
    require_invariant(c.row < 0 || c.row == j, "second non-zero entry in a column");
    if (value == Entry::Zero) {
      c = {};
    } else {
      c = {j, value};
    }
  }

  Int count(Entry value) const {
    return std::count_if(cols_.begin(), cols_.end(), [&](const Cell& c) {
      return value == Entry::Zero ? c.row < 0 : (c.row >= 0 && c.value == value);
    });
  }

 private:
  Int k_;
  std::vector<Cell> cols_;
};

/// Pattern of M(pi^-nu_k w^k) mod p_K, with h = p - i:
///   k+i <= p-1: (k+i, i) is One iff h = p, h in E or frac((k+1)a/p) < frac(ha/p);
///   k+i >= p:   (m, i), m = k+i-(p-1), is a unit iff
///               a/p + frac((k+1)a/p) < frac(ha/p) + [h in E].
inline StructureMatrix build_pattern(Int k, const ExponentTable& tab, const DerivedInvariants& d) {
  if (d.regime != Regime::TypicalBoundary)
    throw std::invalid_argument("build_pattern: only defined in the boundary regime");
  const Int p = tab.p();
  if (k < 0 || k >= p) throw std::out_of_range("build_pattern: k out of range");
  const Int a = d.a;
  const Int fk = mod_floor((k + 1) * a, p);  // numerators over p
  StructureMatrix m(k, p);
  for (Int i = 0; i < p; ++i) {
    const Int h = p - i;
    const bool in_E = std::binary_search(tab.E.begin(), tab.E.end(), h);
    const Int fh = mod_floor(h * a, p);
    if (k + i <= p - 1) {
      if (h == p || in_E || fk < fh) m.set(k + i, i, Entry::One);
    } else {
      const Int row = k + i - (p - 1);
      if (a + fk < fh + (in_E ? p : 0)) m.set(row, i, Entry::UnknownUnit);
    }
  }
  return m;
}

inline std::vector<StructureMatrix> build_all_patterns(const ExponentTable& tab,
                                                       const DerivedInvariants& d) {
  std::vector<StructureMatrix> out;
  out.reserve(static_cast<std::size_t>(tab.p()));
  for (Int k = 0; k < tab.p(); ++k) out.push_back(build_pattern(k, tab, d));
  return out;
}

/// Size of a maximum matching in the union support of all patterns.
inline Int max_matching(const std::vector<StructureMatrix>& patterns) {
  if (patterns.empty()) return 0;
  const Int p = patterns.front().size();
  std::vector<std::vector<Int>> adj(static_cast<std::size_t>(p));  // column -> rows
  for (const auto& m : patterns)
    for (Int i = 0; i < p; ++i)
      if (auto j = m.support_row(i)) adj[i].push_back(*j);
  for (auto& rows : adj) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }

  std::vector<Int> row_match(static_cast<std::size_t>(p), -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, Int col) -> bool {
    for (Int j : adj[col]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (row_match[j] < 0 || self(self, row_match[j])) {
        row_match[j] = col;
        return true;
      }
    }
    return false;
  };
  Int size = 0;
  for (Int i = 0; i < p; ++i) {
    seen.assign(static_cast<std::size_t>(p), 0);
    if (augment(augment, i)) ++size;
  }
  return size;
}

struct GeneratorCertificate {
  Int k = 0;                    // alpha_u = u*Id + pi^-nu_k w^k
  std::vector<Int> permutation;  // column i -> row of the u-independent summand
};

struct SufficiencyResult {
  std::optional<GeneratorCertificate> certificate;
  std::vector<std::string> violations;
};

/// Looks for a generator of the form u*Id + pi^-nu_k w^k with k = q_2 - 1
/// (k = 0 when n <= 2). Checks that the u-free part of det M(alpha) is a
/// single non-vanishing permutation summand, so that det = u*P(u) with
/// deg P <= p-2 and P(0) != 0.
inline SufficiencyResult sufficiency_search(const ExponentTable& tab, const DerivedInvariants& d,
                                            const ConvergentTable& ct) {
  SufficiencyResult res;
  const Int p = tab.p();
  const Int n = static_cast<Int>(ct.q.size()) - 1;
  const auto diag = build_pattern(0, tab, d);

  if (n <= 2) {
    for (Int i = 0; i < p; ++i)
      if (diag.at(i, i) != Entry::One)
        res.violations.push_back("diagonal entry (" + std::to_string(i) + "," +
                                 std::to_string(i) + ") of M(1) is zero");
    if (res.violations.empty()) {
      GeneratorCertificate cert;
      cert.permutation.resize(static_cast<std::size_t>(p));
      std::iota(cert.permutation.begin(), cert.permutation.end(), Int{0});
      res.certificate = std::move(cert);
    }
    return res;
  }

  const Int k = ct.q[2] - 1;
  require_invariant(k >= 1 && k <= p - 2, "q_2 - 1 out of range");
  const auto mk = build_pattern(k, tab, d);

  if (diag.at(0, 0) != Entry::One) res.violations.push_back("M(1) has zero at (0,0)");
  bool diag_has_zero = false;
  for (Int i = 0; i < p; ++i) diag_has_zero |= diag.at(i, i) == Entry::Zero;
  if (!diag_has_zero) res.violations.push_back("M(1) has no zero on its diagonal");

  std::vector<Int> perm(static_cast<std::size_t>(p));
  perm[0] = 0;
  for (Int i = 1; i < p; ++i) {
    if (k + i <= p - 1) {
      perm[i] = k + i;
      if (mk.at(k + i, i) != Entry::One)
        res.violations.push_back("entry (" + std::to_string(k + i) + "," + std::to_string(i) +
                                 ") of M(w^" + std::to_string(k) + ") is not 1");
    } else {
      perm[i] = k + i - (p - 1);
      if (!nonzero(mk.at(perm[i], i)))
        res.violations.push_back("entry (" + std::to_string(perm[i]) + "," + std::to_string(i) +
                                 ") of M(w^" + std::to_string(k) + ") is zero");
    }
  }
  // Column 0 of M(w^k) sits in row k != 0, so row 0 of M(alpha) is (u, 0, ..., 0).
  for (Int i = 1; i < p; ++i)
    if (nonzero(mk.at(0, i))) res.violations.push_back("row 0 of M(w^k) is not zero");

  if (res.violations.empty()) {
    std::vector<Int> sorted(perm.begin() + 1, perm.end());
    std::sort(sorted.begin(), sorted.end());
    for (Int i = 1; i < p; ++i) {
      require_invariant(sorted[i - 1] == i, "index map is not a permutation of 1..p-1");
      require_invariant(perm[i] != i, "shift permutation has a fixed point");
    }
    res.certificate = GeneratorCertificate{k, std::move(perm)};
  }
  return res;
}

struct HallCertificate {
  Int s = 0;
  std::vector<Int> h_values;
  std::vector<Int> columns;       // i = p - h
  std::vector<Int> support_rows;  // union of non-zero rows over all k
};

/// Columns h = 2q_{2s-2} and h = q_{2s-2} + r q_{2s-1} + q_{2s} (0 <= r <= a_{2s}),
/// where n = 2s+1 or 2s+2. If their joint row support over every pattern has
/// at most a_{2s}+1 rows, every determinant summand vanishes. Defined for
/// n >= 3; absence for n >= 5 is an invariant violation.
inline std::optional<HallCertificate> necessity_columns(const std::vector<StructureMatrix>& patterns,
                                                        const ConvergentTable& ct) {
  const Int n = static_cast<Int>(ct.q.size()) - 1;
  if (n < 3) throw std::invalid_argument("necessity_columns: requires n >= 3");
  const Int p = ct.q.back();
  const Int s = (n % 2 == 0) ? (n - 2) / 2 : (n - 1) / 2;
  const auto& q = ct.q;
  const Int a2s = ct.quotients[2 * s];

  HallCertificate cert;
  cert.s = s;
  cert.h_values.push_back(2 * q[2 * s - 2]);
  for (Int r = 0; r <= a2s; ++r) cert.h_values.push_back(q[2 * s - 2] + r * q[2 * s - 1] + q[2 * s]);

  bool columns_ok = true;
  for (Int h : cert.h_values) {
    if (h < 1 || h > p) columns_ok = false;
    cert.columns.push_back(p - h);
  }
  std::vector<Int> sorted_cols = cert.columns;
  std::sort(sorted_cols.begin(), sorted_cols.end());
  columns_ok = columns_ok && std::adjacent_find(sorted_cols.begin(), sorted_cols.end()) == sorted_cols.end();

  if (columns_ok) {
    for (const auto& m : patterns)
      for (Int i : cert.columns)
        if (auto j = m.support_row(i)) cert.support_rows.push_back(*j);
    std::sort(cert.support_rows.begin(), cert.support_rows.end());
    cert.support_rows.erase(std::unique(cert.support_rows.begin(), cert.support_rows.end()),
                            cert.support_rows.end());
  }

  const bool found = columns_ok && static_cast<Int>(cert.support_rows.size()) <= a2s + 1;
  require_invariant(found || n < 5, "no Hall violation found although n >= 5");
  if (!found) return std::nullopt;
  return cert;
}

struct StructuralVerdict {
  bool free = false;
  Int matching = 0;
  std::optional<GeneratorCertificate> generator;
  std::optional<HallCertificate> hall;
  std::vector<std::string> sufficiency_violations;
};

/// Decides whether det M(alpha) can be a unit for some alpha, from the
/// patterns alone: true with a generator certificate, false with a Hall
/// certificate. The bipartite matching is a necessary-condition cross-check.
inline StructuralVerdict generic_det_nonzero(const std::vector<StructureMatrix>& patterns,
                                             const ExponentTable& tab, const DerivedInvariants& d,
                                             const ConvergentTable& ct) {
  StructuralVerdict sv;
  sv.matching = max_matching(patterns);
  auto suff = sufficiency_search(tab, d, ct);
  sv.generator = std::move(suff.certificate);
  sv.sufficiency_violations = std::move(suff.violations);
  if (ct.q.size() >= 4) sv.hall = necessity_columns(patterns, ct);

  const Int p = tab.p();
  require_invariant(!(sv.generator && sv.hall), "both a generator and a Hall violation found");
  require_invariant(sv.generator || sv.hall, "neither a generator nor a Hall violation found");
  if (sv.generator) require_invariant(sv.matching == p, "generator found but no perfect matching");
  if (sv.matching < p) require_invariant(!sv.generator, "imperfect matching with a generator");
  if (sv.hall) require_invariant(sv.matching < p, "Hall violation but perfect matching");
  sv.free = sv.generator.has_value();
  return sv;
}

/// Convenience: structural verdict straight from a boundary-regime analysis.
inline StructuralVerdict structural_verdict(const ExponentTable& tab, const DerivedInvariants& d,
                                            const ContinuedFraction& cf) {
  const auto ct = convergents(cf);
  return generic_det_nonzero(build_all_patterns(tab, d), tab, d, ct);
}

}  // namespace hgfree
