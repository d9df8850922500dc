#pragma once

// Machine-readable output: the `analyze` JSON report and the `sweep` CSV.
// JSON keys are lower_snake_case; the version string lives only in the
// top-level "version" field so data payloads are byte-stable.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgfree/contfrac.hpp"
#include "hgfree/structmat.hpp"
#include "hgfree/tateoort.hpp"
#include "hgfree/verdict.hpp"

#ifndef HGFREE_VERSION
#define HGFREE_VERSION "0.0.0"
#endif

namespace hgfree {

using nlohmann::json;

struct PatternSummary {
  Int k = 0;
  Int ones = 0;
  Int units = 0;
  friend bool operator==(const PatternSummary&, const PatternSummary&) = default;
};

struct MatricesBlock {
  std::vector<PatternSummary> patterns_summary;
  Int matching = 0;
  std::string certificate_type;  // "generator" | "hall"
  json certificate_data;
  friend bool operator==(const MatricesBlock&, const MatricesBlock&) = default;
};

struct TateOortBlock {
  Int p = 0;
  Int precision = 0;
  Int modulus = 0;
  std::vector<Int> b;  // b_1 .. b_p
  Int epsilon = 0;
  friend bool operator==(const TateOortBlock&, const TateOortBlock&) = default;
};

struct AnalyzeReport {
  std::string version = HGFREE_VERSION;
  ExtensionParams params;
  DerivedInvariants derived;
  std::vector<Int> cf_quotients;
  Int cf_n = 0;
  std::optional<ExponentTable> exponents;
  bool free = false;
  Clause clause = Clause::MaximalRamification;
  bool associated_order_maximal = false;
  std::vector<std::string> notes;
  std::optional<MatricesBlock> matrices;
  std::optional<TateOortBlock> tateoort;
};

inline MatricesBlock make_matrices_block(const ExponentTable& tab, const DerivedInvariants& d,
                                         const ContinuedFraction& cf) {
  const auto ct = convergents(cf);
  const auto patterns = build_all_patterns(tab, d);
  const auto sv = generic_det_nonzero(patterns, tab, d, ct);
  MatricesBlock mb;
  for (const auto& m : patterns)
    mb.patterns_summary.push_back({m.k(), m.count(Entry::One), m.count(Entry::UnknownUnit)});
  mb.matching = sv.matching;
  if (sv.generator) {
    mb.certificate_type = "generator";
    mb.certificate_data = {{"k", sv.generator->k}, {"permutation", sv.generator->permutation}};
  } else {
    mb.certificate_type = "hall";
    mb.certificate_data = {{"s", sv.hall->s},
                           {"h", sv.hall->h_values},
                           {"columns", sv.hall->columns},
                           {"support_rows", sv.hall->support_rows}};
  }
  return mb;
}

inline TateOortBlock make_tateoort_block(Int p, Int precision) {
  const TruncatedRing ring(p, precision);
  const auto b = b_table(ring);
  TateOortBlock blk;
  blk.p = p;
  blk.precision = precision;
  blk.modulus = ring.modulus();
  blk.b.assign(b.begin() + 1, b.end());
  blk.epsilon = epsilon_unit(ring);
  return blk;
}

inline AnalyzeReport make_report(const Analysis& an) {
  AnalyzeReport rep;
  rep.params = an.params;
  rep.derived = an.derived;
  rep.cf_quotients = an.cf.quotients;
  rep.cf_n = static_cast<Int>(an.cf.length());
  rep.exponents = an.table;
  rep.free = an.verdict.free;
  rep.clause = an.verdict.clause;
  rep.associated_order_maximal = an.verdict.associated_order_maximal;
  rep.notes = an.verdict.notes;
  return rep;
}

inline std::optional<Regime> regime_from_string(const std::string& s) {
  for (auto r : {Regime::Maximal, Regime::TypicalStable, Regime::TypicalBoundary})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

inline std::optional<Clause> clause_from_string(const std::string& s) {
  for (auto c : {Clause::MaximalRamification, Clause::StableDivisibility, Clause::BoundaryContinuedFraction})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

inline json to_json(const AnalyzeReport& r) {
  json j;
  j["version"] = r.version;
  j["params"] = {{"p", r.params.p}, {"e", r.params.e}, {"r", r.params.r}, {"t", r.params.t}};
  j["derived"] = {{"c", r.derived.c},
                  {"b", r.derived.b},
                  {"ell", r.derived.ell},
                  {"a", r.derived.a},
                  {"a0", r.derived.a0},
                  {"regime", std::string(to_string(r.derived.regime))},
                  {"coprimality_warning", r.derived.coprimality_warning}};
  j["cf"] = {{"quotients", r.cf_quotients}, {"n", r.cf_n}};
  if (r.exponents) {
    j["exponents"] = {{"nu", r.exponents->nu},
                      {"n", r.exponents->n},
                      {"precision", r.exponents->precision},
                      {"E", r.exponents->E}};
  } else {
    j["exponents"] = nullptr;
  }
  j["verdict"] = {{"free", r.free},
                  {"clause", std::string(to_string(r.clause))},
                  {"associated_order_maximal", r.associated_order_maximal},
                  {"notes", r.notes}};
  if (r.matrices) {
    json ps = json::array();
    for (const auto& s : r.matrices->patterns_summary)
      ps.push_back({{"k", s.k}, {"ones", s.ones}, {"units", s.units}});
    j["matrices"] = {{"patterns_summary", ps},
                     {"matching", r.matrices->matching},
                     {"certificate", {{"type", r.matrices->certificate_type},
                                      {"data", r.matrices->certificate_data}}}};
  }
  if (r.tateoort) {
    j["tateoort"] = {{"p", r.tateoort->p},
                     {"precision", r.tateoort->precision},
                     {"modulus", r.tateoort->modulus},
                     {"b", r.tateoort->b},
                     {"epsilon", r.tateoort->epsilon}};
  }
  return j;
}

/// Inverse of to_json. The d/omega scaffold tables are not serialized; they
/// are restored from nu and n, which they equal.
inline AnalyzeReport report_from_json(const json& j) {
  AnalyzeReport r;
  r.version = j.at("version").get<std::string>();
  const auto& pj = j.at("params");
  r.params = {pj.at("p").get<Int>(), pj.at("e").get<Int>(), pj.at("r").get<Int>(), pj.at("t").get<Int>()};
  const auto& dj = j.at("derived");
  r.derived.c = dj.at("c").get<Int>();
  r.derived.b = dj.at("b").get<Int>();
  r.derived.ell = dj.at("ell").get<Int>();
  r.derived.a = dj.at("a").get<Int>();
  r.derived.a0 = dj.at("a0").get<Int>();
  auto regime = regime_from_string(dj.at("regime").get<std::string>());
  if (!regime) throw std::invalid_argument("unknown regime");
  r.derived.regime = *regime;
  r.derived.coprimality_warning = dj.at("coprimality_warning").get<bool>();
  r.cf_quotients = j.at("cf").at("quotients").get<std::vector<Int>>();
  r.cf_n = j.at("cf").at("n").get<Int>();
  if (const auto& ej = j.at("exponents"); !ej.is_null()) {
    ExponentTable t;
    t.nu = ej.at("nu").get<std::vector<Int>>();
    t.n = ej.at("n").get<std::vector<Int>>();
    t.d = t.nu;
    t.omega = t.n;
    t.precision = ej.at("precision").get<Int>();
    t.E = ej.at("E").get<std::vector<Int>>();
    r.exponents = std::move(t);
  }
  const auto& vj = j.at("verdict");
  r.free = vj.at("free").get<bool>();
  auto clause = clause_from_string(vj.at("clause").get<std::string>());
  if (!clause) throw std::invalid_argument("unknown clause");
  r.clause = *clause;
  r.associated_order_maximal = vj.at("associated_order_maximal").get<bool>();
  r.notes = vj.at("notes").get<std::vector<std::string>>();
  if (j.contains("matrices")) {
    const auto& mj = j.at("matrices");
    MatricesBlock mb;
    for (const auto& s : mj.at("patterns_summary"))
      mb.patterns_summary.push_back({s.at("k").get<Int>(), s.at("ones").get<Int>(), s.at("units").get<Int>()});
    mb.matching = mj.at("matching").get<Int>();
    mb.certificate_type = mj.at("certificate").at("type").get<std::string>();
    mb.certificate_data = mj.at("certificate").at("data");
    r.matrices = std::move(mb);
  }
  if (j.contains("tateoort")) {
    const auto& tj = j.at("tateoort");
    r.tateoort = TateOortBlock{tj.at("p").get<Int>(), tj.at("precision").get<Int>(),
                               tj.at("modulus").get<Int>(), tj.at("b").get<std::vector<Int>>(),
                               tj.at("epsilon").get<Int>()};
  }
  return r;
}

inline constexpr const char* kSweepHeader = "p,e,r,t,c,ell,a,regime,n,free,clause";

/// One CSV line per row. Skipped tuples carry `skipped:<reason>` in the
/// clause column and leave the computed columns empty.
inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepHeader << '\n';
  for (const auto& row : rows) {
    const auto& x = row.params;
    os << x.p << ',' << x.e << ',' << x.r << ',' << x.t << ',';
    if (!row.verdict) {
      os << ",,,,,,skipped:" << row.skipped << '\n';
      continue;
    }
    const auto& d = *row.derived;
    const auto& v = *row.verdict;
    os << d.c << ',' << d.ell << ',' << d.a << ',' << to_string(d.regime) << ',';
    if (v.cf_length) os << *v.cf_length;
    os << ',' << (v.free ? "true" : "false") << ',' << to_string(v.clause) << '\n';
  }
}

inline json cf_to_json(const ContinuedFraction& cf) {
  const auto ct = convergents(cf);
  return {{"numerator", cf.numerator},
          {"denominator", cf.denominator},
          {"quotients", cf.quotients},
          {"n", static_cast<Int>(cf.length())},
          {"convergents", {{"p", ct.p}, {"q", ct.q}}}};
}

inline void write_circle_csv(std::ostream& os, Int a, Int p) {
  os << "h,ha_mod_p,frac_numerator,frac_denominator\n";
  for (const auto& pt : circle_points(a, p))
    os << pt.h << ',' << pt.residue << ',' << frac_part(pt.h, a, p).num << ',' << p << '\n';
}

}  // namespace hgfree
