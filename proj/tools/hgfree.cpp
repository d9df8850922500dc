// hgfree: command-line front end for the freeness decision and its
// verification suites.
//
// Exit codes: 0 ok, 1 I/O or usage, 2 invalid parameters, 3 invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hgfree/hgfree.hpp"

namespace {

using hgfree::Int;
using hgfree::json;

enum Exit : int { kOk = 0, kUsage = 1, kInvalid = 2, kInvariant = 3 };

struct AnalyzeOpts {
  Int p = 0, e = 0, r = 0, t = 0;
  bool json = false;
  bool matrices = false;
  bool strict = false;
  bool tateoort = false;
  Int precision = 6;
};

void print_text(std::ostream& os, const hgfree::AnalyzeReport& rep) {
  const auto& x = rep.params;
  const auto& d = rep.derived;
  os << "params   p=" << x.p << " e=" << x.e << " r=" << x.r << " t=" << x.t << '\n';
  os << "derived  c=" << d.c << " b=" << d.b << " ell=" << d.ell << " a=" << d.a << " a0=" << d.a0
     << " regime=" << to_string(d.regime) << '\n';
  os << "cf       " << hgfree::ContinuedFraction{d.ell, x.p, rep.cf_quotients}.to_string()
     << " n=" << rep.cf_n << '\n';
  if (rep.exponents) {
    auto row = [&](const char* name, const std::vector<Int>& v) {
      os << name;
      for (Int y : v) os << ' ' << y;
      os << '\n';
    };
    row("nu      ", rep.exponents->nu);
    row("n       ", rep.exponents->n);
    row("E       ", rep.exponents->E);
    os << "precision " << rep.exponents->precision << '\n';
    os << "basis    {pi_K^(-n_i) w^i : 0 <= i <= p-1}\n";
  }
  os << "verdict  " << (rep.free ? "free" : "not free") << " (" << to_string(rep.clause) << ")\n";
  for (const auto& n : rep.notes) os << "  " << n << '\n';
  if (rep.matrices) {
    os << "matrices matching=" << rep.matrices->matching << " certificate=" << rep.matrices->certificate_type
       << ' ' << rep.matrices->certificate_data.dump() << '\n';
  }
  if (rep.tateoort) os << "epsilon  " << rep.tateoort->epsilon << " mod " << rep.tateoort->modulus << '\n';
}

int cmd_analyze(const AnalyzeOpts& o) {
  const hgfree::ExtensionParams x{o.p, o.e, o.r, o.t};
  const auto an = hgfree::analyze(x, o.strict);
  auto rep = hgfree::make_report(an);
  if (o.matrices && an.derived.regime == hgfree::Regime::TypicalBoundary)
    rep.matrices = hgfree::make_matrices_block(*an.table, an.derived, an.cf);
  if (o.tateoort) rep.tateoort = hgfree::make_tateoort_block(x.p, o.precision);
  for (const auto& w : an.warnings) std::cerr << "warning: " << w << '\n';
  if (o.json)
    std::cout << to_json(rep).dump(2) << '\n';
  else
    print_text(std::cout, rep);
  return kOk;
}

struct SweepOpts {
  Int p = 0, r = 0, e_min = 1, e_max = 1;
  std::optional<Int> t_min, t_max;
  std::string csv_out;
  bool allow_gcd = false;
};

int cmd_sweep(const SweepOpts& o) {
  std::optional<std::pair<Int, Int>> t_range;
  if (o.t_min || o.t_max) {
    if (!o.t_min || !o.t_max) {
      std::cerr << "error: --t-min and --t-max must be given together\n";
      return kUsage;
    }
    t_range = std::pair{*o.t_min, *o.t_max};
  }
  const auto rows = hgfree::sweep(o.p, o.r, o.e_min, o.e_max, t_range, {o.allow_gcd});
  if (o.csv_out.empty() || o.csv_out == "-") {
    hgfree::write_sweep_csv(std::cout, rows);
    return kOk;
  }
  std::ofstream out(o.csv_out);
  if (!out) {
    std::cerr << "error: cannot open " << o.csv_out << " for writing\n";
    return kUsage;
  }
  hgfree::write_sweep_csv(out, rows);
  out.close();
  if (!out) {
    std::cerr << "error: failed writing " << o.csv_out << '\n';
    return kUsage;
  }
  return kOk;
}

struct VerifyOpts {
  std::string suite = "all";
  Int p_max = 50;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyOpts& o) {
  namespace hv = hgfree::verify;
  std::vector<hv::SuiteResult> results;
  const bool all = o.suite == "all";
  if (all || o.suite == "contfrac") results.push_back(hv::contfrac_suite(o.p_max));
  if (all || o.suite == "exponents") results.push_back(hv::exponents_suite(o.p_max));
  if (all || o.suite == "matrices") results.push_back(hv::matrices_suite(o.p_max));
  if (all || o.suite == "tateoort") {
    std::vector<Int> primes;
    for (Int p = 3; p <= o.p_max && p <= 13; p += 2)
      if (hgfree::is_prime(p)) primes.push_back(p);
    results.push_back(hv::tateoort_suite(primes, 6, o.seed));
  }
  bool ok = true;
  for (const auto& s : results) {
    hv::print_suite(std::cout, s);
    ok = ok && s.passed();
  }
  std::cout << (ok ? "all checks passed" : "FAILURES found") << '\n';
  return ok ? kOk : kInvariant;
}

int cmd_cf(Int num, Int den) {
  std::cout << hgfree::cf_to_json(hgfree::cf_expand(num, den)).dump(2) << '\n';
  return kOk;
}

int cmd_circle(Int p, Int a) {
  if (p < 2 || a < 1 || a >= p) {
    std::cerr << "error: need 0 < a < p\n";
    return kInvalid;
  }
  hgfree::write_circle_csv(std::cout, a, p);
  return kOk;
}

int cmd_tateoort(Int p, Int precision, std::uint64_t seed) {
  const auto blk = hgfree::make_tateoort_block(p, precision);
  const auto suite = hgfree::verify::tateoort_suite({p}, precision, seed);
  json checks = json::array();
  for (const auto& c : suite.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed()}, {"instances", c.instances}});
  const hgfree::TruncatedRing ring(p, precision);
  json chi = json::array();
  for (Int m = 1; m < p; ++m) chi.push_back(hgfree::teichmuller(m, ring));
  json out = {{"version", HGFREE_VERSION},
              {"p", blk.p},
              {"precision", blk.precision},
              {"modulus", blk.modulus},
              {"teichmuller", chi},
              {"b", blk.b},
              {"epsilon", blk.epsilon},
              {"epsilon_signed", blk.epsilon > blk.modulus / 2 ? blk.epsilon - blk.modulus : blk.epsilon},
              {"checks", checks},
              {"checks_passed", suite.passed()}};
  std::cout << out.dump(2) << '\n';
  return suite.passed() ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freeness of rings of integers in degree p Hopf-Galois extensions"};
  app.set_version_flag("--version", std::string(HGFREE_VERSION));
  app.require_subcommand(1);
  app.footer(
      "Unramified extensions are outside the input space; they are always free.\n"
      "Exit codes: 0 ok, 1 I/O or usage, 2 invalid parameters, 3 invariant violation.");

  AnalyzeOpts ao;
  auto* analyze = app.add_subcommand("analyze", "Decide freeness for one tuple (p, e, r, t)");
  analyze->add_option("--p", ao.p, "Prime degree")->required();
  analyze->add_option("--e", ao.e, "Absolute ramification index of K")->required();
  analyze->add_option("--r", ao.r, "Ramification index of the normal closure over L")->required();
  analyze->add_option("--t", ao.t, "Ramification jump")->required();
  analyze->add_flag("--json", ao.json, "Emit the JSON report");
  analyze->add_flag("--matrices", ao.matrices, "Include structure-matrix certificates (boundary regime)");
  analyze->add_flag("--strict", ao.strict, "Treat gcd(t mod r, r) > 1 as an error");
  analyze->add_flag("--tateoort", ao.tateoort, "Include the group-algebra constants for p");
  analyze->add_option("--precision", ao.precision, "p-adic precision for --tateoort")->check(CLI::PositiveNumber);

  SweepOpts so;
  auto* sweep = app.add_subcommand("sweep", "Tabulate verdicts over ranges of e and t as CSV");
  sweep->add_option("--p", so.p)->required();
  sweep->add_option("--r", so.r)->required();
  sweep->add_option("--e-min", so.e_min);
  sweep->add_option("--e-max", so.e_max);
  sweep->add_option("--t-min", so.t_min);
  sweep->add_option("--t-max", so.t_max);
  sweep->add_option("--csv-out", so.csv_out, "Output path (default stdout)");
  sweep->add_flag("--allow-gcd", so.allow_gcd, "Keep tuples with gcd(t mod r, r) > 1");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Run invariant suites exhaustively");
  verify->add_option("--suite", vo.suite)
      ->check(CLI::IsMember({"contfrac", "exponents", "matrices", "tateoort", "all"}));
  verify->add_option("--p-max", vo.p_max)->check(CLI::Range(Int{3}, Int{1000}));
  verify->add_option("--seed", vo.seed);

  Int cf_num = 0, cf_den = 1;
  auto* cf = app.add_subcommand("cf", "Continued fraction expansion and convergents as JSON");
  cf->add_option("--num", cf_num)->required();
  cf->add_option("--den", cf_den)->required();

  Int circle_p = 0, circle_a = 0;
  auto* circle = app.add_subcommand("circle", "Points h*a/p on the unit circle as CSV");
  circle->add_option("--p", circle_p)->required();
  circle->add_option("--a", circle_a)->required();

  Int to_p = 0, to_precision = 6;
  std::uint64_t to_seed = 1;
  auto* tateoort = app.add_subcommand("tateoort", "Group-algebra constants b_i and epsilon as JSON");
  tateoort->add_option("--p", to_p)->required();
  tateoort->add_option("--precision", to_precision)->check(CLI::PositiveNumber);
  tateoort->add_option("--seed", to_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(ao);
    if (*sweep) return cmd_sweep(so);
    if (*verify) return cmd_verify(vo);
    if (*cf) return cmd_cf(cf_num, cf_den);
    if (*circle) return cmd_circle(circle_p, circle_a);
    if (*tateoort) return cmd_tateoort(to_p, to_precision, to_seed);
  } catch (const hgfree::InvalidParameters& e) {
    std::cerr << "invalid parameters:\n" << e.what() << '\n';
    return kInvalid;
  } catch (const hgfree::InternalInvariant& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
