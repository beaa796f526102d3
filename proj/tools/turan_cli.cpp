// turan: construct, certify and scan extremal power-sum tuples; verify inf-max equalities;
// run multi-start minimax searches.
//
// Exit codes: 0 success, 1 verification failed, 2 usage or hypothesis error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "turan/bounds.hpp"
#include "turan/difference_sets.hpp"
#include "turan/error.hpp"
#include "turan/json_io.hpp"
#include "turan/numtheory.hpp"
#include "turan/optimizer.hpp"
#include "turan/power_sums.hpp"

namespace {

using turan::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const json& j) const {
    std::ostringstream os;
    if (format == "human") {
      turan::write_human(os, j);
    } else {
      os << j.dump(2) << '\n';
    }
    write(os.str());
  }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw turan::Error(turan::ErrorCode::InvalidInput, "cannot open output file " + path);
    f << text;
  }
};

void add_output(CLI::App* cmd, Output& out, std::initializer_list<std::string> formats) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember(std::vector<std::string>(formats)));
  cmd->add_option("--output,-o", out.path, "Write to a file instead of standard output");
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  std::int64_t n = 0;
  std::int64_t p = 0;
};

int cmd_construct(const ConstructArgs& a, const Output& out) {
  const auto kind = turan::parse_set_kind(a.kind);
  turan::DifferenceSet ds;
  switch (*kind) {
    case turan::SetKind::Singer:
      if (a.n == 0) throw turan::Error(turan::ErrorCode::ParamViolation, "--n is required for singer");
      if (a.n < 3 || !turan::nt::as_prime_power(a.n - 1)) {
        throw turan::Error(turan::ErrorCode::NotPrimePower,
                           "NotPrimePower(" + std::to_string(a.n - 1) + "): n-1 must be a prime power");
      }
      ds = turan::singer(a.n);
      break;
    case turan::SetKind::Bose:
      if (a.n == 0) throw turan::Error(turan::ErrorCode::ParamViolation, "--n is required for bose");
      ds = turan::bose(a.n);
      break;
    case turan::SetKind::Ruzsa:
      if (a.p == 0) throw turan::Error(turan::ErrorCode::ParamViolation, "--p is required for ruzsa");
      ds = turan::ruzsa(a.p);
      break;
  }
  const auto cert = turan::certify(ds);
  const bool ok = turan::matches_expected_verdict(ds, cert);
  out.emit(json{{"difference_set", ds}, {"certificate", cert}, {"expected_verdict_met", ok}});
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string kind;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::string file;
  std::int64_t range = 0;
  bool check = false;
  unsigned threads = 1;
};

int cmd_spectrum(const SpectrumArgs& a, Output out) {
  turan::PowerSumSystem sys;
  std::optional<turan::SetKind> closed_form;
  std::int64_t n = 0;
  if (!a.file.empty()) {
    std::ifstream f(a.file);
    if (!f) throw turan::Error(turan::ErrorCode::InvalidInput, "cannot open tuple file " + a.file);
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw turan::Error(turan::ErrorCode::InvalidInput, std::string("malformed tuple file: ") + e.what());
    }
    sys = turan::system_from_json(j);
    n = sys.n();
  } else if (a.kind == "turan") {
    if (a.n < 1) throw turan::Error(turan::ErrorCode::ParamViolation, "--n >= 1 is required for turan");
    sys = turan::turan_tuple(a.n);
    n = a.n;
  } else if (a.kind == "ruzsa") {
    if (a.p == 0) throw turan::Error(turan::ErrorCode::ParamViolation, "--p is required for ruzsa");
    sys = turan::from_difference_set(turan::ruzsa(a.p));
    n = a.p - 1;
  } else if (a.kind == "singer" || a.kind == "bose") {
    closed_form = *turan::parse_set_kind(a.kind);
    n = a.n;
    sys = turan::from_difference_set(*closed_form == turan::SetKind::Singer ? turan::singer(a.n) : turan::bose(a.n));
  } else {
    throw turan::Error(turan::ErrorCode::ParamViolation, "one of --kind or --file is required");
  }
  const turan::Spectrum sp = turan::spectrum(sys, a.range, a.threads);
  int code = kExitOk;
  if (out.format == "csv") {
    std::ostringstream os;
    turan::write_spectrum_csv(os, sp);
    out.write(os.str());
    return code;
  }
  json j = sp;
  if (a.check) {
    if (!closed_form) throw turan::Error(turan::ErrorCode::ParamViolation, "--check needs --kind singer or bose");
    const auto report = turan::check_spectrum(sys, *closed_form, n, a.range);
    j["check"] = report;
    if (!report.passed) code = kExitFailed;
  }
  out.emit(j);
  return code;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  int theorem = 0;
  std::int64_t n = 0;
  std::int64_t i = 0;
  bool all_i = false;
};

int cmd_verify(const VerifyArgs& a, const Output& out) {
  bool all_equal = true;
  if (a.theorem == 1) {
    const auto cert = turan::verify_theorem1(a.n);
    all_equal = cert.verdict == turan::EqualityVerdict::Equal;
    out.emit(cert);
  } else {
    if (a.n < 2 || !turan::nt::as_prime_power(a.n)) {
      throw turan::Error(turan::ErrorCode::NotPrimePower, "NotPrimePower(" + std::to_string(a.n) + "): n must be a prime power");
    }
    if (a.all_i) {
      json certs = json::array();
      for (std::int64_t i = 2; i <= a.n - 1; ++i) {
        const auto cert = turan::verify_theorem2(a.n, i);
        all_equal = all_equal && cert.verdict == turan::EqualityVerdict::Equal;
        certs.push_back(cert);
      }
      if (certs.empty()) throw turan::Error(turan::ErrorCode::ParamViolation, "ParamViolation: n must be >= 3");
      out.emit(certs);
    } else {
      const auto cert = turan::verify_theorem2(a.n, a.i == 0 ? 2 : a.i);
      all_equal = cert.verdict == turan::EqualityVerdict::Equal;
      out.emit(cert);
    }
  }
  return all_equal ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> c;
};

int cmd_bounds(const BoundsArgs& a, const Output& out) {
  if (a.n < 1) throw turan::Error(turan::ErrorCode::ParamViolation, "ParamViolation: n must be >= 1");
  json cassels = json::array();
  json ncs = json::array();
  if (a.m) {
    cassels.push_back(turan::cassels_bound(a.n, *a.m));
  } else if (!a.c) {
    for (std::int64_t m = 1; m <= a.n; ++m) cassels.push_back(turan::cassels_bound(a.n, m));
  }
  if (a.c) {
    ncs.push_back(turan::ncs_bound(a.n, *a.c));
  } else if (!a.m) {
    for (std::int64_t c = 1; c <= std::max<std::int64_t>(a.n - 1, 1); ++c) ncs.push_back(turan::ncs_bound(a.n, c));
  }
  out.emit(json{{"n", a.n}, {"cassels", cassels}, {"ncs", ncs}, {"reference", turan::reference_values(a.n)}});
  return kExitOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::int64_t n = 0;
  std::int64_t range = 0;
  std::string constraint = "unit";
  int restarts = 1;
  std::uint64_t seed = 0;
  double cap_constant = 1.0;
  unsigned threads = 0;
  std::string start_from;
};

// Known extremal constructions whose problem matches (n, range, constraint).
std::vector<std::pair<std::string, turan::PowerSumSystem>> constructions_for(std::int64_t n, std::int64_t range,
                                                                             turan::Constraint c) {
  std::vector<std::pair<std::string, turan::PowerSumSystem>> out;
  if (c == turan::Constraint::FirstFixed) return out;
  if (range == n) out.emplace_back("turan", turan::turan_tuple(n));
  if (n >= 3 && range == n * n - n && turan::nt::as_prime_power(n - 1)) {
    out.emplace_back("singer", turan::from_difference_set(turan::singer(n)));
  }
  if (n >= 3 && range >= n * n - n + 1 && range <= n * n - 2 && turan::nt::as_prime_power(n)) {
    out.emplace_back("bose", turan::from_difference_set(turan::bose(n)));
  }
  if (n >= 2 && range == n * n && turan::nt::is_prime(n + 1)) {
    out.emplace_back("ruzsa", turan::from_difference_set(turan::ruzsa(n + 1)));
  }
  return out;
}

turan::SearchSpec make_spec(const SearchArgs& a) {
  turan::SearchSpec spec;
  spec.n = a.n;
  spec.range = a.range;
  spec.constraint = *turan::parse_constraint(a.constraint);
  spec.restarts = a.restarts;
  spec.seed = a.seed;
  spec.cap_constant = a.cap_constant;
  spec.threads = a.threads;
  if (!a.start_from.empty()) {
    for (auto& [name, sys] : constructions_for(a.n, a.range, turan::Constraint::UnitCircle)) {
      if (name == a.start_from) spec.starts.push_back(sys);
    }
    if (spec.starts.empty()) {
      throw turan::Error(turan::ErrorCode::ParamViolation, "no " + a.start_from + " construction for this (n, range)");
    }
  }
  spec.validate();
  return spec;
}

json search_report(const turan::SearchSpec& spec) {
  const turan::SearchResult result = turan::minimize(spec);
  json j = result;
  json comparisons = json::array();
  for (const auto& [name, sys] : constructions_for(spec.n, spec.range, spec.constraint)) {
    json row = turan::compare_to_construction(result, sys, name);
    // Conjugation also preserves every |S_nu| but is outside the canonical orbit.
    row["conjugate_distance"] = turan::compare_to_construction(result, turan::conjugated(sys), name).distance;
    comparisons.push_back(row);
  }
  j["comparisons"] = comparisons;
  return j;
}

int cmd_search(const SearchArgs& a, const Output& out) {
  out.emit(search_report(make_spec(a)));
  return kExitOk;
}

// ---------------------------------------------------------------- explore

struct ExploreArgs {
  int problem = 1;
  int restarts = 50;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

json explore_search(std::int64_t n, std::int64_t range, turan::Constraint c, const ExploreArgs& a) {
  SearchArgs s;
  s.n = n;
  s.range = range;
  s.constraint = turan::to_string(c);
  s.restarts = a.restarts;
  s.seed = a.seed;
  s.threads = a.threads;
  const json full = search_report(make_spec(s));
  return json{{"n", n},
              {"range", range},
              {"constraint", turan::to_string(c)},
              {"best_value", full["best_value"]},
              {"best_tuple", full["best_tuple"]},
              {"canonical", full["canonical"]},
              {"bound_check", full["bound_check"]},
              {"comparisons", full["comparisons"]}};
}

int cmd_explore(const ExploreArgs& a, const Output& out) {
  json report{{"problem", a.problem}, {"restarts", a.restarts}, {"seed", a.seed}};
  json runs = json::array();
  switch (a.problem) {
    case 1: {
      // Ruzsa-set tuples over nu = 1..n^2 against the [sqrt(n), sqrt(n+1)] bracket, n + 1 prime.
      report["question"] = "does a Ruzsa-type tuple reach the inf over |z_k|>=1 for nu <= n^2 (n+1 prime)?";
      for (std::int64_t p : {5, 7, 11}) {
        const std::int64_t n = p - 1;
        const auto ds = turan::ruzsa(p);
        const auto sp = turan::spectrum(turan::from_difference_set(ds), n * n);
        const double lo = std::sqrt(static_cast<double>(n)), hi = std::sqrt(static_cast<double>(n + 1));
        runs.push_back({{"p", p},
                        {"n", n},
                        {"range", n * n},
                        {"mapping", "z_k = e(r_k / (p^2 - p))"},
                        {"residues", ds.residues},
                        {"max_value", sp.max_value},
                        {"argmax_nu", sp.argmax_nu},
                        {"bracket", {lo, hi}},
                        {"within_bracket", sp.max_value >= lo - 1e-9 && sp.max_value <= hi + 1e-9},
                        {"attains_upper", std::abs(sp.max_value - hi) <= 1e-9}});
      }
      runs.push_back(explore_search(4, 16, turan::Constraint::OutsideDisk, a));
      break;
    }
    case 2:
      report["question"] = "are unit-circle minima for nu <= n^2-n rotations of the Singer tuple?";
      for (std::int64_t n : {3, 4}) runs.push_back(explore_search(n, n * n - n, turan::Constraint::UnitCircle, a));
      break;
    case 3:
      report["question"] = "does the sqrt(n-1) value for nu <= n^2-n survive relaxing |z_k|=1 to |z_k|>=1?";
      for (std::int64_t n : {3, 4}) {
        json run = explore_search(n, n * n - n, turan::Constraint::OutsideDisk, a);
        run["unit_circle_value"] = std::sqrt(static_cast<double>(n - 1));
        run["below_unit_circle_value"] = run["best_value"].get<double>() < std::sqrt(static_cast<double>(n - 1)) - 1e-6;
        runs.push_back(run);
      }
      break;
    case 4:
      report["question"] = "are |z_k|>=1 minima for nu <= n^2-2 rotations of the Bose tuple?";
      for (std::int64_t n : {3, 4}) runs.push_back(explore_search(n, n * n - 2, turan::Constraint::OutsideDisk, a));
      break;
    default:
      throw turan::Error(turan::ErrorCode::ParamViolation, "problem must be 1, 2, 3 or 4");
  }
  report["runs"] = runs;
  out.emit(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal power-sum tuples: constructions, spectra, equality certificates and searches"};
  app.require_subcommand(1);

  Output out_construct, out_spectrum, out_verify, out_bounds, out_search, out_explore;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build and certify a Singer, Bose or Ruzsa set");
  construct->add_option("--kind", ca.kind, "singer | bose | ruzsa")->required()->check(CLI::IsMember({"singer", "bose", "ruzsa"}));
  construct->add_option("--n", ca.n, "Tuple size (singer, bose)");
  construct->add_option("--p", ca.p, "Prime (ruzsa)");
  add_output(construct, out_construct, {"json", "human"});

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Evaluate |S_nu| for nu = 1..range");
  auto* kind_opt = spectrum->add_option("--kind", sa.kind, "singer | bose | ruzsa | turan")
                       ->check(CLI::IsMember({"singer", "bose", "ruzsa", "turan"}));
  auto* file_opt = spectrum->add_option("--file", sa.file, "JSON tuple file");
  kind_opt->excludes(file_opt);
  spectrum->add_option("--n", sa.n, "Tuple size");
  spectrum->add_option("--p", sa.p, "Prime (ruzsa)");
  spectrum->add_option("--range", sa.range, "Largest nu")->required();
  spectrum->add_flag("--check", sa.check, "Compare with the closed form (singer, bose)");
  spectrum->add_option("--threads", sa.threads, "Worker threads");
  add_output(spectrum, out_spectrum, {"json", "csv", "human"});

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Certify an inf-max equality for a construction");
  verify->add_option("--theorem", va.theorem, "1: Singer, unit circle, nu <= n^2-n; 2: Bose, |z|>=1, nu <= n^2-i")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  verify->add_option("--n", va.n, "Tuple size")->required();
  auto* i_opt = verify->add_option("--i", va.i, "Range offset for theorem 2 (default 2)");
  verify->add_flag("--all-i", va.all_i, "Every i in [2, n-1]")->excludes(i_opt);
  add_output(verify, out_verify, {"json", "human"});

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Lower bounds and reference values");
  bounds->add_option("--n", ba.n, "Tuple size")->required();
  bounds->add_option("--m", ba.m, "Cassels parameter");
  bounds->add_option("--c", ba.c, "NCS parameter");
  add_output(bounds, out_bounds, {"json", "human"});

  SearchArgs sea;
  auto* search = app.add_subcommand("search", "Multi-start minimax search");
  search->add_option("--n", sea.n, "Tuple size")->required();
  search->add_option("--range", sea.range, "Largest nu")->required();
  search->add_option("--constraint", sea.constraint, "unit | outside | first-fixed")
      ->check(CLI::IsMember({"unit", "outside", "first-fixed"}));
  search->add_option("--restarts", sea.restarts, "Number of restarts");
  search->add_option("--seed", sea.seed, "Random seed")->required();
  search->add_option("--cap-constant", sea.cap_constant, "C in the radial cap 1 + C/n");
  search->add_option("--threads", sea.threads, "Worker threads (0: all cores)");
  search->add_option("--start-from", sea.start_from, "Seed the first restart at a construction")
      ->check(CLI::IsMember({"turan", "singer", "bose", "ruzsa"}));
  add_output(search, out_search, {"json", "human"});

  ExploreArgs ea;
  auto* explore = app.add_subcommand("explore", "Numerical reports on the open extremality questions");
  explore->add_option("--problem", ea.problem, "1: Ruzsa bracket, 2: Singer minima, 3: |z|>=1 relaxation, 4: Bose minima")
      ->check(CLI::IsMember({1, 2, 3, 4}));
  explore->add_option("--restarts", ea.restarts, "Restarts per search");
  explore->add_option("--seed", ea.seed, "Random seed")->required();
  explore->add_option("--threads", ea.threads, "Worker threads (0: all cores)");
  add_output(explore, out_explore, {"json", "human"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(ca, out_construct);
    if (spectrum->parsed()) return cmd_spectrum(sa, out_spectrum);
    if (verify->parsed()) return cmd_verify(va, out_verify);
    if (bounds->parsed()) return cmd_bounds(ba, out_bounds);
    if (search->parsed()) return cmd_search(sea, out_search);
    if (explore->parsed()) return cmd_explore(ea, out_explore);
  } catch (const turan::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
