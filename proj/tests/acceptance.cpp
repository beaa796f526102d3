// Acceptance suite: one line per criterion, nonzero exit if any blocking criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "turan/bounds.hpp"
#include "turan/difference_sets.hpp"
#include "turan/numtheory.hpp"
#include "turan/optimizer.hpp"
#include "turan/power_sums.hpp"

using nlohmann::json;
using namespace turan;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Cli {
  int code = -1;
  json out;
};

Cli cli(const std::string& args) {
  const std::string cmd = std::string(TURAN_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string text;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {};
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
  const int status = pclose(pipe);
  Cli r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = json::parse(text, nullptr, false);
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

void fail(Outcome& o, const std::string& why) {
  if (o.passed) o.detail = why;
  o.passed = false;
}

bool is_sqrt_of(const json& exact, std::int64_t k) {
  return exact["square_num"] == k && exact["square_den"] == 1;
}

// ------------------------------------------------------------------------

Outcome theorem1() {
  Outcome o;
  double slowest = 0.0;
  for (std::int64_t n : {3, 4, 5, 6, 8, 10}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Cli r = cli("verify --theorem 1 --n " + std::to_string(n));
    const double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    if (r.code != 0 || r.out.is_discarded()) {
      fail(o, tag + "exit " + std::to_string(r.code));
      continue;
    }
    const double target = std::sqrt(static_cast<double>(n - 1));
    if (r.out["verdict"] != "Equal") fail(o, tag + "verdict " + r.out["verdict"].dump());
    if (std::abs(r.out["construction_max"].get<double>() - target) > 1e-9) fail(o, tag + "construction max off");
    if (r.out["lower_bound"]["name"] != "NCS" || !is_sqrt_of(r.out["lower_bound"]["value"], n - 1)) {
      fail(o, tag + "NCS bound is not exactly sqrt(n-1)");
    }
    if (dt >= 1.0) fail(o, tag + "took " + fmt(dt) + " s");
  }
  if (o.passed) o.detail = "n in {3,4,5,6,8,10} Equal at sqrt(n-1), slowest " + fmt(slowest) + " s";
  return o;
}

Outcome theorem2() {
  Outcome o;
  int certificates = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::int64_t n : {3, 4, 5, 7, 8, 9}) {
    const Cli r = cli("verify --theorem 2 --all-i --n " + std::to_string(n));
    const std::string tag = "n=" + std::to_string(n) + ": ";
    if (r.code != 0 || r.out.is_discarded() || !r.out.is_array()) {
      fail(o, tag + "exit " + std::to_string(r.code));
      continue;
    }
    if (static_cast<std::int64_t>(r.out.size()) != n - 2) fail(o, tag + "expected one certificate per i");
    for (std::size_t k = 0; k < r.out.size(); ++k) {
      const json& c = r.out[k];
      ++certificates;
      const std::string where = tag + "i=" + c["i"].dump() + ": ";
      if (c["i"] != static_cast<std::int64_t>(k) + 2) fail(o, where + "i out of order");
      if (c["verdict"] != "Equal") fail(o, where + "verdict " + c["verdict"].dump());
      if (std::abs(c["construction_max"].get<double>() - std::sqrt(static_cast<double>(n))) > 1e-9) {
        fail(o, where + "construction max off");
      }
      if (!is_sqrt_of(c["stated_value"], n)) fail(o, where + "stated value not sqrt(n)");
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 2.0) fail(o, "took " + fmt(dt) + " s");
  if (o.passed) o.detail = std::to_string(certificates) + " certificates Equal at sqrt(n), " + fmt(dt) + " s";
  return o;
}

// Plain O(n^2) difference count, independent of certify().
std::vector<int> difference_counts(const DifferenceSet& ds) {
  std::vector<int> counts(static_cast<std::size_t>(ds.modulus), 0);
  for (auto a : ds.residues)
    for (auto b : ds.residues)
      if (a != b) ++counts[static_cast<std::size_t>(((a - b) % ds.modulus + ds.modulus) % ds.modulus)];
  return counts;
}

Outcome certificates() {
  Outcome o;
  int singers = 0, boses = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::int64_t n = 2; n <= 32; ++n) {
    if (n >= 3 && nt::as_prime_power(n - 1)) {
      const DifferenceSet ds = singer(n);
      const auto cert = certify(ds);
      const auto counts = difference_counts(ds);
      const bool perfect = std::all_of(counts.begin() + 1, counts.end(), [](int c) { return c == 1; });
      if (cert.verdict != Verdict::Perfect || !perfect) fail(o, "singer(" + std::to_string(n) + ") " + cert.describe());
      ++singers;
    }
    if (nt::as_prime_power(n)) {
      const DifferenceSet ds = bose(n);
      const auto cert = certify(ds);
      const auto counts = difference_counts(ds);
      bool ok = true;
      for (std::int64_t d = 1; d < ds.modulus; ++d) {
        const int want = d % (n + 1) == 0 ? 0 : 1;
        ok = ok && counts[static_cast<std::size_t>(d)] == want;
      }
      if (cert.verdict != Verdict::SidonAvoiding || cert.divisor != n + 1 || !ok) {
        fail(o, "bose(" + std::to_string(n) + ") " + cert.describe());
      }
      ++boses;
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 10.0) fail(o, "took " + fmt(dt) + " s");
  if (o.passed) {
    o.detail = std::to_string(singers) + " Singer sets Perfect, " + std::to_string(boses) +
               " Bose sets SidonAvoiding(n+1), " + fmt(dt) + " s";
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  double worst = 0.0;
  for (std::int64_t n = 3; n <= 10; ++n) {
    if (!nt::as_prime_power(n - 1)) continue;
    const Eigen::Index range = n * n - n + 1;
    const PowerSumSystem sys = from_difference_set(singer(n));
    const auto check = check_spectrum(sys, SetKind::Singer, n, range);
    worst = std::max(worst, check.worst_deviation);
    if (!check.passed || check.worst_deviation >= 1e-9 || check.checked != range) {
      fail(o, "singer n=" + std::to_string(n) + " deviation " + fmt(check.worst_deviation));
    }
    if (std::abs(std::abs(power_sum(sys, range)) - static_cast<double>(n)) >= 1e-9) {
      fail(o, "singer n=" + std::to_string(n) + " divisible branch");
    }
  }
  for (std::int64_t n : {3, 4, 5, 7, 8, 9}) {
    const Eigen::Index range = n * n - 2;
    const auto check = check_spectrum(from_difference_set(bose(n)), SetKind::Bose, n, range);
    worst = std::max(worst, check.worst_deviation);
    if (!check.passed || check.worst_deviation >= 1e-9 || check.checked != range) {
      fail(o, "bose n=" + std::to_string(n) + " deviation " + fmt(check.worst_deviation));
    }
  }
  if (o.passed) o.detail = "Singer n<=10 and Bose n<=9 within " + fmt(worst) + " of the closed forms";
  return o;
}

Outcome turan_reference() {
  Outcome o;
  double worst = 0.0;
  for (Eigen::Index n = 1; n <= 50; ++n) {
    const Spectrum sp = spectrum(turan_tuple(n), n);
    worst = std::max(worst, (sp.values.array() - 1.0).abs().maxCoeff());
  }
  if (worst > 1e-12) fail(o, "worst deviation " + fmt(worst));
  if (o.passed) o.detail = "n<=50, worst |value-1| " + fmt(worst);
  return o;
}

PowerSumSystem random_tuple(std::mt19937_64& rng, Eigen::Index n, bool unimodular) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd r(n), phi(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    r[k] = unimodular ? 1.0 : 1.0 + u(rng) / static_cast<double>(n);
    phi[k] = u(rng);
  }
  return PowerSumSystem::polar(r, phi);
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(20240917);
  double parseval = 0.0, drift = 0.0, orbit = 0.0;

  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(2, 300)(rng);
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, std::min<std::int64_t>(m, 25))(rng);
    std::vector<std::int64_t> pool(static_cast<std::size_t>(m));
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(n));
    const PowerSumSystem sys = PowerSumSystem::rational(pool, m);
    double total = 0.0;
    for (std::int64_t nu = 0; nu < m; ++nu) total += std::norm(power_sum(sys, nu));
    parseval = std::max(parseval, std::abs(total - static_cast<double>(n * m)));
  }
  if (parseval > 1e-6) fail(o, "Parseval off by " + fmt(parseval));

  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = std::uniform_int_distribution<Eigen::Index>(1, 8)(rng);
    const Eigen::Index range = std::uniform_int_distribution<Eigen::Index>(n, n * n + 1)(rng);
    const PowerSumSystem sys = random_tuple(rng, n, trial % 2 == 0);
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const double phase = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const PowerSumSystem moved = permuted(rotated(sys, phase), perm);
    // Off the circle |S_nu| grows like r^nu, so the drift is measured against max(1, value).
    const double value = objective(sys, range);
    drift = std::max(drift, std::abs(value - objective(moved, range)) / std::max(1.0, value));
    orbit = std::max(orbit, canonical_distance(canonicalize(sys), canonicalize(moved)));
  }
  if (drift > 1e-12) fail(o, "objective drift " + fmt(drift));
  if (orbit > 1e-9) fail(o, "canonical orbit spread " + fmt(orbit));

  if (o.passed) {
    o.detail = "Parseval " + fmt(parseval) + ", scaled objective drift " + fmt(drift) + ", orbit spread " + fmt(orbit);
  }
  return o;
}

Outcome optimizer_sanity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double lowest_margin = 1e300;

  auto run = [&](std::int64_t n, std::int64_t range, Constraint c, int restarts, std::uint64_t seed) {
    SearchSpec spec;
    spec.n = n;
    spec.range = range;
    spec.constraint = c;
    spec.restarts = restarts;
    spec.seed = seed;
    const SearchResult res = minimize(spec);
    const double bound = applicable_lower_bound(n, range, c).value.value();
    for (const auto& r : res.per_restart) {
      lowest_margin = std::min(lowest_margin, r.value - bound);
      if (r.value < bound - kBoundSlack) {
        fail(o, "restart " + std::to_string(r.index) + " of (" + std::to_string(n) + "," + std::to_string(range) +
                    ") undercuts its bound");
      }
    }
    if (!res.bound_check.passed) fail(o, "bound_check failed");
    return res.best_value;
  };

  const double v2 = run(2, 2, Constraint::UnitCircle, 50, 42);
  if (std::abs(v2 - 1.0) > 1e-4) fail(o, "n=2 best " + fmt(v2, 10));
  const double v3 = run(3, 6, Constraint::UnitCircle, 200, 42);
  if (v3 < std::sqrt(2.0) - 1e-6 || v3 > std::sqrt(2.0) + 1e-3) fail(o, "n=3 best " + fmt(v3, 10));
  // Other constraints, checked only against their lower bounds.
  run(3, 7, Constraint::OutsideDisk, 30, 5);
  run(4, 9, Constraint::FirstFixed, 30, 5);
  run(4, 12, Constraint::UnitCircle, 30, 5);

  const double dt = seconds_since(t0);
  if (dt >= 60.0) fail(o, "took " + fmt(dt) + " s");
  if (o.passed) {
    o.detail = "n=2: " + fmt(v2, 10) + ", n=3: " + fmt(v3, 10) + ", min margin over bounds " + fmt(lowest_margin) +
               ", " + fmt(dt) + " s";
  }
  return o;
}

// Non-blocking: passes as long as the CLI produces the reports.
Outcome exploratory(std::vector<std::string>& notes) {
  Outcome o;
  const Cli p3 = cli("explore --problem 3 --seed 2024 --restarts 100");
  if (p3.code != 0 || p3.out.is_discarded()) {
    fail(o, "explore --problem 3 exit " + std::to_string(p3.code));
  } else {
    for (const auto& run : p3.out["runs"]) {
      std::string line = "outside disk n=" + run["n"].dump() + " range=" + run["range"].dump() +
                         ": best " + fmt(run["best_value"].get<double>(), 12) + " vs sqrt(n-1) " +
                         fmt(run["unit_circle_value"].get<double>(), 12);
      line += run["below_unit_circle_value"].get<bool>() ? " (below)" : " (not below)";
      notes.push_back(line);
    }
  }
  const Cli p1 = cli("explore --problem 1 --seed 2024 --restarts 100");
  if (p1.code != 0 || p1.out.is_discarded()) {
    fail(o, "explore --problem 1 exit " + std::to_string(p1.code));
  } else {
    for (const auto& run : p1.out["runs"]) {
      if (run.contains("p")) {
        notes.push_back("ruzsa p=" + run["p"].dump() + " over nu<=" + run["range"].dump() + ": max " +
                        fmt(run["max_value"].get<double>(), 12) + " in [" + fmt(run["bracket"][0].get<double>(), 12) +
                        ", " + fmt(run["bracket"][1].get<double>(), 12) + "]" +
                        (run["attains_upper"].get<bool>() ? " at the upper end" : ""));
      } else {
        notes.push_back("outside disk search n=" + run["n"].dump() + " range=" + run["range"].dump() + ": best " +
                        fmt(run["best_value"].get<double>(), 12));
      }
    }
  }
  if (o.passed) o.detail = "reports emitted (not asserted)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<std::string> notes;
  const std::vector<Criterion> criteria = {
      {1, "theorem 1 equality", theorem1},
      {2, "theorem 2 equality", theorem2},
      {3, "exact difference certificates", certificates},
      {4, "spectrum closed forms", closed_forms},
      {5, "turan reference", turan_reference},
      {6, "property suite", properties},
      {7, "optimizer sanity", optimizer_sanity},
      {8, "exploratory reports", [&] { return exploratory(notes); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.detail << '\n';
  }
  for (const auto& line : notes) std::cout << "      " << line << '\n';
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
