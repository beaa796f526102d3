#include "turan/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "turan/error.hpp"

namespace turan {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Parameter layout:
//   UnitCircle   x = phases[0..n)
//   OutsideDisk  x = phases[0..n), s[0..n) with r = 1 + s^2, 0 <= s <= sqrt(cap - 1)
//   FirstFixed   x = phases[1..n), radii[1..n) with 0 <= r <= cap; z_1 = 1
class Landscape {
 public:
  explicit Landscape(const SearchSpec& spec)
      : n_(spec.n), range_(spec.range), constraint_(spec.constraint), cap_(spec.cap()) {}

  Eigen::Index dim() const {
    switch (constraint_) {
      case Constraint::UnitCircle: return n_;
      case Constraint::OutsideDisk: return 2 * n_;
      case Constraint::FirstFixed: return 2 * (n_ - 1);
    }
    return 0;
  }

  void decode(const Eigen::VectorXd& x, Eigen::VectorXd& radii, Eigen::VectorXd& phases) const {
    radii.resize(n_);
    phases.resize(n_);
    switch (constraint_) {
      case Constraint::UnitCircle:
        radii.setOnes();
        phases = x;
        break;
      case Constraint::OutsideDisk:
        phases = x.head(n_);
        radii = 1.0 + x.tail(n_).array().square();
        break;
      case Constraint::FirstFixed:
        radii[0] = 1.0;
        phases[0] = 0.0;
        phases.tail(n_ - 1) = x.head(n_ - 1);
        radii.tail(n_ - 1) = x.tail(n_ - 1);
        break;
    }
  }

  void project(Eigen::VectorXd& x) const {
    if (constraint_ == Constraint::OutsideDisk) {
      x.tail(n_) = x.tail(n_).cwiseMax(0.0).cwiseMin(std::sqrt(cap_ - 1.0));
    } else if (constraint_ == Constraint::FirstFixed) {
      x.tail(n_ - 1) = x.tail(n_ - 1).cwiseMax(0.0).cwiseMin(cap_);
    }
  }

  /// Zeroes gradient components that point out of the box at an active bound.
  void mask_active(const Eigen::VectorXd& x, Eigen::VectorXd& grad) const {
    if (constraint_ == Constraint::UnitCircle) return;
    const Eigen::Index first = constraint_ == Constraint::OutsideDisk ? n_ : n_ - 1;
    const double hi = constraint_ == Constraint::OutsideDisk ? std::sqrt(cap_ - 1.0) : cap_;
    for (Eigen::Index i = first; i < x.size(); ++i) {
      if ((x[i] <= 0.0 && grad[i] > 0.0) || (x[i] >= hi && grad[i] < 0.0)) grad[i] = 0.0;
    }
  }

  PowerSumSystem tuple(const Eigen::VectorXd& x) const {
    Eigen::VectorXd r, phi;
    decode(x, r, phi);
    return PowerSumSystem::polar(std::move(r), std::move(phi));
  }

  double value(const Eigen::VectorXd& x) const {
    Eigen::VectorXd r, phi;
    decode(x, r, phi);
    return power_sum_moduli<double>(r, phi, range_).maxCoeff();
  }

  /// T log sum_nu exp(|S_nu|^2 / T) and its gradient in x.
  double surrogate(const Eigen::VectorXd& x, double temperature, Eigen::VectorXd& grad) const {
    Eigen::VectorXd r, phi;
    decode(x, r, phi);
    Eigen::MatrixXcd terms(n_, range_);  // r_k^nu e(nu phi_k)
    Eigen::VectorXd f(range_);
    Eigen::VectorXcd s(range_);
    for (Eigen::Index nu = 1; nu <= range_; ++nu) {
      for (Eigen::Index k = 0; k < n_; ++k) {
        const double mag = r[k] == 1.0 ? 1.0 : std::pow(r[k], static_cast<double>(nu));
        terms(k, nu - 1) = std::polar(mag, kTwoPi * wrap_phase(static_cast<double>(nu) * phi[k]));
      }
      s[nu - 1] = terms.col(nu - 1).sum();
      f[nu - 1] = std::norm(s[nu - 1]);
    }
    const double fmax = f.maxCoeff();
    const Eigen::VectorXd w_raw = ((f.array() - fmax) / temperature).exp();
    const double z = w_raw.sum();
    const Eigen::VectorXd w = w_raw / z;

    Eigen::VectorXd d_phi = Eigen::VectorXd::Zero(n_);
    Eigen::VectorXd d_r = Eigen::VectorXd::Zero(n_);
    for (Eigen::Index nu = 1; nu <= range_; ++nu) {
      const double wn = w[nu - 1];
      if (wn < 1e-300) continue;
      const std::complex<double> sc = std::conj(s[nu - 1]);
      const auto dnu = static_cast<double>(nu);
      for (Eigen::Index k = 0; k < n_; ++k) {
        const std::complex<double> t = terms(k, nu - 1);
        d_phi[k] += wn * (-2.0 * kTwoPi * dnu * std::imag(sc * t));
        // d/dr of r^nu e(nu phi) = nu r^(nu-1) e(nu phi)
        const double drn = nu == 1 ? 1.0 : dnu * std::pow(r[k], dnu - 1.0);
        const std::complex<double> dt = std::polar(drn, kTwoPi * wrap_phase(dnu * phi[k]));
        d_r[k] += wn * 2.0 * std::real(sc * dt);
      }
    }
    grad.resize(dim());
    switch (constraint_) {
      case Constraint::UnitCircle:
        grad = d_phi;
        break;
      case Constraint::OutsideDisk:
        grad.head(n_) = d_phi;
        grad.tail(n_) = d_r.cwiseProduct(2.0 * x.tail(n_));
        break;
      case Constraint::FirstFixed:
        grad.head(n_ - 1) = d_phi.tail(n_ - 1);
        grad.tail(n_ - 1) = d_r.tail(n_ - 1);
        break;
    }
    return fmax + temperature * std::log(z);
  }

  Eigen::VectorXd random_start(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::VectorXd x(dim());
    switch (constraint_) {
      case Constraint::UnitCircle:
        for (Eigen::Index k = 0; k < n_; ++k) x[k] = unit(rng);
        break;
      case Constraint::OutsideDisk:
        for (Eigen::Index k = 0; k < n_; ++k) x[k] = unit(rng);
        x.tail(n_).setZero();
        break;
      case Constraint::FirstFixed:
        for (Eigen::Index k = 0; k < n_ - 1; ++k) x[k] = unit(rng);
        x.tail(n_ - 1).setOnes();
        break;
    }
    return x;
  }

  Eigen::VectorXd encode(const PowerSumSystem& sys) const {
    if (sys.n() != n_) throw Error(ErrorCode::ParamViolation, "start tuple has the wrong size");
    const Polar p = sys.to_polar();
    Eigen::VectorXd x(dim());
    switch (constraint_) {
      case Constraint::UnitCircle:
        x = p.phases;
        break;
      case Constraint::OutsideDisk:
        x.head(n_) = p.phases;
        x.tail(n_) = (p.radii.array() - 1.0).cwiseMax(0.0).sqrt();
        break;
      case Constraint::FirstFixed:
        for (Eigen::Index k = 1; k < n_; ++k) {
          x[k - 1] = wrap_phase(p.phases[k] - p.phases[0]);
          x[n_ - 1 + k - 1] = p.radii[k];
        }
        break;
    }
    project(x);
    return x;
  }

 private:
  Eigen::Index n_;
  Eigen::Index range_;
  Constraint constraint_;
  double cap_;
};

// Projected gradient descent with Armijo backtracking at fixed temperature.
void descend(const Landscape& land, Eigen::VectorXd& x, double temperature, int iterations) {
  Eigen::VectorXd grad, trial_grad;
  double fx = land.surrogate(x, temperature, grad);
  land.mask_active(x, grad);
  double alpha = 1e-2;
  for (int it = 0; it < iterations; ++it) {
    if (grad.squaredNorm() < 1e-24) break;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      Eigen::VectorXd trial = x - alpha * grad;
      land.project(trial);
      const double ft = land.surrogate(trial, temperature, trial_grad);
      if (ft <= fx - 1e-4 * grad.dot(x - trial)) {
        if ((trial - x).squaredNorm() == 0.0) break;
        const double decrease = fx - ft;
        x = std::move(trial);
        fx = ft;
        grad = trial_grad;
        land.mask_active(x, grad);
        accepted = decrease > 1e-15 * std::max(1.0, std::abs(fx));
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;
    alpha *= 2.0;
  }
}

// One sweep of +-step moves per coordinate around x, keeping every strict improvement.
bool explore(const Landscape& land, double tol, double step, Eigen::VectorXd& x, double& value, long& evals) {
  bool improved = false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (double dir : {1.0, -1.0}) {
      Eigen::VectorXd y = x;
      y[i] += dir * step;
      land.project(y);
      const double vy = land.value(y);
      ++evals;
      if (vy < value - tol) {
        x = std::move(y);
        value = vy;
        improved = true;
        break;
      }
    }
  }
  return improved;
}

// Hooke-Jeeves: coordinate exploration, then repeated pattern moves along the last displacement.
void pattern_search(const Landscape& land, const SearchSpec& spec, Eigen::VectorXd& x, double& value) {
  const double tol = spec.tolerance;
  double step = spec.polish.step_initial;
  long evals = 0;
  while (step >= spec.polish.step_min && evals < spec.polish.max_evaluations) {
    Eigen::VectorXd xe = x;
    double ve = value;
    if (!explore(land, tol, step, xe, ve, evals)) {
      step *= spec.polish.step_shrink;
      continue;
    }
    for (;;) {
      Eigen::VectorXd xp = xe + (xe - x);
      land.project(xp);
      x = xe;
      value = ve;
      double vp = land.value(xp);
      ++evals;
      explore(land, tol, step, xp, vp, evals);
      if (!(vp < value - tol) || evals >= spec.polish.max_evaluations) {
        if (vp < value - tol) {
          x = std::move(xp);
          value = vp;
        }
        break;
      }
      xe = std::move(xp);
      ve = vp;
    }
  }
}

struct RestartState {
  double value = 0.0;
  Eigen::VectorXd x;
};

RestartState run_restart(const Landscape& land, const SearchSpec& spec, int index) {
  Eigen::VectorXd x;
  const bool seeded = index < static_cast<int>(spec.starts.size());
  if (seeded) {
    x = land.encode(spec.starts[index]);
  } else {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    x = land.random_start(rng);
  }
  RestartState best{land.value(x), x};
  if (land.dim() == 0) return best;
  for (double t = spec.schedule.t_initial; t >= spec.schedule.t_min * (1.0 - 1e-12); t *= 0.5) {
    descend(land, x, t, spec.schedule.stage_iterations);
    const double v = land.value(x);
    if (v < best.value - spec.tolerance) best = {v, x};
  }
  pattern_search(land, spec, best.x, best.value);
  return best;
}

}  // namespace

double SearchSpec::cap() const { return radial_cap(n, cap_constant); }

void SearchSpec::validate() const {
  if (n < 1) throw Error(ErrorCode::ParamViolation, "ParamViolation: n must be >= 1");
  if (range < 1) throw Error(ErrorCode::ParamViolation, "ParamViolation: range must be >= 1");
  if (restarts < 1) throw Error(ErrorCode::ParamViolation, "ParamViolation: restarts must be >= 1");
  if (!(cap_constant > 0.0)) throw Error(ErrorCode::ParamViolation, "ParamViolation: cap constant must be > 0");
  if (!(schedule.t_initial > 0.0) || !(schedule.t_min > 0.0) || schedule.t_min > schedule.t_initial || schedule.stage_iterations < 0) {
    throw Error(ErrorCode::ParamViolation, "ParamViolation: invalid smoothing schedule");
  }
  if (!(polish.step_initial > 0.0) || !(polish.step_min > 0.0) || !(polish.step_shrink > 0.0 && polish.step_shrink < 1.0) ||
      polish.max_evaluations < 0) {
    throw Error(ErrorCode::ParamViolation, "ParamViolation: invalid polish settings");
  }
  for (const auto& s : starts) {
    if (s.n() != n) throw Error(ErrorCode::ParamViolation, "ParamViolation: start tuple size differs from n");
  }
}

double objective(const PowerSumSystem& sys, Eigen::Index range) { return spectrum(sys, range).max_value; }

SearchResult minimize(const SearchSpec& spec) {
  spec.validate();
  const Landscape land(spec);
  std::vector<RestartState> states(spec.restarts);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < spec.restarts; i = next++) states[i] = run_restart(land, spec, i);
  };
  unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.restarts));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchResult result;
  result.spec = spec;
  for (int i = 0; i < spec.restarts; ++i) {
    result.per_restart.push_back({i, states[i].value, i < static_cast<int>(spec.starts.size())});
    if (i == 0 || states[i].value < result.best_value) {
      result.best_value = states[i].value;
      result.best_restart = i;
    }
  }
  result.best_tuple = land.tuple(states[result.best_restart].x);
  result.canonical = canonicalize(result.best_tuple);
  const LowerBound lb = applicable_lower_bound(spec.n, spec.range, spec.constraint);
  result.bound_check = {lb.source, lb.value, result.best_value >= lb.value.value() - kBoundSlack};
  return result;
}

namespace {

constexpr double kCanonicalTie = 1e-9;

bool row_less(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  if (std::abs(a[0] - b[0]) > 1e-12) return a[0] < b[0];
  return a[1] < b[1];
}

bool matrix_less(const Eigen::MatrixX2d& a, const Eigen::MatrixX2d& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      if (std::abs(a(i, j) - b(i, j)) > kCanonicalTie) return a(i, j) < b(i, j);
    }
  }
  return false;
}

}  // namespace

Eigen::MatrixX2d canonicalize(const PowerSumSystem& sys) {
  const Polar p = sys.to_polar();
  const Eigen::Index n = p.radii.size();
  Eigen::MatrixX2d best;
  std::vector<Eigen::Vector2d> rows(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      double phase = k == j ? 0.0 : wrap_phase(p.phases[k] - p.phases[j]);
      if (phase > 1.0 - 1e-12) phase = 0.0;
      rows[k] = {p.radii[k], phase};
    }
    std::sort(rows.begin(), rows.end(), row_less);
    Eigen::MatrixX2d cand(n, 2);
    for (Eigen::Index k = 0; k < n; ++k) cand.row(k) = rows[k].transpose();
    if (j == 0 || matrix_less(cand, best)) best = std::move(cand);
  }
  return best;
}

double canonical_distance(const Eigen::MatrixX2d& a, const Eigen::MatrixX2d& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::ParamViolation, "canonical forms of different sizes");
  double d = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    d = std::max(d, std::abs(a(i, 0) - b(i, 0)));
    const double dp = std::abs(a(i, 1) - b(i, 1));
    d = std::max(d, std::min(dp, 1.0 - dp));
  }
  return d;
}

const char* to_string(MatchVerdict v) { return v == MatchVerdict::Matched ? "Matched" : "Distinct"; }

MatchReport compare_to_construction(const SearchResult& result, const PowerSumSystem& construction,
                                    std::string construction_name) {
  if (construction.n() != result.spec.n) throw Error(ErrorCode::ParamViolation, "construction size differs from search n");
  MatchReport report;
  report.construction_name = std::move(construction_name);
  report.distance = canonical_distance(result.canonical, canonicalize(construction));
  report.construction_value = objective(construction, result.spec.range);
  report.objective_gap = result.best_value - report.construction_value;
  report.verdict = report.distance <= kMatchTolerance ? MatchVerdict::Matched : MatchVerdict::Distinct;
  return report;
}

}  // namespace turan
