#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "turan/bounds.hpp"
#include "turan/power_sums.hpp"

namespace turan {

/// Halving temperature schedule for the log-sum-exp surrogate of max |S_nu|^2.
struct SmoothingSchedule {
  double t_initial = 1.0;
  double t_min = 1e-4;
  int stage_iterations = 300;
};

/// Coordinate pattern search on the true max.
struct PolishSettings {
  double step_initial = 1e-2;
  double step_shrink = 0.5;
  double step_min = 1e-10;
  long max_evaluations = 20000;
};

struct SearchSpec {
  std::int64_t n = 1;
  std::int64_t range = 1;
  Constraint constraint = Constraint::UnitCircle;
  int restarts = 1;
  std::uint64_t seed = 0;
  double cap_constant = 1.0;  // radial cap 1 + C/n
  SmoothingSchedule schedule;
  PolishSettings polish;
  double tolerance = 1e-14;   // minimal accepted decrease of the true max
  unsigned threads = 0;       // 0: hardware concurrency
  /// Starting tuples used for the first restarts instead of random draws (projected onto the constraint).
  std::vector<PowerSumSystem> starts;

  double cap() const;
  /// Throws ParamViolation on an inconsistent spec.
  void validate() const;
};

struct RestartOutcome {
  int index = 0;
  double value = 0.0;
  bool seeded = false;
};

struct BoundCheck {
  std::string source;
  SqrtRational bound;
  bool passed = true;
};

inline constexpr double kBoundSlack = 1e-6;

struct SearchResult {
  SearchSpec spec;
  double best_value = 0.0;
  int best_restart = 0;
  PowerSumSystem best_tuple;
  Eigen::MatrixX2d canonical;
  std::vector<RestartOutcome> per_restart;
  BoundCheck bound_check;
};

/// max_{1<=nu<=range} |S_nu|.
double objective(const PowerSumSystem& sys, Eigen::Index range);

/// Multi-start minimization of max |S_nu|. Each restart draws from its own stream derived from
/// (seed, restart index), so the per-restart table does not depend on the thread count.
SearchResult minimize(const SearchSpec& spec);

/// Orbit representative under rotation and permutation: rows (radius, phase) sorted
/// lexicographically, minimized over the n rotations that put one point at phase 0.
Eigen::MatrixX2d canonicalize(const PowerSumSystem& sys);

/// Componentwise max distance of two canonical forms; phases compared on the circle.
double canonical_distance(const Eigen::MatrixX2d& a, const Eigen::MatrixX2d& b);

enum class MatchVerdict { Matched, Distinct };

const char* to_string(MatchVerdict v);

struct MatchReport {
  std::string construction_name;
  double distance = 0.0;
  double construction_value = 0.0;
  double objective_gap = 0.0;  // best_value - construction value over the same range
  MatchVerdict verdict = MatchVerdict::Distinct;
};

inline constexpr double kMatchTolerance = 1e-3;

MatchReport compare_to_construction(const SearchResult& result, const PowerSumSystem& construction,
                                    std::string construction_name = "");

}  // namespace turan
