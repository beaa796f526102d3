#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/difference_sets.hpp"
#include "turan/exact.hpp"

namespace turan {

/// Admissible tuples: |z_k| = 1, |z_k| >= 1, or z_1 = 1 with the rest free.
enum class Constraint { UnitCircle, OutsideDisk, FirstFixed };

const char* to_string(Constraint c);
std::optional<Constraint> parse_constraint(const std::string& s);

enum class BoundName { Cassels, NCS };

const char* to_string(BoundName b);

/// max_{1<=nu<=range_limit} |S_nu| >= value for every admissible tuple.
struct BoundReport {
  BoundName name = BoundName::Cassels;
  std::int64_t n = 0;
  std::int64_t parameter = 0;  // m for Cassels, c for NCS
  std::int64_t range_limit = 0;
  SqrtRational value;
  Constraint applies_to = Constraint::OutsideDisk;
};

/// range 2nm - m(m+1) + 1, value sqrt(m), valid for |z_k| >= 1; requires 1 <= m <= n.
BoundReport cassels_bound(std::int64_t n, std::int64_t m);

/// range c*n, value sqrt((cn - n + 1)/c), valid for |z_k| = 1; requires c >= 1.
BoundReport ncs_bound(std::int64_t n, std::int64_t c);

/// Strongest bound among the two families whose range fits inside 1..range.
/// FirstFixed uses the value 1 once range >= 2n-1; otherwise nothing is known and the value is 0.
struct LowerBound {
  std::string source;
  SqrtRational value;
};
LowerBound applicable_lower_bound(std::int64_t n, std::int64_t range, Constraint constraint);

enum class EqualityVerdict { Equal, Gap };

const char* to_string(EqualityVerdict v);

struct EqualityCertificate {
  int theorem = 1;
  std::int64_t n = 0;
  std::int64_t i = 0;  // theorem 2 only
  std::int64_t range = 0;
  BoundReport lower_bound;
  SqrtRational stated_value;
  double construction_max = 0.0;
  std::int64_t construction_argmax = 0;
  DifferenceSet construction;
  Verdict construction_verdict = Verdict::Failed;
  EqualityVerdict verdict = EqualityVerdict::Gap;
  double gap = 0.0;  // construction_max - lower bound
};

inline constexpr double kEqualityTolerance = 1e-9;

/// Singer tuple over nu = 1..n^2-n against ncs_bound(n, n-1); n-1 must be a prime power.
EqualityCertificate verify_theorem1(std::int64_t n);

/// Bose tuple over nu = 1..n^2-i against cassels_bound(n, n); n >= 3 a prime power, 2 <= i <= n-1.
EqualityCertificate verify_theorem2(std::int64_t n, std::int64_t i);

/// Known values and brackets of inf-max problems, with applicability.
struct ReferenceRow {
  std::string name;
  std::string constraint;
  std::string range_formula;
  std::string condition;
  std::int64_t range = 0;  // instantiated for a given n, 0 in the static table
  SqrtRational lower;
  SqrtRational upper;
  bool applicable = true;
  std::string witness;
};

std::vector<ReferenceRow> reference_values();
std::vector<ReferenceRow> reference_values(std::int64_t n);

/// Radius cap 1 + C/n for the outside-disk search. C is not known explicitly; 1.0 by default.
double radial_cap(std::int64_t n, double c = 1.0);

}  // namespace turan
