#include "turan/bounds.hpp"

#include <cmath>

#include "turan/error.hpp"
#include "turan/numtheory.hpp"
#include "turan/power_sums.hpp"

namespace turan {

const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::UnitCircle: return "unit";
    case Constraint::OutsideDisk: return "outside";
    case Constraint::FirstFixed: return "first-fixed";
  }
  return "unknown";
}

std::optional<Constraint> parse_constraint(const std::string& s) {
  if (s == "unit") return Constraint::UnitCircle;
  if (s == "outside") return Constraint::OutsideDisk;
  if (s == "first-fixed") return Constraint::FirstFixed;
  return std::nullopt;
}

const char* to_string(BoundName b) { return b == BoundName::Cassels ? "Cassels" : "NCS"; }

const char* to_string(EqualityVerdict v) { return v == EqualityVerdict::Equal ? "Equal" : "Gap"; }

BoundReport cassels_bound(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1 || m > n) {
    throw Error(ErrorCode::ParamViolation, "ParamViolation: Cassels bound needs 1 <= m <= n (n=" + std::to_string(n) +
                                               ", m=" + std::to_string(m) + ")");
  }
  return BoundReport{BoundName::Cassels, n, m, 2 * n * m - m * (m + 1) + 1, SqrtRational(m), Constraint::OutsideDisk};
}

BoundReport ncs_bound(std::int64_t n, std::int64_t c) {
  if (n < 1 || c < 1) {
    throw Error(ErrorCode::ParamViolation, "ParamViolation: NCS bound needs n >= 1 and c >= 1");
  }
  return BoundReport{BoundName::NCS, n, c, c * n, SqrtRational(c * n - n + 1, c), Constraint::UnitCircle};
}

LowerBound applicable_lower_bound(std::int64_t n, std::int64_t range, Constraint constraint) {
  LowerBound best{"none", SqrtRational(0)};
  auto consider = [&](const BoundReport& b) {
    if (b.range_limit <= range && best.value < b.value) {
      best = {std::string(to_string(b.name)) + "(" + std::to_string(b.n) + "," + std::to_string(b.parameter) + ")", b.value};
    }
  };
  switch (constraint) {
    case Constraint::UnitCircle:
      for (std::int64_t c = 1; c * n <= range; ++c) consider(ncs_bound(n, c));
      [[fallthrough]];
    case Constraint::OutsideDisk:
      for (std::int64_t m = 1; m <= n; ++m) consider(cassels_bound(n, m));
      break;
    case Constraint::FirstFixed:
      if (range >= 2 * n - 1) best = {"first-fixed(2n-1)", SqrtRational(1)};
      break;
  }
  return best;
}

namespace {

void settle(EqualityCertificate& cert) {
  const double bound = cert.lower_bound.value.value();
  cert.gap = cert.construction_max - bound;
  const bool exact_match = cert.lower_bound.value == cert.stated_value;
  const bool numeric_match = std::abs(cert.construction_max - cert.stated_value.value()) <= kEqualityTolerance;
  cert.verdict = exact_match && numeric_match ? EqualityVerdict::Equal : EqualityVerdict::Gap;
}

}  // namespace

EqualityCertificate verify_theorem1(std::int64_t n) {
  if (n < 3 || !nt::as_prime_power(static_cast<std::uint64_t>(n - 1))) {
    throw Error(ErrorCode::NotPrimePower, "NotPrimePower(" + std::to_string(n - 1) + "): n-1 must be a prime power");
  }
  EqualityCertificate cert;
  cert.theorem = 1;
  cert.n = n;
  cert.range = n * n - n;
  cert.construction = singer(n);
  cert.construction_verdict = certify(cert.construction).verdict;
  const Spectrum sp = spectrum(from_difference_set(cert.construction), cert.range);
  cert.construction_max = sp.max_value;
  cert.construction_argmax = sp.argmax_nu;
  cert.lower_bound = ncs_bound(n, n - 1);
  cert.stated_value = SqrtRational(n - 1);
  settle(cert);
  return cert;
}

EqualityCertificate verify_theorem2(std::int64_t n, std::int64_t i) {
  if (n < 2 || !nt::as_prime_power(static_cast<std::uint64_t>(n))) {
    throw Error(ErrorCode::NotPrimePower, "NotPrimePower(" + std::to_string(n) + "): n must be a prime power");
  }
  if (n < 3) throw Error(ErrorCode::ParamViolation, "ParamViolation: n must be >= 3");
  if (i < 2 || i > n - 1) {
    throw Error(ErrorCode::ParamViolation, "ParamViolation: i must satisfy 2 <= i <= n-1 (i=" + std::to_string(i) + ")");
  }
  EqualityCertificate cert;
  cert.theorem = 2;
  cert.n = n;
  cert.i = i;
  cert.range = n * n - i;
  cert.construction = bose(n);
  cert.construction_verdict = certify(cert.construction).verdict;
  const Spectrum sp = spectrum(from_difference_set(cert.construction), cert.range);
  cert.construction_max = sp.max_value;
  cert.construction_argmax = sp.argmax_nu;
  cert.lower_bound = cassels_bound(n, n);
  cert.stated_value = SqrtRational(n);
  settle(cert);
  return cert;
}

std::vector<ReferenceRow> reference_values() {
  return {
      {"turan", "|z_k|>=1", "n", "n >= 1", 0, SqrtRational(1), SqrtRational(1), true, "z_k = e(k/(n+1))"},
      {"cassels_first_fixed", "z_1=1", "2n-1", "n >= 1", 0, SqrtRational(1), SqrtRational(1), true, "z = (1, 0, ..., 0)"},
      {"montgomery_bracket", "|z_k|>=1", "n^2", "n+1 prime", 0, SqrtRational(0), SqrtRational(0), true, ""},
      {"singer_unit_circle", "|z_k|=1", "n^2-n", "n-1 prime power", 0, SqrtRational(0), SqrtRational(0), true,
       "z_k = e(a_k/(n^2-n+1)), Singer set"},
      {"singer_outside_disk", "|z_k|>=1", "n^2-n", "n-1 prime power", 0, SqrtRational(0), SqrtRational(0), true,
       "z_k = e(a_k/(n^2-n+1)), Singer set"},
      {"bose_outside_disk", "|z_k|>=1", "n^2-i, 2<=i<=n-1", "n >= 3 prime power", 0, SqrtRational(0), SqrtRational(0), true,
       "z_k = e(b_k/(n^2-1)), Bose set"},
  };
}

std::vector<ReferenceRow> reference_values(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::ParamViolation, "ParamViolation: n must be >= 1");
  auto rows = reference_values();
  const auto un = static_cast<std::uint64_t>(n);
  const bool n1_pp = n >= 3 && nt::as_prime_power(un - 1).has_value();
  for (auto& row : rows) {
    if (row.name == "turan") {
      row.range = n;
    } else if (row.name == "cassels_first_fixed") {
      row.range = 2 * n - 1;
    } else if (row.name == "montgomery_bracket") {
      row.range = n * n;
      row.lower = SqrtRational(n);
      row.upper = SqrtRational(n + 1);
      row.applicable = nt::is_prime(un + 1);
    } else if (row.name == "singer_unit_circle") {
      row.range = n * n - n;
      row.lower = row.upper = SqrtRational(n - 1);
      row.applicable = n1_pp;
    } else if (row.name == "singer_outside_disk") {
      row.range = n * n - n;
      row.lower = SqrtRational(std::max<std::int64_t>(n - 2, 0));
      row.upper = SqrtRational(n - 1);
      row.applicable = n1_pp;
    } else if (row.name == "bose_outside_disk") {
      row.range = n * n - 2;
      row.lower = row.upper = SqrtRational(n);
      row.applicable = n >= 3 && nt::as_prime_power(un).has_value();
    }
  }
  return rows;
}

double radial_cap(std::int64_t n, double c) {
  if (n < 1 || !(c > 0.0)) throw Error(ErrorCode::ParamViolation, "radial cap needs n >= 1 and C > 0");
  return 1.0 + c / static_cast<double>(n);
}

}  // namespace turan
