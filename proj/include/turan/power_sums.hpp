#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "turan/difference_sets.hpp"
#include "turan/exact.hpp"

namespace turan {

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// z_k = e(a_k / m), e(x) = exp(2 pi i x); exponents reduced into [0, m).
struct RationalPhases {
  std::vector<std::int64_t> exponents;
  std::int64_t modulus = 1;
};

/// z_k = r_k e(phi_k), phases in [0, 1).
struct Polar {
  Eigen::VectorXd radii;
  Eigen::VectorXd phases;
};

class PowerSumSystem {
 public:
  PowerSumSystem() = default;

  static PowerSumSystem rational(std::vector<std::int64_t> exponents, std::int64_t modulus);
  static PowerSumSystem polar(Eigen::VectorXd radii, Eigen::VectorXd phases);
  static PowerSumSystem unimodular(const Eigen::VectorXd& phases);
  static PowerSumSystem from_points(const Eigen::VectorXcd& z);

  Eigen::Index n() const;
  bool is_rational() const { return std::holds_alternative<RationalPhases>(form_); }
  const RationalPhases& rational_form() const { return std::get<RationalPhases>(form_); }
  /// Polar view; exact conversion of a rational system (phase a_k / m).
  Polar to_polar() const;
  Eigen::VectorXcd points() const;

 private:
  std::variant<RationalPhases, Polar> form_{RationalPhases{}};
};

/// Fractional part in [0, 1).
template <typename Scalar>
Scalar wrap_phase(Scalar x) {
  Scalar f = x - std::floor(x);
  return f >= Scalar(1) ? Scalar(0) : f;
}

/// S_nu = sum_k r_k^nu e(nu phi_k), each term taken directly from (r, phi) at exponent nu.
template <typename Scalar>
std::complex<Scalar> power_sum(const Eigen::Ref<const Vec<Scalar>>& radii,
                               const Eigen::Ref<const Vec<Scalar>>& phases, Eigen::Index nu) {
  constexpr Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  std::complex<Scalar> s(0, 0);
  for (Eigen::Index k = 0; k < radii.size(); ++k) {
    const Scalar mag = radii[k] == Scalar(1) ? Scalar(1) : std::pow(radii[k], static_cast<Scalar>(nu));
    s += std::polar(mag, two_pi * wrap_phase(static_cast<Scalar>(nu) * phases[k]));
  }
  return s;
}

/// |S_1|, ..., |S_N| for a polar tuple.
template <typename Scalar>
Vec<Scalar> power_sum_moduli(const Eigen::Ref<const Vec<Scalar>>& radii,
                             const Eigen::Ref<const Vec<Scalar>>& phases, Eigen::Index range) {
  Vec<Scalar> out(range);
  for (Eigen::Index nu = 1; nu <= range; ++nu) out[nu - 1] = std::abs(power_sum<Scalar>(radii, phases, nu));
  return out;
}

/// |S_nu| table for nu = 1..range.
struct Spectrum {
  Eigen::Index n = 0;
  Eigen::Index range = 0;
  Eigen::VectorXcd sums;    // S_nu at index nu - 1
  Eigen::VectorXd values;   // |S_nu|
  Eigen::Index argmax_nu = 0;  // first nu attaining max_value
  double max_value = 0.0;
};

PowerSumSystem from_difference_set(const DifferenceSet& ds);

/// Turan's extremal tuple z_k = e(k / (n + 1)), k = 1..n.
PowerSumSystem turan_tuple(std::int64_t n);

/// For rational systems nu * a_k is reduced mod m before the exponential.
/// Threads split the nu range; each entry is computed independently of the split.
Spectrum spectrum(const PowerSumSystem& sys, Eigen::Index range, unsigned threads = 1);

/// S_nu for one nu (nu may be 0 or exceed any range).
std::complex<double> power_sum(const PowerSumSystem& sys, std::int64_t nu);

/// Closed-form |S_nu| of the Singer or Bose tuple of size n.
/// Singer: sqrt(n-1) off multiples of n^2-n+1, n on them.
/// Bose (1 <= nu <= n^2-2 only, else RangeViolation): sqrt(n) off multiples of n-1, 1 on them.
SqrtRational expected_spectrum(SetKind kind, std::int64_t n, std::int64_t nu);

struct SpectrumCheck {
  bool passed = true;
  Eigen::Index checked = 0;     // number of nu compared
  Eigen::Index window = 0;      // last nu inside the closed form's validity window
  double worst_deviation = 0.0;
  Eigen::Index worst_nu = 0;
  std::vector<Eigen::Index> violations;
};

inline constexpr double kSpectrumTolerance = 1e-9;

/// Compares spectrum(sys, range) with expected_spectrum over nu = 1..range (Bose: capped at n^2-2).
SpectrumCheck check_spectrum(const PowerSumSystem& sys, SetKind kind, std::int64_t n, Eigen::Index range);

PowerSumSystem rotated(const PowerSumSystem& sys, double phase);
PowerSumSystem conjugated(const PowerSumSystem& sys);
PowerSumSystem permuted(const PowerSumSystem& sys, const std::vector<Eigen::Index>& perm);

}  // namespace turan
