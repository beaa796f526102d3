#include "turan/power_sums.hpp"

#include <algorithm>
#include <thread>

#include "turan/error.hpp"
#include "turan/numtheory.hpp"

namespace turan {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

PowerSumSystem PowerSumSystem::rational(std::vector<std::int64_t> exponents, std::int64_t modulus) {
  if (modulus < 1) throw Error(ErrorCode::ParamViolation, "modulus must be positive");
  if (exponents.empty()) throw Error(ErrorCode::ParamViolation, "a power-sum system needs at least one point");
  for (auto& a : exponents) a = mod(a, modulus);
  PowerSumSystem sys;
  sys.form_ = RationalPhases{std::move(exponents), modulus};
  return sys;
}

PowerSumSystem PowerSumSystem::polar(Eigen::VectorXd radii, Eigen::VectorXd phases) {
  if (radii.size() != phases.size()) throw Error(ErrorCode::ParamViolation, "radii and phases differ in length");
  if (radii.size() == 0) throw Error(ErrorCode::ParamViolation, "a power-sum system needs at least one point");
  if ((radii.array() < 0.0).any() || !radii.allFinite() || !phases.allFinite()) {
    throw Error(ErrorCode::ParamViolation, "radii must be finite and nonnegative, phases finite");
  }
  phases = phases.unaryExpr([](double x) { return wrap_phase(x); });
  PowerSumSystem sys;
  sys.form_ = Polar{std::move(radii), std::move(phases)};
  return sys;
}

PowerSumSystem PowerSumSystem::unimodular(const Eigen::VectorXd& phases) {
  return polar(Eigen::VectorXd::Ones(phases.size()), phases);
}

PowerSumSystem PowerSumSystem::from_points(const Eigen::VectorXcd& z) {
  Eigen::VectorXd r = z.cwiseAbs();
  Eigen::VectorXd phi = z.unaryExpr([](std::complex<double> w) { return std::arg(w) / kTwoPi; }).real();
  return polar(std::move(r), std::move(phi));
}

Eigen::Index PowerSumSystem::n() const {
  if (is_rational()) return static_cast<Eigen::Index>(rational_form().exponents.size());
  return std::get<Polar>(form_).radii.size();
}

Polar PowerSumSystem::to_polar() const {
  if (!is_rational()) return std::get<Polar>(form_);
  const auto& rf = rational_form();
  Polar p{Eigen::VectorXd::Ones(n()), Eigen::VectorXd(n())};
  for (Eigen::Index k = 0; k < n(); ++k) {
    p.phases[k] = static_cast<double>(rf.exponents[k]) / static_cast<double>(rf.modulus);
  }
  return p;
}

Eigen::VectorXcd PowerSumSystem::points() const {
  const Polar p = to_polar();
  Eigen::VectorXcd z(n());
  for (Eigen::Index k = 0; k < n(); ++k) z[k] = std::polar(p.radii[k], kTwoPi * p.phases[k]);
  return z;
}

std::complex<double> power_sum(const PowerSumSystem& sys, std::int64_t nu) {
  if (sys.is_rational()) {
    const auto& rf = sys.rational_form();
    const std::int64_t m = rf.modulus;
    const std::int64_t nu_red = mod(nu, m);
    std::complex<double> s(0.0, 0.0);
    for (std::int64_t a : rf.exponents) {
      const auto r = static_cast<std::int64_t>(nt::mulmod(static_cast<std::uint64_t>(nu_red), static_cast<std::uint64_t>(a),
                                                          static_cast<std::uint64_t>(m)));
      s += std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(m));
    }
    return s;
  }
  const Polar p = sys.to_polar();
  if (nu < 0) throw Error(ErrorCode::ParamViolation, "negative exponent on a polar system");
  return turan::power_sum<double>(p.radii, p.phases, nu);
}

PowerSumSystem from_difference_set(const DifferenceSet& ds) {
  ds.validate();
  return PowerSumSystem::rational(ds.residues, ds.modulus);
}

PowerSumSystem turan_tuple(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::ParamViolation, "turan tuple needs n >= 1");
  std::vector<std::int64_t> exps(n);
  for (std::int64_t k = 0; k < n; ++k) exps[k] = k + 1;
  return PowerSumSystem::rational(std::move(exps), n + 1);
}

Spectrum spectrum(const PowerSumSystem& sys, Eigen::Index range, unsigned threads) {
  if (range < 1) throw Error(ErrorCode::ParamViolation, "spectrum range must be >= 1");
  Spectrum sp;
  sp.n = sys.n();
  sp.range = range;
  sp.sums.resize(range);
  auto fill = [&](Eigen::Index lo, Eigen::Index hi) {
    for (Eigen::Index nu = lo; nu < hi; ++nu) sp.sums[nu - 1] = power_sum(sys, nu);
  };
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<Eigen::Index>(1, range / 64)));
  if (threads == 1) {
    fill(1, range + 1);
  } else {
    std::vector<std::jthread> pool;
    const Eigen::Index chunk = (range + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const Eigen::Index lo = 1 + t * chunk;
      const Eigen::Index hi = std::min<Eigen::Index>(range + 1, lo + chunk);
      if (lo < hi) pool.emplace_back(fill, lo, hi);
    }
  }
  sp.values = sp.sums.cwiseAbs();
  sp.max_value = sp.values.maxCoeff(&sp.argmax_nu);
  sp.argmax_nu += 1;
  return sp;
}

SqrtRational expected_spectrum(SetKind kind, std::int64_t n, std::int64_t nu) {
  switch (kind) {
    case SetKind::Singer: {
      if (n < 3 || !nt::as_prime_power(static_cast<std::uint64_t>(n - 1))) {
        throw Error(ErrorCode::NotPrimePower, "NotPrimePower(" + std::to_string(n - 1) + ")");
      }
      const std::int64_t m = n * n - n + 1;
      return nu % m != 0 ? SqrtRational(n - 1) : SqrtRational::integer(n);
    }
    case SetKind::Bose: {
      if (n < 2 || !nt::as_prime_power(static_cast<std::uint64_t>(n))) {
        throw Error(ErrorCode::NotPrimePower, "NotPrimePower(" + std::to_string(n) + ")");
      }
      if (nu < 1 || nu > n * n - 2) {
        throw Error(ErrorCode::RangeViolation, "Bose closed form holds only for 1 <= nu <= n^2-2");
      }
      return nu % (n - 1) != 0 ? SqrtRational(n) : SqrtRational::integer(1);
    }
    case SetKind::Ruzsa: break;
  }
  throw Error(ErrorCode::ParamViolation, "no closed-form spectrum for this kind");
}

SpectrumCheck check_spectrum(const PowerSumSystem& sys, SetKind kind, std::int64_t n, Eigen::Index range) {
  if (!sys.is_rational() || sys.n() != n) {
    throw Error(ErrorCode::ParamViolation, "system does not come from a difference set of this size");
  }
  const std::int64_t m = sys.rational_form().modulus;
  if ((kind == SetKind::Singer && m != n * n - n + 1) || (kind == SetKind::Bose && m != n * n - 1) || kind == SetKind::Ruzsa) {
    throw Error(ErrorCode::ParamViolation, std::string("system modulus does not match kind ") + to_string(kind));
  }
  SpectrumCheck report;
  report.window = kind == SetKind::Bose ? std::min<Eigen::Index>(range, n * n - 2) : range;
  if (report.window < 1) return report;
  const Spectrum sp = spectrum(sys, report.window);
  for (Eigen::Index nu = 1; nu <= report.window; ++nu) {
    const double dev = std::abs(sp.values[nu - 1] - expected_spectrum(kind, n, nu).value());
    ++report.checked;
    if (dev > report.worst_deviation) {
      report.worst_deviation = dev;
      report.worst_nu = nu;
    }
    if (!(dev <= kSpectrumTolerance)) report.violations.push_back(nu);
  }
  report.passed = report.violations.empty();
  return report;
}

PowerSumSystem rotated(const PowerSumSystem& sys, double phase) {
  Polar p = sys.to_polar();
  p.phases.array() += phase;
  return PowerSumSystem::polar(std::move(p.radii), std::move(p.phases));
}

PowerSumSystem conjugated(const PowerSumSystem& sys) {
  if (sys.is_rational()) {
    auto rf = sys.rational_form();
    for (auto& a : rf.exponents) a = -a;
    return PowerSumSystem::rational(std::move(rf.exponents), rf.modulus);
  }
  Polar p = sys.to_polar();
  return PowerSumSystem::polar(std::move(p.radii), -p.phases);
}

PowerSumSystem permuted(const PowerSumSystem& sys, const std::vector<Eigen::Index>& perm) {
  for (auto i : perm) {
    if (i < 0 || i >= sys.n()) throw Error(ErrorCode::ParamViolation, "permutation index out of range");
  }
  if (sys.is_rational()) {
    const auto& rf = sys.rational_form();
    std::vector<std::int64_t> exps;
    for (auto i : perm) exps.push_back(rf.exponents[i]);
    return PowerSumSystem::rational(std::move(exps), rf.modulus);
  }
  const Polar p = sys.to_polar();
  Eigen::VectorXd r(perm.size()), phi(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    r[j] = p.radii[perm[j]];
    phi[j] = p.phases[perm[j]];
  }
  return PowerSumSystem::polar(std::move(r), std::move(phi));
}

}  // namespace turan
