#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "turan/error.hpp"
#include "turan/numtheory.hpp"
#include "turan/power_sums.hpp"

using namespace turan;

namespace {

// Oracle: raise each complex point to the nu-th power with std::pow, no modular reduction.
double naive_abs(const std::vector<std::int64_t>& exps, std::int64_t m, std::int64_t nu) {
  std::complex<double> s = 0.0;
  for (auto a : exps) s += std::pow(std::exp(std::complex<double>(0.0, 2.0 * M_PI * a / m)), static_cast<double>(nu));
  return std::abs(s);
}

}  // namespace

TEST_CASE("systems from constructions") {
  const auto sys = from_difference_set({SetKind::Singer, 3, 7, {0, 1, 3}});
  REQUIRE(sys.is_rational());
  CHECK(sys.rational_form().exponents == std::vector<std::int64_t>{0, 1, 3});
  CHECK(sys.rational_form().modulus == 7);
  const auto z = sys.points();
  CHECK(std::abs(z[1] - std::polar(1.0, 2.0 * M_PI / 7.0)) < 1e-15);

  const auto t2 = turan_tuple(2);
  CHECK(t2.rational_form().exponents == std::vector<std::int64_t>{1, 2});
  CHECK(t2.rational_form().modulus == 3);
  const auto t1 = turan_tuple(1);
  CHECK(std::abs(t1.points()[0] - std::complex<double>(-1.0, 0.0)) < 1e-15);
  CHECK(turan_tuple(4).rational_form().modulus == 5);
  CHECK_THROWS_AS(from_difference_set({SetKind::Singer, 0, 1, {}}), Error);
  CHECK_THROWS_AS(PowerSumSystem::rational({}, 5), Error);
}

TEST_CASE("Singer n=3 spectrum") {
  const Spectrum sp = spectrum(from_difference_set({SetKind::Singer, 3, 7, {0, 1, 3}}), 7);
  for (int nu = 1; nu <= 6; ++nu) CHECK(sp.values[nu - 1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sp.values[6] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sp.argmax_nu == 7);
  CHECK(sp.max_value == doctest::Approx(3.0));
}

TEST_CASE("Bose n=3 spectrum alternates sqrt(3) and 1") {
  const Spectrum sp = spectrum(from_difference_set(bose(3)), 7);
  for (int nu = 1; nu <= 7; ++nu) {
    CHECK(std::abs(sp.values[nu - 1] - (nu % 2 ? std::sqrt(3.0) : 1.0)) < 1e-12);
  }
}

TEST_CASE("Turan tuple has unit power sums up to n") {
  for (std::int64_t n = 1; n <= 50; ++n) {
    const Spectrum sp = spectrum(turan_tuple(n), n);
    REQUIRE((sp.values.array() - 1.0).abs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("spectrum matches the naive complex-power oracle") {
  for (const auto& ds : {singer(4), singer(6), bose(5), ruzsa(7)}) {
    const Spectrum sp = spectrum(from_difference_set(ds), 3 * ds.modulus);
    for (Eigen::Index nu = 1; nu <= sp.range; ++nu) {
      REQUIRE(std::abs(sp.values[nu - 1] - naive_abs(ds.residues, ds.modulus, nu)) < 1e-9);
    }
  }
}

TEST_CASE("expected_spectrum closed forms") {
  CHECK(expected_spectrum(SetKind::Singer, 3, 5) == SqrtRational(2));
  CHECK(expected_spectrum(SetKind::Singer, 3, 7) == SqrtRational::integer(3));
  CHECK(expected_spectrum(SetKind::Bose, 3, 1) == SqrtRational(3));
  CHECK(expected_spectrum(SetKind::Bose, 3, 2) == SqrtRational::integer(1));
  try {
    (void)expected_spectrum(SetKind::Bose, 3, 8);
    FAIL("nu = n^2 - 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RangeViolation);
  }
  CHECK_THROWS_AS(expected_spectrum(SetKind::Singer, 7, 1), Error);
  CHECK_THROWS_AS(expected_spectrum(SetKind::Bose, 6, 1), Error);
}

TEST_CASE("check_spectrum reports") {
  const auto s5 = check_spectrum(from_difference_set(singer(5)), SetKind::Singer, 5, 20);
  CHECK(s5.passed);
  CHECK(s5.checked == 20);
  CHECK(s5.worst_deviation < 1e-9);

  const auto b4 = check_spectrum(from_difference_set(bose(4)), SetKind::Bose, 4, 14);
  CHECK(b4.passed);
  CHECK(b4.checked == 14);

  const auto b3sys = from_difference_set(bose(3));
  const auto b3 = check_spectrum(b3sys, SetKind::Bose, 3, 8);
  CHECK(b3.passed);
  CHECK(b3.window == 7);
  CHECK(b3.checked == 7);
  CHECK(std::abs(spectrum(b3sys, 8).values[7] - 3.0) < 1e-12);

  // a non-perfect set fails the Singer closed form
  const auto bad = check_spectrum(from_difference_set({SetKind::Singer, 3, 7, {0, 1, 2}}), SetKind::Singer, 3, 7);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.violations.empty());
  CHECK_THROWS_AS(check_spectrum(b3sys, SetKind::Singer, 3, 7), Error);
}

TEST_CASE("Parseval identity over a full period") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 199);
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % std::min<std::int64_t>(m, 12));
    std::vector<std::int64_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    const auto sys = PowerSumSystem::rational({all.begin(), all.begin() + n}, m);
    double total = std::norm(power_sum(sys, 0));
    const Spectrum sp = spectrum(sys, m - 1 > 0 ? m - 1 : 1);
    for (std::int64_t nu = 1; nu < m; ++nu) total += sp.values[nu - 1] * sp.values[nu - 1];
    REQUIRE(std::abs(total - static_cast<double>(n * m)) < 1e-6);
  }
}

TEST_CASE("rotation, conjugation and periodicity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const auto ds = (t % 2) ? singer(6) : bose(7);
    const auto sys = from_difference_set(ds);
    const Spectrum base = spectrum(sys, 2 * ds.modulus);
    const Spectrum rot = spectrum(rotated(sys, u(rng)), 2 * ds.modulus);
    REQUIRE((base.values - rot.values).cwiseAbs().maxCoeff() <= 1e-12);
    const Spectrum conj = spectrum(conjugated(sys), 2 * ds.modulus);
    REQUIRE((base.values - conj.values).cwiseAbs().maxCoeff() <= 1e-12);
    for (Eigen::Index nu = 1; nu <= ds.modulus; ++nu) {
      REQUIRE(std::abs(base.values[nu - 1] - base.values[nu - 1 + ds.modulus]) <= 1e-12);
    }
  }
  // polar tuple with non-unit radii
  Eigen::VectorXd r(3), phi(3);
  r << 1.0, 1.05, 1.1;
  phi << 0.1, 0.37, 0.8;
  const auto pol = PowerSumSystem::polar(r, phi);
  const Spectrum a = spectrum(pol, 30);
  const Spectrum b = spectrum(rotated(pol, 0.3141), 30);
  const Spectrum c = spectrum(conjugated(pol), 30);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((a.values - c.values).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("construction maxima over the equality ranges") {
  for (std::int64_t n = 3; n <= 12; ++n) {
    if (nt::as_prime_power(n - 1)) {
      const Spectrum sp = spectrum(from_difference_set(singer(n)), n * n - n);
      CHECK(std::abs(sp.max_value - std::sqrt(n - 1.0)) < 1e-9);
    }
    if (nt::as_prime_power(n)) {
      const auto sys = from_difference_set(bose(n));
      for (std::int64_t i = 2; i <= n - 1; ++i) {
        REQUIRE(std::abs(spectrum(sys, n * n - i).max_value - std::sqrt(double(n))) < 1e-9);
      }
    }
  }
}

TEST_CASE("parallel spectrum is bitwise identical to the serial one") {
  const auto sys = from_difference_set(singer(10));
  const Spectrum serial = spectrum(sys, 5000, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    const Spectrum par = spectrum(sys, 5000, threads);
    REQUIRE(par.values == serial.values);
    REQUIRE(par.sums == serial.sums);
  }
}

TEST_CASE("templated core agrees in float and double") {
  Eigen::VectorXd r = Eigen::VectorXd::Ones(4);
  Eigen::VectorXd phi(4);
  phi << 0.0, 0.25, 0.5, 0.6;
  const Eigen::VectorXd d = power_sum_moduli<double>(r, phi, 10);
  const Eigen::VectorXf f = power_sum_moduli<float>(r.cast<float>(), phi.cast<float>(), 10);
  CHECK((d.cast<float>() - f).cwiseAbs().maxCoeff() < 1e-4f);
}
