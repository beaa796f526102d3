#include "turan/exact.hpp"

#include <cmath>
#include <numeric>

#include "turan/error.hpp"

namespace turan {

namespace {

std::int64_t isqrt_exact(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

}  // namespace

SqrtRational::SqrtRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw Error(ErrorCode::ParamViolation, "square root of a negative rational");
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

double SqrtRational::value() const { return std::sqrt(squared()); }

bool SqrtRational::is_integer() const { return den_ == 1 && isqrt_exact(num_) >= 0; }

std::string SqrtRational::str() const {
  if (den_ == 1) {
    const std::int64_t r = isqrt_exact(num_);
    return r >= 0 ? std::to_string(r) : "sqrt(" + std::to_string(num_) + ")";
  }
  return "sqrt(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
}

}  // namespace turan
