#pragma once

#include <cstdint>
#include <string>

namespace turan {

/// sqrt(num / den) held exactly, reduced so that gcd(num, den) == 1 and den > 0.
class SqrtRational {
 public:
  SqrtRational() = default;
  SqrtRational(std::int64_t num, std::int64_t den = 1);

  static SqrtRational integer(std::int64_t v) { return SqrtRational(v * v, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// The rational value of the square.
  double squared() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  double value() const;
  /// Whether the value itself is an integer.
  bool is_integer() const;
  std::string str() const;

  friend bool operator==(const SqrtRational&, const SqrtRational&) = default;
  friend bool operator<(const SqrtRational& a, const SqrtRational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace turan
