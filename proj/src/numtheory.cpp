#include "turan/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "turan/error.hpp"

namespace turan {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ParamViolation: return "ParamViolation";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::uint64_t Factorization::product() const {
  std::uint64_t out = 1;
  for (const auto& [prime, mult] : pairs) out *= nt::ipow(prime, mult);
  return out;
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(pairs.size());
  for (const auto& pr : pairs) out.push_back(pr.first);
  return out;
}

namespace nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (r != 1) throw Error(ErrorCode::DivisionByZero, "value " + std::to_string(a) + " not invertible mod " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) throw Error(ErrorCode::ParamViolation, "integer power overflows 64 bits");
    out *= base;
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t sp : kSmall) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a sufficient witness set below 3.3e24.
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::ParamViolation, "cannot factorize 0");
  std::map<std::uint64_t, int> found;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++found[p];
      n /= p;
    }
  }
  factor_into(n, found);
  Factorization f;
  f.pairs.assign(found.begin(), found.end());
  return f;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  Factorization f = factorize(n);
  if (f.pairs.size() != 1) return std::nullopt;
  return PrimePower{f.pairs[0].first, f.pairs[0].second, n};
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto primes = factorize(p - 1).primes();
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = std::all_of(primes.begin(), primes.end(),
                          [&](std::uint64_t r) { return powmod(g, (p - 1) / r, p) != 1; });
    if (ok) return g;
  }
  throw Error(ErrorCode::SearchExhausted, "no primitive root found");
}

std::uint64_t crt(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2) {
  const std::uint64_t m = m1 * m2;
  // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
  const std::uint64_t diff = (r2 % m2 + m2 - r1 % m2) % m2;
  const std::uint64_t t = mulmod(diff, invmod(m1 % m2, m2), m2);
  return (r1 % m1 + m1 * t) % m;
}

}  // namespace nt
}  // namespace turan
