#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace turan {

/// q = p^k with p prime and k >= 1.
struct PrimePower {
  std::uint64_t p = 0;
  int k = 0;
  std::uint64_t q = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly increasing.
struct Factorization {
  std::vector<std::pair<std::uint64_t, int>> pairs;

  std::uint64_t product() const;
  std::vector<std::uint64_t> primes() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Multiplicative inverse of a modulo m; requires gcd(a, m) == 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Exact integer power; throws ParamViolation on 64-bit overflow.
std::uint64_t ipow(std::uint64_t base, int exp);

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Trial division for small cofactors, Brent/Pollard rho (fixed seeds) above.
Factorization factorize(std::uint64_t n);

/// Smallest positive primitive root modulo the prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// x with x = r1 (mod m1), x = r2 (mod m2), 0 <= x < m1*m2, gcd(m1, m2) == 1.
std::uint64_t crt(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2);

}  // namespace nt
}  // namespace turan
