#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "turan/numtheory.hpp"

namespace turan::ff {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Element of a finite field, stored by its index: the coordinate vector over the base field
/// read as a base-|base| number, lowest coordinate first. Index 0 is zero, index 1 is one.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr ctx, std::uint64_t index);

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldPtr& ctx_ptr() const { return ctx_; }
  std::uint64_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }

  /// Coordinates over the base field (base-field element indices), length == ctx().degree().
  std::vector<std::uint64_t> coeffs() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.index_ == b.index_ && a.ctx_ == b.ctx_;
  }

 private:
  void check_same(const FieldElement& rhs) const;

  FieldPtr ctx_;
  std::uint64_t index_ = 0;
};

FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);

/// Exact multiplicative order; throws ZeroElement on 0.
std::uint64_t element_order(const FieldElement& a);

/// GF(p) or a simple extension of degree e over another FieldCtx. Immutable after construction.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  static FieldPtr prime_field(std::uint64_t p);

  /// Extension by the lexicographically first monic irreducible polynomial of the given degree
  /// (coefficients compared from the x^{e-1} term down). With primitive_generator the search
  /// also requires the class of x to generate the multiplicative group.
  static FieldPtr extension(FieldPtr base, int degree, bool primitive_generator);

  /// Extension by an explicit monic polynomial (base-element indices, constant term first,
  /// leading 1 included). Throws ParamViolation if it is not irreducible.
  static FieldPtr extension_with_modulus(FieldPtr base, std::vector<std::uint64_t> modulus);

  bool is_prime_field() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  std::uint64_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t mult_order() const { return order_ - 1; }
  const Factorization& mult_order_factors() const { return mult_order_factors_; }
  /// Monic modulus over the base, constant term first; empty for a prime field.
  const std::vector<std::uint64_t>& modulus_poly() const { return modulus_; }
  std::string describe() const;

  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }
  /// The class of x; for a prime field this is the smallest primitive root.
  FieldElement generator() const;
  FieldElement element(std::uint64_t index) const;
  FieldElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  /// Image of a base-field element (given by index) as a constant.
  FieldElement embed(std::uint64_t base_index) const { return element(base_index); }
  /// Smallest-index primitive element.
  FieldElement primitive_element() const;

  // Arithmetic on element indices.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  std::vector<std::uint64_t> decode(std::uint64_t index) const;
  std::uint64_t encode(std::span<const std::uint64_t> coeffs) const;

  FieldCtx(std::uint64_t p, FieldPtr base, std::vector<std::uint64_t> modulus);

 private:
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t p_;
  FieldPtr base_;
  int degree_;
  std::uint64_t base_order_;
  std::uint64_t order_;
  std::vector<std::uint64_t> modulus_;
  Factorization mult_order_factors_;
  std::vector<std::uint32_t> mul_table_;  // order^2 entries for tiny fields
  std::vector<std::uint32_t> add_table_;
};

/// GF(q^e) built as a degree-e extension of GF(q), GF(q) itself a degree-k extension of Z_p.
/// e == 1 returns GF(q). With primitive_generator the top-level x is primitive.
FieldPtr build_field(const PrimePower& pp, int degree, bool primitive_generator = true);

/// Discrete logarithm by full table.
class DlogTable {
 public:
  /// Throws NotPrimitive if theta does not generate the multiplicative group.
  DlogTable(const FieldElement& theta);

  /// Exponent i in [0, q^e - 1) with theta^i == a; throws ZeroElement on 0.
  std::uint64_t operator()(const FieldElement& a) const;
  const FieldElement& theta() const { return theta_; }

 private:
  FieldElement theta_;
  std::vector<std::uint64_t> log_;
};

inline DlogTable dlog_table(const FieldElement& theta) { return DlogTable(theta); }

namespace poly {

// Dense polynomials over a field, coefficients are element indices, constant term first.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
Poly mulmod(const FieldCtx& k, const Poly& a, const Poly& b, const Poly& modulus);
Poly powmod(const FieldCtx& k, Poly base, std::uint64_t e, const Poly& modulus);
Poly rem(const FieldCtx& k, Poly a, const Poly& modulus);
Poly gcd(const FieldCtx& k, Poly a, Poly b);
/// Rabin's test for a monic polynomial of degree >= 1.
bool is_irreducible(const FieldCtx& k, const Poly& f);
/// Whether x has multiplicative order |k|^deg(f) - 1 modulo the irreducible f.
bool x_is_primitive(const FieldCtx& k, const Poly& f, const Factorization& mult_order_factors);

}  // namespace poly
}  // namespace turan::ff
