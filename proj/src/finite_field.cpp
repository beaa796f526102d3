#include "turan/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "turan/error.hpp"

namespace turan::ff {

namespace {

constexpr std::uint64_t kTableLimit = 256;

}  // namespace

// ---------------------------------------------------------------- polynomials

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly rem(const FieldCtx& k, Poly a, const Poly& modulus) {
  trim(a);
  const std::size_t dm = modulus.size() - 1;
  const std::uint64_t lead_inv = k.inv(modulus.back());
  while (a.size() > dm) {
    const std::uint64_t c = k.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = k.sub(a[shift + i], k.mul(c, modulus[i]));
    trim(a);
  }
  return a;
}

Poly mulmod(const FieldCtx& k, const Poly& a, const Poly& b, const Poly& modulus) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = k.add(prod[i + j], k.mul(a[i], b[j]));
  }
  return rem(k, std::move(prod), modulus);
}

Poly powmod(const FieldCtx& k, Poly base, std::uint64_t e, const Poly& modulus) {
  Poly result = rem(k, Poly{1}, modulus);
  base = rem(k, std::move(base), modulus);
  while (e > 0) {
    if (e & 1) result = mulmod(k, result, base, modulus);
    e >>= 1;
    if (e > 0) base = mulmod(k, base, base, modulus);
  }
  return result;
}

Poly gcd(const FieldCtx& k, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = k.inv(a.back());
    for (auto& c : a) c = k.mul(c, li);
  }
  return a;
}

bool is_irreducible(const FieldCtx& k, const Poly& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  // frob[j] = x^{Q^j} mod f
  std::vector<Poly> frob(d + 1);
  frob[0] = rem(k, x, f);
  for (int j = 1; j <= d; ++j) frob[j] = powmod(k, frob[j - 1], k.order(), f);
  if (frob[d] != frob[0]) return false;
  for (std::uint64_t r : nt::factorize(static_cast<std::uint64_t>(d)).primes()) {
    Poly h = frob[d / static_cast<int>(r)];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = k.sub(h[1], 1);
    trim(h);
    const Poly g = gcd(k, h, f);
    if (g.size() != 1) return false;
  }
  return true;
}

bool x_is_primitive(const FieldCtx& k, const Poly& f, const Factorization& mult_order_factors) {
  const std::uint64_t n = mult_order_factors.product();
  const Poly x{0, 1};
  const Poly one = rem(k, Poly{1}, f);
  for (std::uint64_t r : mult_order_factors.primes()) {
    if (powmod(k, x, n / r, f) == one) return false;
  }
  return true;
}

}  // namespace poly

// ---------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(std::uint64_t p, FieldPtr base, std::vector<std::uint64_t> modulus)
    : p_(p), base_(std::move(base)), modulus_(std::move(modulus)) {
  if (base_) {
    degree_ = static_cast<int>(modulus_.size()) - 1;
    base_order_ = base_->order();
    order_ = nt::ipow(base_order_, degree_);
  } else {
    degree_ = 1;
    base_order_ = p_;
    order_ = p_;
  }
  mult_order_factors_ = nt::factorize(order_ - 1);
  if (base_ && order_ <= kTableLimit) {
    mul_table_.resize(order_ * order_);
    add_table_.resize(order_ * order_);
    for (std::uint64_t a = 0; a < order_; ++a) {
      for (std::uint64_t b = 0; b < order_; ++b) {
        mul_table_[a * order_ + b] = static_cast<std::uint32_t>(mul_slow(a, b));
        const auto ca = decode(a), cb = decode(b);
        std::vector<std::uint64_t> cs(degree_);
        for (int i = 0; i < degree_; ++i) cs[i] = base_->add(ca[i], cb[i]);
        add_table_[a * order_ + b] = static_cast<std::uint32_t>(encode(cs));
      }
    }
  }
}

FieldPtr FieldCtx::prime_field(std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > (1ull << 31)) throw Error(ErrorCode::ParamViolation, "prime field characteristic too large");
  return std::make_shared<const FieldCtx>(p, nullptr, std::vector<std::uint64_t>{});
}

FieldPtr FieldCtx::extension(FieldPtr base, int degree, bool primitive_generator) {
  if (degree < 1) throw Error(ErrorCode::ParamViolation, "extension degree must be >= 1");
  const std::uint64_t q = base->order();
  const std::uint64_t target = nt::ipow(q, degree);
  const Factorization mult = nt::factorize(target - 1);
  // Enumerate the low coefficients as a base-q counter; the constant term is least significant.
  const std::uint64_t candidates = nt::ipow(q, degree);
  for (std::uint64_t t = 0; t < candidates; ++t) {
    poly::Poly f(degree + 1);
    std::uint64_t rest = t;
    for (int i = 0; i < degree; ++i) {
      f[i] = rest % q;
      rest /= q;
    }
    f[degree] = 1;
    if (f[0] == 0 && degree > 1) continue;
    if (!poly::is_irreducible(*base, f)) continue;
    if (primitive_generator && !poly::x_is_primitive(*base, f, mult)) continue;
    return std::make_shared<const FieldCtx>(base->characteristic(), base, std::move(f));
  }
  throw Error(ErrorCode::SearchExhausted, "no suitable modulus polynomial of degree " + std::to_string(degree));
}

FieldPtr FieldCtx::extension_with_modulus(FieldPtr base, std::vector<std::uint64_t> modulus) {
  if (modulus.size() < 2 || modulus.back() != 1) throw Error(ErrorCode::ParamViolation, "modulus must be monic of degree >= 1");
  for (auto c : modulus) {
    if (c >= base->order()) throw Error(ErrorCode::ParamViolation, "modulus coefficient outside base field");
  }
  if (!poly::is_irreducible(*base, modulus)) throw Error(ErrorCode::ParamViolation, "modulus polynomial is reducible");
  return std::make_shared<const FieldCtx>(base->characteristic(), std::move(base), std::move(modulus));
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "GF(" << order_ << ")";
  if (base_) {
    os << " = GF(" << base_order_ << ")[x]/(";
    bool first = true;
    for (int i = degree_; i >= 0; --i) {
      if (modulus_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i > 0) os << (i == 1 ? "x" : "x^" + std::to_string(i));
    }
    os << ")";
  }
  return os.str();
}

FieldElement FieldCtx::element(std::uint64_t index) const {
  if (index >= order_) throw Error(ErrorCode::ParamViolation, "element index outside field");
  return FieldElement(shared_from_this(), index);
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) != degree_) throw Error(ErrorCode::ParamViolation, "coefficient vector length must equal degree");
  for (auto c : coeffs) {
    if (c >= base_order_) throw Error(ErrorCode::ParamViolation, "coefficient outside base field");
  }
  return element(encode(coeffs));
}

FieldElement FieldCtx::generator() const {
  if (!base_) return element(nt::primitive_root(p_));
  return element(degree_ == 1 ? base_->neg(modulus_[0]) : base_order_);
}

FieldElement FieldCtx::primitive_element() const {
  for (std::uint64_t i = 1; i < order_; ++i) {
    FieldElement a = element(i);
    if (element_order(a) == order_ - 1) return a;
  }
  throw Error(ErrorCode::SearchExhausted, "no primitive element");
}

std::vector<std::uint64_t> FieldCtx::decode(std::uint64_t index) const {
  std::vector<std::uint64_t> out(degree_);
  for (int i = 0; i < degree_; ++i) {
    out[i] = index % base_order_;
    index /= base_order_;
  }
  return out;
}

std::uint64_t FieldCtx::encode(std::span<const std::uint64_t> coeffs) const {
  std::uint64_t out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) out = out * base_order_ + coeffs[i];
  return out;
}

std::uint64_t FieldCtx::add(std::uint64_t a, std::uint64_t b) const {
  if (!base_) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[a * order_ + b];
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < degree_; ++i) {
    out += scale * base_->add(a % base_order_, b % base_order_);
    a /= base_order_;
    b /= base_order_;
    scale *= base_order_;
  }
  return out;
}

std::uint64_t FieldCtx::neg(std::uint64_t a) const {
  if (!base_) return a == 0 ? 0 : p_ - a;
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < degree_; ++i) {
    out += scale * base_->neg(a % base_order_);
    a /= base_order_;
    scale *= base_order_;
  }
  return out;
}

std::uint64_t FieldCtx::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldCtx::mul(std::uint64_t a, std::uint64_t b) const {
  if (!base_) return nt::mulmod(a, b, p_);
  if (!mul_table_.empty()) return mul_table_[a * order_ + b];
  return mul_slow(a, b);
}

std::uint64_t FieldCtx::mul_slow(std::uint64_t a, std::uint64_t b) const {
  const auto ca = decode(a), cb = decode(b);
  poly::Poly prod(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
  }
  // modulus is monic
  for (int d = 2 * degree_ - 2; d >= degree_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i < degree_; ++i) {
      prod[d - degree_ + i] = base_->sub(prod[d - degree_ + i], base_->mul(c, modulus_[i]));
    }
    prod[d] = 0;
  }
  return encode(std::span<const std::uint64_t>(prod.data(), degree_));
}

std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return result;
}

std::uint64_t FieldCtx::inv(std::uint64_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (!base_) return nt::invmod(a, p_);
  return pow(a, order_ - 2);
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr ctx, std::uint64_t index) : ctx_(std::move(ctx)), index_(index) {}

std::vector<std::uint64_t> FieldElement::coeffs() const { return ctx_->decode(index_); }

void FieldElement::check_same(const FieldElement& rhs) const {
  if (ctx_ != rhs.ctx_) throw Error(ErrorCode::ParamViolation, "field elements from different fields");
}

FieldElement FieldElement::operator-() const { return FieldElement(ctx_, ctx_->neg(index_)); }

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(rhs);
  index_ = ctx_->add(index_, rhs.index_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(rhs);
  index_ = ctx_->sub(index_, rhs.index_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(rhs);
  index_ = ctx_->mul(index_, rhs.index_);
  return *this;
}

FieldElement inv(const FieldElement& a) { return FieldElement(a.ctx_ptr(), a.ctx().inv(a.index())); }

FieldElement pow(const FieldElement& a, std::uint64_t e) { return FieldElement(a.ctx_ptr(), a.ctx().pow(a.index(), e)); }

std::uint64_t element_order(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative order");
  const FieldCtx& k = a.ctx();
  std::uint64_t ord = k.mult_order();
  for (const auto& [r, mult] : k.mult_order_factors().pairs) {
    for (int j = 0; j < mult; ++j) {
      if (k.pow(a.index(), ord / r) != 1) break;
      ord /= r;
    }
  }
  return ord;
}

FieldPtr build_field(const PrimePower& pp, int degree, bool primitive_generator) {
  if (!nt::is_prime(pp.p) || pp.k < 1 || nt::ipow(pp.p, pp.k) != pp.q) {
    throw Error(ErrorCode::NotPrimePower, "invalid prime power triple");
  }
  if (degree < 1 || degree > 3) throw Error(ErrorCode::ParamViolation, "extension degree must be 1, 2 or 3");
  FieldPtr prime = FieldCtx::prime_field(pp.p);
  if (pp.k == 1 && degree == 1) return prime;
  FieldPtr gf_q = pp.k == 1 ? prime : FieldCtx::extension(prime, pp.k, primitive_generator && degree == 1);
  if (degree == 1) return gf_q;
  return FieldCtx::extension(gf_q, degree, primitive_generator);
}

// ---------------------------------------------------------------- DlogTable

DlogTable::DlogTable(const FieldElement& theta) : theta_(theta) {
  const FieldCtx& k = theta.ctx();
  if (theta.is_zero() || element_order(theta) != k.mult_order()) {
    throw Error(ErrorCode::NotPrimitive, "dlog base is not a primitive element");
  }
  log_.assign(k.order(), 0);
  std::uint64_t cur = 1;
  for (std::uint64_t i = 0; i < k.mult_order(); ++i) {
    log_[cur] = i;
    cur = k.mul(cur, theta.index());
  }
}

std::uint64_t DlogTable::operator()(const FieldElement& a) const {
  if (a.ctx_ptr() != theta_.ctx_ptr()) throw Error(ErrorCode::ParamViolation, "element from a different field");
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "discrete log of zero");
  return log_[a.index()];
}

}  // namespace turan::ff
