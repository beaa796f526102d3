#include "turan/difference_sets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "turan/error.hpp"
#include "turan/finite_field.hpp"
#include "turan/numtheory.hpp"

namespace turan {

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Singer: return "singer";
    case SetKind::Bose: return "bose";
    case SetKind::Ruzsa: return "ruzsa";
  }
  return "unknown";
}

std::optional<SetKind> parse_set_kind(const std::string& s) {
  if (s == "singer") return SetKind::Singer;
  if (s == "bose") return SetKind::Bose;
  if (s == "ruzsa") return SetKind::Ruzsa;
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Perfect: return "Perfect";
    case Verdict::SidonAvoiding: return "SidonAvoiding";
    case Verdict::Sidon: return "Sidon";
    case Verdict::Failed: return "Failed";
  }
  return "unknown";
}

void DifferenceSet::validate() const {
  if (n < 1 || static_cast<std::int64_t>(residues.size()) != n) {
    throw Error(ErrorCode::ParamViolation, "difference set must hold exactly n >= 1 residues");
  }
  if (modulus < 1) throw Error(ErrorCode::ParamViolation, "modulus must be positive");
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] < 0 || residues[i] >= modulus) throw Error(ErrorCode::ParamViolation, "residue outside [0, modulus)");
    if (i > 0 && residues[i] <= residues[i - 1]) throw Error(ErrorCode::ParamViolation, "residues must be sorted and distinct");
  }
  std::int64_t expected = 0;
  switch (kind) {
    case SetKind::Singer: expected = n * n - n + 1; break;
    case SetKind::Bose: expected = n * n - 1; break;
    case SetKind::Ruzsa: expected = (n + 1) * (n + 1) - (n + 1); break;
  }
  if (modulus != expected) throw Error(ErrorCode::ParamViolation, std::string("modulus does not match ") + to_string(kind) + " kind");
}

std::int64_t DifferenceCertificate::covered() const {
  return std::count_if(counts.begin() + (counts.empty() ? 0 : 1), counts.end(), [](std::int64_t c) { return c > 0; });
}

std::string DifferenceCertificate::describe() const {
  std::ostringstream os;
  os << to_string(verdict);
  if (verdict == Verdict::SidonAvoiding) os << "(" << divisor << ")";
  if (verdict == Verdict::Failed) os << "(residue " << witness << " has count " << witness_count << ")";
  return os.str();
}

DifferenceSet singer(std::int64_t n) {
  const auto pp = n >= 3 ? nt::as_prime_power(static_cast<std::uint64_t>(n - 1)) : std::nullopt;
  if (!pp) throw Error(ErrorCode::NotPrimePower, "NotPrimePower(" + std::to_string(n - 1) + "): n-1 must be a prime power");
  const std::int64_t q = n - 1;
  const std::int64_t m = n * n - n + 1;
  const auto field = ff::build_field(*pp, 3, true);
  const ff::FieldCtx& k = *field;
  const std::uint64_t theta = k.generator().index();
  // theta^i lies in span{1, theta} iff its x^2 coordinate vanishes; index < q^2 says exactly that.
  const std::uint64_t span_limit = static_cast<std::uint64_t>(q * q);
  std::set<std::int64_t> classes;
  std::int64_t hits = 0;
  std::uint64_t cur = 1;
  for (std::uint64_t i = 0; i < k.mult_order(); ++i) {
    if (cur < span_limit) {
      classes.insert(static_cast<std::int64_t>(i % static_cast<std::uint64_t>(m)));
      ++hits;
    }
    cur = k.mul(cur, theta);
  }
  if (hits != q * q - 1 || static_cast<std::int64_t>(classes.size()) != n) {
    throw Error(ErrorCode::SearchExhausted, "Singer plane collapse produced the wrong number of classes");
  }
  DifferenceSet ds{SetKind::Singer, n, m, {classes.begin(), classes.end()}};
  ds.validate();
  return ds;
}

DifferenceSet bose(std::int64_t n) {
  const auto pp = n >= 2 ? nt::as_prime_power(static_cast<std::uint64_t>(n)) : std::nullopt;
  if (!pp) throw Error(ErrorCode::NotPrimePower, "NotPrimePower(" + std::to_string(n) + "): n must be a prime power");
  const auto field = ff::build_field(*pp, 2, true);
  const ff::FieldCtx& k = *field;
  const ff::FieldElement theta = k.generator();
  const ff::DlogTable dlog(theta);
  std::vector<std::int64_t> residues;
  residues.reserve(n);
  for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(n); ++a) {
    residues.push_back(static_cast<std::int64_t>(dlog(theta + k.embed(a))));
  }
  std::sort(residues.begin(), residues.end());
  DifferenceSet ds{SetKind::Bose, n, n * n - 1, std::move(residues)};
  ds.validate();
  return ds;
}

DifferenceSet ruzsa(std::int64_t p) {
  if (p < 3 || !nt::is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::NotPrime, "NotPrime(" + std::to_string(p) + "): p must be a prime >= 3");
  }
  const auto up = static_cast<std::uint64_t>(p);
  const std::uint64_t g = nt::primitive_root(up);
  std::vector<std::int64_t> residues;
  std::uint64_t gt = 1;
  for (std::uint64_t t = 1; t <= up - 1; ++t) {
    gt = gt * g % up;
    residues.push_back(static_cast<std::int64_t>(nt::crt(t % (up - 1), up - 1, gt, up)));
  }
  std::sort(residues.begin(), residues.end());
  DifferenceSet ds{SetKind::Ruzsa, p - 1, p * p - p, std::move(residues)};
  ds.validate();
  return ds;
}

DifferenceCertificate certify(const DifferenceSet& ds) {
  ds.validate();
  const std::int64_t m = ds.modulus;
  DifferenceCertificate cert;
  cert.counts.assign(m, 0);
  for (std::size_t i = 0; i < ds.residues.size(); ++i) {
    for (std::size_t j = 0; j < ds.residues.size(); ++j) {
      if (i == j) continue;
      ++cert.counts[((ds.residues[i] - ds.residues[j]) % m + m) % m];
    }
  }
  const auto& c = cert.counts;
  auto avoids = [&](std::int64_t d) {
    if (d < 2 || m % d != 0) return false;
    for (std::int64_t r = 1; r < m; ++r) {
      if (c[r] != (r % d == 0 ? 0 : 1)) return false;
    }
    return true;
  };
  // For n = 2 the Bose set is also perfect (n + 1 == modulus); report the Bose property.
  if (ds.kind == SetKind::Bose && avoids(ds.n + 1)) {
    cert.verdict = Verdict::SidonAvoiding;
    cert.divisor = ds.n + 1;
    return cert;
  }
  if (std::all_of(c.begin() + 1, c.end(), [](std::int64_t v) { return v == 1; })) {
    cert.verdict = Verdict::Perfect;
    return cert;
  }
  for (std::int64_t r = 1; r < m; ++r) {
    if (c[r] >= 2) {
      cert.verdict = Verdict::Failed;
      cert.witness = r;
      cert.witness_count = c[r];
      return cert;
    }
  }
  // All counts are 0 or 1. The smallest missed residue is the only candidate divisor.
  const std::int64_t d = std::find(c.begin() + 1, c.end(), 0) - c.begin();
  if (avoids(d)) {
    cert.verdict = Verdict::SidonAvoiding;
    cert.divisor = d;
  } else {
    cert.verdict = Verdict::Sidon;
  }
  return cert;
}

DifferenceSet translate(const DifferenceSet& ds, std::int64_t c) {
  DifferenceSet out = ds;
  for (auto& r : out.residues) r = ((r + c) % ds.modulus + ds.modulus) % ds.modulus;
  std::sort(out.residues.begin(), out.residues.end());
  return out;
}

bool matches_expected_verdict(const DifferenceSet& ds, const DifferenceCertificate& cert) {
  switch (ds.kind) {
    case SetKind::Singer: return cert.verdict == Verdict::Perfect;
    case SetKind::Bose: return cert.verdict == Verdict::SidonAvoiding && cert.divisor == ds.n + 1;
    case SetKind::Ruzsa: return cert.is_sidon();
  }
  return false;
}

}  // namespace turan
