#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace turan {

enum class SetKind { Singer, Bose, Ruzsa };

const char* to_string(SetKind kind);
std::optional<SetKind> parse_set_kind(const std::string& s);

/// n distinct residues modulo `modulus`, sorted ascending.
struct DifferenceSet {
  SetKind kind = SetKind::Singer;
  std::int64_t n = 0;
  std::int64_t modulus = 0;
  std::vector<std::int64_t> residues;

  /// Throws ParamViolation unless residues are sorted, distinct, in range and match the
  /// kind's modulus (Singer n^2-n+1, Bose n^2-1, Ruzsa p^2-p with n = p-1).
  void validate() const;

  friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;
};

enum class Verdict {
  Perfect,         // every nonzero residue is a difference exactly once
  SidonAvoiding,   // exactly the residues not divisible by `divisor`, each once
  Sidon,           // all differences distinct, no further structure
  Failed,          // some residue occurs twice or more
};

const char* to_string(Verdict v);

struct DifferenceCertificate {
  /// counts[r] = #{(i, j) : i != j, a_i - a_j = r (mod modulus)}
  std::vector<std::int64_t> counts;
  Verdict verdict = Verdict::Failed;
  std::int64_t divisor = 0;  // SidonAvoiding only
  std::int64_t witness = 0;  // Failed only: smallest residue with count >= 2
  std::int64_t witness_count = 0;

  bool is_sidon() const { return verdict != Verdict::Failed; }
  std::int64_t covered() const;
  std::string describe() const;
};

/// Perfect difference set of size n modulo n^2-n+1; throws NotPrimePower unless n-1 is a prime power.
DifferenceSet singer(std::int64_t n);

/// Sidon set of size n modulo n^2-1 missing exactly the multiples of n+1; n a prime power.
DifferenceSet bose(std::int64_t n);

/// Sidon set of size p-1 modulo p^2-p from the smallest primitive root of p.
DifferenceSet ruzsa(std::int64_t p);

DifferenceCertificate certify(const DifferenceSet& ds);

/// Residue-by-residue shift by c (mod modulus), re-sorted.
DifferenceSet translate(const DifferenceSet& ds, std::int64_t c);

/// Verdict the construction of this kind must produce.
bool matches_expected_verdict(const DifferenceSet& ds, const DifferenceCertificate& cert);

}  // namespace turan
