#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "turan/bounds.hpp"
#include "turan/difference_sets.hpp"
#include "turan/optimizer.hpp"
#include "turan/power_sums.hpp"

namespace turan {

using nlohmann::json;

void to_json(json& j, const SqrtRational& v);
void to_json(json& j, const DifferenceSet& ds);
void to_json(json& j, const DifferenceCertificate& cert);
void to_json(json& j, const Spectrum& sp);
void to_json(json& j, const SpectrumCheck& check);
void to_json(json& j, const BoundReport& b);
void to_json(json& j, const EqualityCertificate& cert);
void to_json(json& j, const ReferenceRow& row);
void to_json(json& j, const SearchSpec& spec);
void to_json(json& j, const SearchResult& result);
void to_json(json& j, const MatchReport& report);
void to_json(json& j, const PowerSumSystem& sys);

/// {kind, n, modulus, residues[]}; validated.
DifferenceSet difference_set_from_json(const json& j);

/// {"form": "rational", "exponents": [...], "modulus": m} or
/// {"form": "polar", "radii": [...], "phases": [...]}. Throws InvalidInput.
PowerSumSystem system_from_json(const json& j);

/// One "path: value" line per scalar leaf; doubles with 12 significant digits,
/// numeric arrays on a single line.
void write_human(std::ostream& os, const json& j);

/// Header "nu,re,im,abs", one row per nu, 17 significant digits.
void write_spectrum_csv(std::ostream& os, const Spectrum& sp);

}  // namespace turan
