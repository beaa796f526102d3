#include "turan/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "turan/error.hpp"

namespace turan {

void to_json(json& j, const SqrtRational& v) {
  j = json{{"exact", v.str()}, {"square_num", v.num()}, {"square_den", v.den()}, {"value", v.value()}};
}

void to_json(json& j, const DifferenceSet& ds) {
  j = json{{"kind", to_string(ds.kind)}, {"n", ds.n}, {"modulus", ds.modulus}, {"residues", ds.residues}};
}

void to_json(json& j, const DifferenceCertificate& cert) {
  j = json{{"verdict", to_string(cert.verdict)}, {"summary", cert.describe()}, {"covered", cert.covered()}};
  std::int64_t total = 0;
  for (auto c : cert.counts) total += c;
  j["difference_count"] = total;
  if (cert.verdict == Verdict::SidonAvoiding) j["divisor"] = cert.divisor;
  if (cert.verdict == Verdict::Failed) {
    j["witness"] = cert.witness;
    j["witness_count"] = cert.witness_count;
  }
}

void to_json(json& j, const Spectrum& sp) {
  j = json{{"n", sp.n},
           {"range", sp.range},
           {"max_value", sp.max_value},
           {"argmax_nu", sp.argmax_nu},
           {"values", std::vector<double>(sp.values.data(), sp.values.data() + sp.values.size())}};
}

void to_json(json& j, const SpectrumCheck& check) {
  j = json{{"passed", check.passed},
           {"checked", check.checked},
           {"window", check.window},
           {"worst_deviation", check.worst_deviation},
           {"worst_nu", check.worst_nu},
           {"violations", check.violations}};
}

void to_json(json& j, const BoundReport& b) {
  j = json{{"name", to_string(b.name)},
           {"n", b.n},
           {b.name == BoundName::Cassels ? "m" : "c", b.parameter},
           {"range_limit", b.range_limit},
           {"value", b.value},
           {"constraint", to_string(b.applies_to)}};
}

void to_json(json& j, const EqualityCertificate& cert) {
  j = json{{"theorem", cert.theorem},
           {"n", cert.n},
           {"range", cert.range},
           {"lower_bound", cert.lower_bound},
           {"stated_value", cert.stated_value},
           {"construction_max", cert.construction_max},
           {"construction_argmax", cert.construction_argmax},
           {"construction", cert.construction},
           {"construction_verdict", to_string(cert.construction_verdict)},
           {"verdict", to_string(cert.verdict)},
           {"gap", cert.gap}};
  j["i"] = cert.theorem == 2 ? json(cert.i) : json(nullptr);
}

void to_json(json& j, const ReferenceRow& row) {
  j = json{{"name", row.name},           {"constraint", row.constraint}, {"range_formula", row.range_formula},
           {"condition", row.condition}, {"applicable", row.applicable}, {"witness", row.witness}};
  if (row.range > 0) {
    j["range"] = row.range;
    j["lower"] = row.lower;
    j["upper"] = row.upper;
  }
}

void to_json(json& j, const SearchSpec& spec) {
  j = json{{"n", spec.n},
           {"range", spec.range},
           {"constraint", to_string(spec.constraint)},
           {"restarts", spec.restarts},
           {"seed", spec.seed},
           {"cap", spec.cap()},
           {"cap_constant", spec.cap_constant},
           {"t_initial", spec.schedule.t_initial},
           {"t_min", spec.schedule.t_min},
           {"stage_iterations", spec.schedule.stage_iterations},
           {"polish_step_initial", spec.polish.step_initial},
           {"polish_step_min", spec.polish.step_min},
           {"seeded_starts", spec.starts.size()}};
}

void to_json(json& j, const PowerSumSystem& sys) {
  if (sys.is_rational()) {
    const auto& rf = sys.rational_form();
    j = json{{"form", "rational"}, {"exponents", rf.exponents}, {"modulus", rf.modulus}};
    return;
  }
  const Polar p = sys.to_polar();
  j = json{{"form", "polar"},
           {"radii", std::vector<double>(p.radii.data(), p.radii.data() + p.radii.size())},
           {"phases", std::vector<double>(p.phases.data(), p.phases.data() + p.phases.size())}};
}

void to_json(json& j, const SearchResult& result) {
  json canonical = json::array();
  for (Eigen::Index i = 0; i < result.canonical.rows(); ++i) {
    canonical.push_back({result.canonical(i, 0), result.canonical(i, 1)});
  }
  json restarts = json::array();
  for (const auto& r : result.per_restart) restarts.push_back({{"restart", r.index}, {"value", r.value}, {"seeded", r.seeded}});
  j = json{{"spec", result.spec},
           {"best_value", result.best_value},
           {"best_restart", result.best_restart},
           {"best_tuple", result.best_tuple},
           {"canonical", canonical},
           {"per_restart", restarts},
           {"bound_check",
            {{"source", result.bound_check.source},
             {"bound", result.bound_check.bound},
             {"slack", kBoundSlack},
             {"passed", result.bound_check.passed}}}};
}

void to_json(json& j, const MatchReport& report) {
  j = json{{"construction", report.construction_name},
           {"distance", report.distance},
           {"construction_value", report.construction_value},
           {"objective_gap", report.objective_gap},
           {"tolerance", kMatchTolerance},
           {"verdict", to_string(report.verdict)}};
}

DifferenceSet difference_set_from_json(const json& j) {
  try {
    DifferenceSet ds;
    const auto kind = parse_set_kind(j.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorCode::InvalidInput, "unknown difference set kind");
    ds.kind = *kind;
    ds.n = j.at("n").get<std::int64_t>();
    ds.modulus = j.at("modulus").get<std::int64_t>();
    ds.residues = j.at("residues").get<std::vector<std::int64_t>>();
    ds.validate();
    return ds;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed difference set record: ") + e.what());
  }
}

PowerSumSystem system_from_json(const json& j) {
  try {
    const std::string form = j.at("form").get<std::string>();
    if (form == "rational") {
      return PowerSumSystem::rational(j.at("exponents").get<std::vector<std::int64_t>>(), j.at("modulus").get<std::int64_t>());
    }
    if (form == "polar") {
      const auto r = j.at("radii").get<std::vector<double>>();
      const auto phi = j.at("phases").get<std::vector<double>>();
      return PowerSumSystem::polar(Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size())),
                                   Eigen::Map<const Eigen::VectorXd>(phi.data(), static_cast<Eigen::Index>(phi.size())));
    }
    throw Error(ErrorCode::InvalidInput, "form must be \"rational\" or \"polar\"");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed tuple file: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInput) throw;
    throw Error(ErrorCode::InvalidInput, std::string("invalid tuple: ") + e.what());
  }
}

namespace {

std::string human_scalar(const json& v) {
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void human_walk(std::ostream& os, const json& j, const std::string& path) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) human_walk(os, value, path.empty() ? key : path + "." + key);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
    if (flat) {
      os << path << ":";
      for (const auto& e : j) os << ' ' << human_scalar(e);
      os << '\n';
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) human_walk(os, j[i], path + "[" + std::to_string(i) + "]");
    return;
  }
  os << path << ": " << human_scalar(j) << '\n';
}

}  // namespace

void write_human(std::ostream& os, const json& j) { human_walk(os, j, ""); }

void write_spectrum_csv(std::ostream& os, const Spectrum& sp) {
  os << "nu,re,im,abs\n";
  char buf[128];
  for (Eigen::Index nu = 1; nu <= sp.range; ++nu) {
    const auto s = sp.sums[nu - 1];
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g\n", static_cast<long long>(nu), s.real(), s.imag(),
                  sp.values[nu - 1]);
    os << buf;
  }
}

}  // namespace turan
