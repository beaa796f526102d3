#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "turan/error.hpp"
#include "turan/json_io.hpp"

using namespace turan;

namespace {

void check_round_trip(const json& j) {
  const std::string once = j.dump();
  const std::string twice = json::parse(once).dump();
  CHECK(once == twice);
}

// Every "key: value" line of the human dump, keyed by path.
std::string human_field(const std::string& text, const std::string& path) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind(path + ": ", 0) == 0) return line.substr(path.size() + 2);
  }
  return {};
}

}  // namespace

TEST_CASE("dumped records re-parse to identical bytes") {
  check_round_trip(json(singer(6)));
  check_round_trip(json(certify(bose(7))));
  check_round_trip(json(spectrum(from_difference_set(singer(5)), 21)));
  check_round_trip(json(check_spectrum(from_difference_set(bose(5)), SetKind::Bose, 5, 23)));
  check_round_trip(json(cassels_bound(5, 3)));
  check_round_trip(json(verify_theorem1(6)));
  check_round_trip(json(verify_theorem2(5, 3)));
  check_round_trip(json(reference_values(8)));

  SearchSpec spec;
  spec.n = 3;
  spec.range = 6;
  spec.restarts = 4;
  spec.seed = 11;
  const SearchResult result = minimize(spec);
  check_round_trip(json(result));
  check_round_trip(json(compare_to_construction(result, from_difference_set(singer(3)), "singer")));
}

TEST_CASE("doubles keep full precision") {
  const Spectrum sp = spectrum(from_difference_set(singer(3)), 7);
  const json j = json::parse(json(sp).dump());
  for (std::size_t i = 0; i < 7; ++i) CHECK(j["values"][i].get<double>() == sp.values[static_cast<Eigen::Index>(i)]);
}

TEST_CASE("difference sets and systems read back") {
  const DifferenceSet ds = bose(4);
  const DifferenceSet back = difference_set_from_json(json(ds));
  CHECK(back.residues == ds.residues);
  CHECK(back.modulus == ds.modulus);
  CHECK(back.kind == ds.kind);

  const PowerSumSystem sys = system_from_json(json::parse(R"({"form":"rational","exponents":[0,1,3],"modulus":7})"));
  CHECK(sys.is_rational());
  CHECK(spectrum(sys, 7).values[6] == doctest::Approx(3.0));

  const PowerSumSystem polar = system_from_json(json::parse(R"({"form":"polar","radii":[1,1],"phases":[0,0.5]})"));
  CHECK(polar.n() == 2);
  CHECK(std::abs(power_sum(polar, 1)) < 1e-15);

  const PowerSumSystem again = system_from_json(json(from_difference_set(singer(4))));
  CHECK(spectrum(again, 12).max_value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("malformed systems are rejected") {
  const char* bad[] = {
      R"({"form":"polar","radii":[1]})",
      R"({"form":"polar","radii":[1,1],"phases":[0]})",
      R"({"form":"polar","radii":[-1],"phases":[0]})",
      R"({"form":"rational","exponents":[0,1],"modulus":0})",
      R"({"form":"spherical"})",
      R"([1,2,3])",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    try {
      (void)system_from_json(json::parse(text));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidInput);
    }
  }
}

TEST_CASE("spectrum csv") {
  std::ostringstream os;
  write_spectrum_csv(os, spectrum(turan_tuple(4), 4));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "nu,re,im,abs");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    const double abs = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(abs == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(rows == 4);
}

TEST_CASE("human output carries the json numbers") {
  const json j = verify_theorem1(6);
  std::ostringstream os;
  write_human(os, j);
  const std::string text = os.str();

  CHECK(std::stod(human_field(text, "construction_max")) ==
        doctest::Approx(j["construction_max"].get<double>()).epsilon(1e-11));
  CHECK(std::stoll(human_field(text, "range")) == j["range"].get<std::int64_t>());
  CHECK(human_field(text, "verdict") == j["verdict"].get<std::string>());
  CHECK(human_field(text, "stated_value.exact") == "sqrt(5)");

  std::ostringstream ds;
  write_human(ds, json(singer(3)));
  CHECK(human_field(ds.str(), "residues") == "0 1 3");
}
