#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "threshold_spectra/analysis.hpp"
#include "threshold_spectra/errors.hpp"
#include "threshold_spectra/json_io.hpp"

namespace ts = threshold_spectra;

namespace {

ts::ThresholdGraph graph(std::string_view text) { return ts::normalize(ts::parse_sequence(text)); }

}  // namespace

TEST_CASE("rounding to twelve significant digits") {
  CHECK(ts::round_output(17.833034976518285) == 17.8330349765);
  CHECK(ts::round_output(1.0 / 3.0) == 0.333333333333);
  CHECK(ts::round_output(10.000000000000002) == 10.0);
  CHECK(ts::round_output(-1.23456789012345e-17) == -1.23456789012e-17);
  CHECK_FALSE(std::signbit(ts::round_output(-1e-300 * 1e-300)));
  CHECK(std::isinf(ts::round_output(std::numeric_limits<double>::infinity())));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double once = ts::round_output(dist(rng));
    CHECK(ts::round_output(once) == once);
  }
}

TEST_CASE("numbers print in shortest form") {
  CHECK(ts::output_number(10.000000000000002).dump() == "10.0");
  CHECK(ts::output_number(17.833034976518285).dump() == "17.8330349765");
  CHECK(ts::output_number(std::numeric_limits<double>::infinity()).is_null());
  CHECK(ts::output_number(std::nan("")).is_null());
}

TEST_CASE("provenance and theorem tags") {
  CHECK(ts::parse_provenance("direct:12") == ts::Provenance::direct(12));
  CHECK(ts::parse_provenance("condensed") == ts::Provenance::condensed());
  CHECK(ts::parse_provenance("dense") == ts::Provenance::dense());
  for (const char* bad : {"direct:", "direct:x", "Direct:1", "", "condensed "}) {
    CHECK_THROWS_AS(ts::parse_provenance(bad), ts::InputError);
  }
  for (auto id : {ts::TheoremId::T8, ts::TheoremId::T9, ts::TheoremId::L5, ts::TheoremId::L7, ts::TheoremId::T11}) {
    CHECK(ts::parse_theorem_id(ts::to_string(id)) == id);
  }
  CHECK_THROWS_AS(ts::parse_theorem_id("T10"), ts::InputError);
}

TEST_CASE("spectrum document") {
  const ts::Json j = ts::full_spectrum(graph("0001"));
  CHECK(j.at("n") == 4);
  CHECK(j.at("provenance") == ts::Json({"condensed", "direct:1", "direct:1", "condensed"}));
  CHECK(j.at("values")[1] == 1.0);
  CHECK(j.at("values")[3] == 4.0);

  ts::Json broken = j;
  broken["n"] = 5;
  CHECK_THROWS_AS(broken.get<ts::Spectrum>(), ts::InputError);
}

TEST_CASE("analysis bundle round-trips") {
  ts::AnalysisOptions options;
  options.append_one = true;
  const auto bundle = ts::analyze(graph("001101010111"), options);
  const ts::Json j = bundle;

  CHECK(j.at("graph").at("sequence") == "001101010111");
  CHECK(j.at("graph").at("edges") == 47);
  CHECK(j.at("graph").at("kbar") == 7);
  CHECK(j.at("reports").size() == 5);
  CHECK(j.at("reports")[4].at("theorem") == "T11");
  CHECK(j.at("brouwer").at("theorem") == "T16");
  CHECK(j.at("brouwer").at("lemma14").at("status") == "pass");
  CHECK(j.at("pass") == true);

  // keys keep insertion order
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"graph", "spectrum", "reports", "brouwer", "pass"});

  const auto back = j.get<ts::AnalysisBundle>();
  CHECK(back.graph.blocks == bundle.graph.blocks);
  CHECK(back.graph.degrees == bundle.graph.degrees);
  CHECK(back.spectrum.provenance == bundle.spectrum.provenance);
  CHECK((back.spectrum.values - bundle.spectrum.values).cwiseAbs().maxCoeff() <= 1e-10);
  REQUIRE(back.reports.size() == bundle.reports.size());
  for (std::size_t i = 0; i < back.reports.size(); ++i) {
    CHECK(back.reports[i].theorem == bundle.reports[i].theorem);
    CHECK(back.reports[i].chain.size() == bundle.reports[i].chain.size());
  }
  CHECK(back.brouwer.lemma15.slacks == bundle.brouwer.lemma15.slacks);
  CHECK(back.pass());

  // serialize, parse, serialize again: identical text
  const ts::Json again = back;
  CHECK(ts::dump(again) == ts::dump(j));
}

TEST_CASE("empty chains serialize min_slack as null") {
  const auto bundle = ts::analyze(graph("1"));
  const ts::Json j = bundle;
  for (const auto& report : j.at("reports")) {
    CHECK(report.at("applicable") == false);
    CHECK(report.at("min_slack").is_null());
    CHECK(report.at("chain").empty());
  }
  CHECK(j.at("brouwer").at("lemma14").at("status") == "not_applicable");
  CHECK_FALSE(j.at("brouwer").at("lemma14").contains("index"));

  const auto back = j.get<ts::AnalysisBundle>();
  CHECK(std::isinf(back.reports[0].min_slack));
  CHECK(back.pass());
}

TEST_CASE("dump ends with a newline and is stable") {
  const ts::Json j = ts::analyze(graph("0011"));
  const std::string text = ts::dump(j);
  CHECK(text.back() == '\n');
  CHECK(text.rfind("{\n  \"graph\"", 0) == 0);
  CHECK(ts::dump(ts::Json(ts::analyze(graph("0011")))) == text);
}
