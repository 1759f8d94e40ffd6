#include "threshold_spectra/analysis.hpp"

namespace threshold_spectra {

GraphSummary summarize(const ThresholdGraph& g) {
  const DegreeProfile profile = block_degrees(g);
  GraphSummary s;
  s.blocks = g.blocks();
  s.n = g.vertex_count();
  s.r = g.block_count();
  s.kbar = g.ones();
  s.block_degrees = profile.block_degrees;
  s.degrees = profile.degree_sequence;
  s.edges = profile.edge_count;
  return s;
}

bool AnalysisBundle::pass() const noexcept {
  for (const InterlacingReport& r : reports) {
    if (!r.pass) return false;
  }
  return brouwer.pass;
}

AnalysisBundle analyze(const ThresholdGraph& g, const AnalysisOptions& options) {
  AnalysisBundle bundle;
  bundle.graph = summarize(g);
  bundle.spectrum = full_spectrum(g);
  const DegreeProfile degrees = block_degrees(g);

  bundle.reports.push_back(check_condensed_interlacing(g, options.tolerance));
  bundle.reports.push_back(check_degree_interlacing(g, bundle.spectrum, degrees, options.tolerance));
  ComplementInterlacing complement = check_complement_interlacing(g, options.tolerance);
  bundle.reports.push_back(std::move(complement.signless));
  bundle.reports.push_back(std::move(complement.condensed));
  if (options.append_one) bundle.reports.push_back(check_append_one(g, options.tolerance));

  bundle.brouwer = check_brouwer(g, bundle.spectrum, degrees, options.tolerance);
  return bundle;
}

void to_json(Json& j, const GraphSummary& s) {
  Json blocks = Json::array();
  std::string bits;
  for (const Block& b : s.blocks) {
    blocks.push_back(Json::array({b.bit, b.count}));
    bits.append(static_cast<std::size_t>(b.count), b.bit ? '1' : '0');
  }
  j = Json{{"sequence", bits},     {"blocks", std::move(blocks)}, {"n", s.n},
           {"r", s.r},             {"kbar", s.kbar},              {"block_degrees", s.block_degrees},
           {"degrees", s.degrees}, {"edges", s.edges}};
}

void from_json(const Json& j, GraphSummary& s) {
  s.blocks.clear();
  for (const Json& b : j.at("blocks")) s.blocks.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
  s.n = j.at("n").get<int>();
  s.r = j.at("r").get<int>();
  s.kbar = j.at("kbar").get<int>();
  s.block_degrees = j.at("block_degrees").get<std::vector<int>>();
  s.degrees = j.at("degrees").get<std::vector<int>>();
  s.edges = j.at("edges").get<long long>();
}

void to_json(Json& j, const AnalysisBundle& b) {
  j = Json{{"graph", b.graph},
           {"spectrum", b.spectrum},
           {"reports", b.reports},
           {"brouwer", b.brouwer},
           {"pass", b.pass()}};
}

void from_json(const Json& j, AnalysisBundle& b) {
  b.graph = j.at("graph").get<GraphSummary>();
  b.spectrum = j.at("spectrum").get<Spectrum>();
  b.reports = j.at("reports").get<std::vector<InterlacingReport>>();
  b.brouwer = j.at("brouwer").get<BrouwerReport>();
}

}  // namespace threshold_spectra
