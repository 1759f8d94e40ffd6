#pragma once

#include <vector>

#include "threshold_spectra/brouwer.hpp"
#include "threshold_spectra/graph.hpp"
#include "threshold_spectra/interlace.hpp"
#include "threshold_spectra/json_io.hpp"
#include "threshold_spectra/spectra.hpp"

namespace threshold_spectra {

struct AnalysisOptions {
  double tolerance = kCheckTolerance;
  /// Append-one check needs a second spectrum, so it is off by default.
  bool append_one = false;
};

struct GraphSummary {
  std::vector<Block> blocks;
  int n = 0;
  int r = 0;
  int kbar = 0;
  std::vector<int> block_degrees;
  std::vector<int> degrees;
  long long edges = 0;
};

GraphSummary summarize(const ThresholdGraph& g);

/// Everything known about one graph, all derived from the same normalized value.
struct AnalysisBundle {
  GraphSummary graph;
  Spectrum spectrum;
  /// T8, T9, L5, L7 and optionally T11, in that order.
  std::vector<InterlacingReport> reports;
  BrouwerReport brouwer;

  bool pass() const noexcept;
};

AnalysisBundle analyze(const ThresholdGraph& g, const AnalysisOptions& options = {});

void to_json(Json& j, const GraphSummary& s);
void from_json(const Json& j, GraphSummary& s);

void to_json(Json& j, const AnalysisBundle& b);
void from_json(const Json& j, AnalysisBundle& b);

}  // namespace threshold_spectra
