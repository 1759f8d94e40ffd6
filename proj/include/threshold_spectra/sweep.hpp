#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "threshold_spectra/interlace.hpp"
#include "threshold_spectra/json_io.hpp"

namespace threshold_spectra {

enum class Check { t8, t9, l5, l7, t11, brouwer, lemmas };

inline constexpr std::array<Check, 7> kAllChecks = {Check::t8, Check::t9,      Check::l5,    Check::l7,
                                                    Check::t11, Check::brouwer, Check::lemmas};

std::string to_string(Check c);

/// Comma-separated names, or "all". Throws InputError on unknown names.
std::vector<Check> parse_checks(const std::string& text);

struct SweepOptions {
  int min_n = 2;
  int max_n = 2;
  std::vector<Check> checks{kAllChecks.begin(), kAllChecks.end()};
  int jobs = 1;
  double tolerance = kCheckTolerance;
  /// Keep one Brouwer row per graph for CSV export.
  bool collect_rows = false;
};

struct Counterexample {
  int n = 0;
  std::uint64_t counter = 0;
  std::string sequence;
};

struct CheckSummary {
  Check check = Check::t8;
  std::uint64_t graphs = 0;
  std::uint64_t failures = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::optional<Counterexample> first_counterexample;
};

struct VertexCountSummary {
  int n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t failures = 0;
};

/// One CSV row of a Brouwer sweep.
struct BrouwerRow {
  int n = 0;
  std::string sequence;
  int kbar = 0;
  long long edges = 0;
  int k_min_slack = 0;
  double min_slack = 0;
  bool pass = true;
};

struct SweepSummary {
  int min_n = 0;
  int max_n = 0;
  double tolerance = kCheckTolerance;
  std::uint64_t graphs = 0;
  /// Graphs failing at least one check.
  std::uint64_t failures = 0;
  std::vector<VertexCountSummary> per_n;
  std::vector<CheckSummary> checks;
  /// In enumeration order, only when requested.
  std::vector<BrouwerRow> rows;

  bool pass() const noexcept { return failures == 0; }
};

/// Runs the selected checks on every threshold graph with min_n <= n <= max_n.
/// Each vertex count's counter range is split into `jobs` contiguous pieces
/// handled by independent threads; the result does not depend on `jobs`.
SweepSummary run_sweep(const SweepOptions& options);

void to_json(Json& j, const SweepSummary& s);

/// Header plus one line per row.
std::string to_csv(const std::vector<BrouwerRow>& rows);

}  // namespace threshold_spectra
