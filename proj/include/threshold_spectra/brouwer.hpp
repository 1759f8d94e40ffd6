#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "threshold_spectra/graph.hpp"
#include "threshold_spectra/interlace.hpp"
#include "threshold_spectra/spectra.hpp"

namespace threshold_spectra {

/// m choose 2; zero for m < 2.
constexpr long long choose2(long long m) noexcept { return m < 2 ? 0 : m * (m - 1) / 2; }

/// S_k = λ_n + ... + λ_{n+1-k}, for k = 1..n (index k-1).
std::vector<double> partial_sums(const Spectrum& spectrum);

struct BrouwerTerm {
  int k = 0;
  double partial_sum = 0;
  /// |E| + k(k+1)/2.
  long long bound = 0;
  double slack = 0;
  /// Nearest integer to the slack when within 1e-6 of it.
  std::optional<long long> certified_slack;
};

enum class LemmaStatus { pass, fail, not_applicable };

struct Lemma14Result {
  LemmaStatus status = LemmaStatus::not_applicable;
  /// n - k̄ (1-based index into the degree sequence).
  int index = 0;
  int degree = 0;
  /// k̄ - q_1 b_1.
  int expected = 0;
};

/// Edge-count lower bound slacks |E| - LHS for k = 1..k̄ (index k-1).
struct Lemma15Result {
  std::vector<long long> slacks;

  bool pass() const noexcept;
};

struct BrouwerReport {
  long long edge_count = 0;
  std::vector<BrouwerTerm> terms;
  double tolerance = kCheckTolerance;
  double min_slack = std::numeric_limits<double>::infinity();
  int argmin_k = 0;
  Lemma14Result lemma14;
  Lemma15Result lemma15;
  /// Bound holds for every k and both lemmas hold where applicable.
  bool pass = true;
};

Lemma14Result check_lemma14(const ThresholdGraph& g);
Lemma14Result check_lemma14(const ThresholdGraph& g, const DegreeProfile& degrees);

Lemma15Result check_lemma15(const ThresholdGraph& g);
Lemma15Result check_lemma15(const ThresholdGraph& g, const DegreeProfile& degrees);

/// S_k <= |E| + (k+1 choose 2) for k = 1..n, plus the degree lemmas.
BrouwerReport check_brouwer(const ThresholdGraph& g, double tol = kCheckTolerance);
BrouwerReport check_brouwer(const ThresholdGraph& g, const Spectrum& spectrum, const DegreeProfile& degrees,
                            double tol = kCheckTolerance);

}  // namespace threshold_spectra
