#include "threshold_spectra/brouwer.hpp"

#include <cmath>

namespace threshold_spectra {

std::vector<double> partial_sums(const Spectrum& spectrum) {
  const auto n = static_cast<int>(spectrum.size());
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(n));
  double running = 0;
  for (int k = 1; k <= n; ++k) {
    running += spectrum[n + 1 - k];
    sums.push_back(running);
  }
  return sums;
}

bool Lemma15Result::pass() const noexcept {
  for (long long s : slacks) {
    if (s < 0) return false;
  }
  return true;
}

Lemma14Result check_lemma14(const ThresholdGraph& g) { return check_lemma14(g, block_degrees(g)); }

Lemma14Result check_lemma14(const ThresholdGraph& g, const DegreeProfile& degrees) {
  Lemma14Result result;
  const int n = g.vertex_count();
  const int kbar = g.ones();
  if (kbar < 1 || kbar > n - 1) return result;

  const Block& first = g.block(1);
  result.index = n - kbar;
  result.degree = degrees.degree_sequence[static_cast<std::size_t>(result.index - 1)];
  result.expected = kbar - first.count * first.bit;
  result.status = result.degree == result.expected ? LemmaStatus::pass : LemmaStatus::fail;
  return result;
}

Lemma15Result check_lemma15(const ThresholdGraph& g) { return check_lemma15(g, block_degrees(g)); }

Lemma15Result check_lemma15(const ThresholdGraph& g, const DegreeProfile& degrees) {
  Lemma15Result result;
  const int n = g.vertex_count();
  const long long kbar = g.ones();
  const long long q1 = g.block(1).count;
  const long long b1 = g.block(1).bit;
  long long top_degrees = 0;
  for (long long k = 1; k <= kbar; ++k) {
    top_degrees += degrees.degree_sequence[static_cast<std::size_t>(n - k)];
    const long long lhs = top_degrees - choose2(k) + choose2(kbar - k) + q1 * (kbar - k) * (1 - b1);
    result.slacks.push_back(degrees.edge_count - lhs);
  }
  return result;
}

BrouwerReport check_brouwer(const ThresholdGraph& g, double tol) {
  return check_brouwer(g, full_spectrum(g), block_degrees(g), tol);
}

BrouwerReport check_brouwer(const ThresholdGraph& g, const Spectrum& spectrum, const DegreeProfile& degrees,
                            double tol) {
  BrouwerReport report;
  report.tolerance = tol;
  report.edge_count = degrees.edge_count;

  const std::vector<double> sums = partial_sums(spectrum);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    BrouwerTerm term;
    term.k = static_cast<int>(i) + 1;
    term.partial_sum = sums[i];
    term.bound = degrees.edge_count + choose2(term.k + 1);
    term.slack = static_cast<double>(term.bound) - term.partial_sum;
    const double nearest = std::round(term.slack);
    if (std::abs(term.slack - nearest) < 1e-6) {
      term.certified_slack = static_cast<long long>(std::floor(term.slack + 0.5));
    }
    if (term.slack < report.min_slack) {
      report.min_slack = term.slack;
      report.argmin_k = term.k;
    }
    report.terms.push_back(term);
  }

  report.lemma14 = check_lemma14(g, degrees);
  report.lemma15 = check_lemma15(g, degrees);
  report.pass = report.min_slack >= -tol && report.lemma14.status != LemmaStatus::fail &&
                report.lemma15.pass();
  return report;
}

}  // namespace threshold_spectra
