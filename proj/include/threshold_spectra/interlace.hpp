#pragma once

#include <limits>
#include <string>
#include <vector>

#include "threshold_spectra/graph.hpp"
#include "threshold_spectra/spectra.hpp"

namespace threshold_spectra {

/// Slack below which a non-strict inequality counts as violated.
inline constexpr double kCheckTolerance = 1e-7;

/// One inequality `lhs <= rhs`; slack = rhs - lhs.
struct ChainLink {
  std::string lhs;
  double lhs_value = 0;
  std::string rhs;
  double rhs_value = 0;
  double slack = 0;
};

enum class TheoremId { T8, T9, L5, L7, T11 };

std::string to_string(TheoremId id);

/// An inequality chain, always written in ascending (<=) direction.
struct InterlacingReport {
  TheoremId theorem = TheoremId::T8;
  /// False for single-vertex graphs, which the statements exclude.
  bool applicable = true;
  std::vector<ChainLink> chain;
  double tolerance = kCheckTolerance;
  /// +inf for an empty chain.
  double min_slack = std::numeric_limits<double>::infinity();
  bool pass = true;

  /// Appends `lhs <= rhs` and updates min_slack and pass.
  void add(std::string lhs, double lhs_value, std::string rhs, double rhs_value);
};

/// Eigenvalues of the condensed matrix against block degrees: zero-block
/// degrees interleave λ_1(C)..λ_z(C), one-block degrees minus one interleave
/// λ_{z+1}(C)..λ_r(C), z the number of zero blocks.
InterlacingReport check_condensed_interlacing(const ThresholdGraph& g, double tol = kCheckTolerance);

/// Full spectrum against the sorted degree sequence, with the additional
/// λ_{n-k̄+q_1} >= d_{n-k̄+q_1} when b_1 = 1 and k̄ > q_1.
InterlacingReport check_degree_interlacing(const ThresholdGraph& g, double tol = kCheckTolerance);
InterlacingReport check_degree_interlacing(const ThresholdGraph& g, const Spectrum& spectrum,
                                           const DegreeProfile& degrees, double tol = kCheckTolerance);

struct ComplementInterlacing {
  /// eig(Q) against n - 2 - eig(Q̄).
  InterlacingReport signless;
  /// eig(C) against n - 2 - eig(C̄).
  InterlacingReport condensed;

  bool pass() const noexcept { return signless.pass && condensed.pass; }
};

ComplementInterlacing check_complement_interlacing(const ThresholdGraph& g, double tol = kCheckTolerance);

/// Rank-one interlacing chain shared by both complement checks:
///   max{ν_1, 0} <= λ_1 <= ν_2 <= λ_2 <= ... <= λ_{m-1} <= ν_m <= min{n-2, λ_m}
/// with ν_i = shift - μ_{m+1-i}. `lambda` and `mu` are ascending.
InterlacingReport complement_chain(TheoremId id, const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu,
                                   double shift, const std::string& matrix, const std::string& complement,
                                   double tol = kCheckTolerance);

/// Spectrum of g against that of g with one dominating vertex appended:
/// 0 <= λ'_1, λ'_i <= λ_i + 1 <= λ'_{i+1} for i = 1..n, and
/// max{n + 1, λ_n + 2} <= λ'_{n+1}.
InterlacingReport check_append_one(const ThresholdGraph& g, double tol = kCheckTolerance);

/// g with a trailing '1' appended to its creation sequence.
ThresholdGraph append_one(const ThresholdGraph& g);

}  // namespace threshold_spectra
