#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "threshold_spectra/graph.hpp"
#include "threshold_spectra/jacobi.hpp"
#include "threshold_spectra/sym_matrix.hpp"

namespace threshold_spectra {

/// Convergence threshold handed to the Jacobi solver by default.
inline constexpr double kEigenTolerance = 1e-12;
/// Pairing tolerance between the block-structured spectrum and a dense solve.
inline constexpr double kMergeTolerance = 1e-8;

/// Where an eigenvalue came from.
struct Provenance {
  enum class Source { direct, condensed, dense };

  Source source = Source::dense;
  /// 1-based block for direct values, 0 otherwise.
  int block = 0;

  static Provenance direct(int block) { return {Source::direct, block}; }
  static Provenance condensed() { return {Source::condensed, 0}; }
  static Provenance dense() { return {Source::dense, 0}; }

  /// "direct:3", "condensed" or "dense".
  std::string to_string() const;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Spectrum {
  /// λ_1 <= ... <= λ_n.
  Eigen::VectorXd values;
  std::vector<Provenance> provenance;
  double tolerance = kMergeTolerance;

  Eigen::Index size() const noexcept { return values.size(); }
  /// 1-based, λ_i.
  double operator[](int i) const { return values(i - 1); }
};

/// A sparse vector: (1-based index, coefficient) pairs in index order.
using SparseVector = std::vector<std::pair<int, double>>;

struct DirectBlock {
  int block = 0;
  /// p_k - b_k.
  int eigenvalue = 0;
  /// q_k - 1 vectors, pairwise orthogonal.
  std::vector<SparseVector> eigenvectors;

  int multiplicity() const noexcept { return static_cast<int>(eigenvectors.size()); }
};

/// One entry per block with at least two vertices.
struct DirectEigenpairs {
  std::vector<DirectBlock> blocks;

  int total_multiplicity() const noexcept;
};

/// Q(G) = D + A. Entries are integers, so any arithmetic Scalar represents
/// them exactly.
template <typename Scalar = double>
SymMatrix<Scalar> assemble_q(const ThresholdGraph& g) {
  const DegreeProfile profile = block_degrees(g);
  const int n = g.vertex_count();
  SymMatrix<Scalar> q(n);
  for (int j = 1; j <= n; ++j) {
    const int block_j = g.block_of(j);
    q.set(j - 1, j - 1, static_cast<Scalar>(profile.block_degrees[static_cast<std::size_t>(block_j - 1)]));
    const Scalar bit = static_cast<Scalar>(g.block(block_j).bit);
    for (int i = 1; i < j; ++i) q.set(i - 1, j - 1, bit);
  }
  return q;
}

/// Condensed r x r matrix: diagonal p_k + b_k (q_k - 1), and b_j sqrt(q_i q_j)
/// above the diagonal (i < j).
template <typename Scalar = double>
SymMatrix<Scalar> assemble_condensed(const ThresholdGraph& g) {
  const DegreeProfile profile = block_degrees(g);
  const int r = g.block_count();
  SymMatrix<Scalar> c(r);
  for (int j = 1; j <= r; ++j) {
    const Block& bj = g.block(j);
    c.set(j - 1, j - 1,
          static_cast<Scalar>(profile.block_degrees[static_cast<std::size_t>(j - 1)] +
                              bj.bit * (bj.count - 1)));
    if (bj.bit == 0) continue;
    for (int i = 1; i < j; ++i) {
      const long long squared = static_cast<long long>(g.block(i).count) * bj.count;
      c.set(i - 1, j - 1, std::sqrt(static_cast<Scalar>(squared)));
    }
  }
  return c;
}

/// Closed-form eigenpairs p_k - b_k, one vector per extra vertex of a block.
DirectEigenpairs direct_eigenpairs(const ThresholdGraph& g);

/// Dense Jacobi solve; every value is tagged dense.
Spectrum eigensolve(const SymMatrix<double>& m, double tol = kEigenTolerance);

/// Direct block eigenvalues merged with the eigenvalues of the condensed
/// matrix. Coincident values are kept as separate entries.
Spectrum full_spectrum(const ThresholdGraph& g);

/// (n - 2) I + q̂ q̂ᵀ - c with q̂ = (sqrt q_1, ..., sqrt q_r) and n = Σ q_k.
SymMatrix<double> condensed_complement(const SymMatrix<double>& c, const std::vector<int>& block_sizes);

/// Block sizes q_1..q_r.
std::vector<int> block_sizes(const ThresholdGraph& g);

/// m v for a sparse v.
Eigen::VectorXd apply(const SymMatrix<double>& m, const SparseVector& v);

}  // namespace threshold_spectra
