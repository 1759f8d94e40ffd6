#include "threshold_spectra/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace threshold_spectra {

std::string Provenance::to_string() const {
  switch (source) {
    case Source::direct:
      return "direct:" + std::to_string(block);
    case Source::condensed:
      return "condensed";
    case Source::dense:
      break;
  }
  return "dense";
}

int DirectEigenpairs::total_multiplicity() const noexcept {
  int total = 0;
  for (const DirectBlock& b : blocks) total += b.multiplicity();
  return total;
}

DirectEigenpairs direct_eigenpairs(const ThresholdGraph& g) {
  const DegreeProfile profile = block_degrees(g);
  DirectEigenpairs pairs;
  for (int k = 1; k <= g.block_count(); ++k) {
    const Block& b = g.block(k);
    if (b.count < 2) continue;
    DirectBlock entry;
    entry.block = k;
    entry.eigenvalue = profile.block_degrees[static_cast<std::size_t>(k - 1)] - b.bit;
    const int offset = g.prefix(k - 1);
    // v_j: 1/j on the first j vertices of the block, -1 on vertex j + 1
    for (int j = 1; j < b.count; ++j) {
      SparseVector v;
      v.reserve(static_cast<std::size_t>(j + 1));
      for (int i = 1; i <= j; ++i) v.emplace_back(offset + i, 1.0 / j);
      v.emplace_back(offset + j + 1, -1.0);
      entry.eigenvectors.push_back(std::move(v));
    }
    pairs.blocks.push_back(std::move(entry));
  }
  return pairs;
}

Spectrum eigensolve(const SymMatrix<double>& m, double tol) {
  JacobiResult<double> solved = jacobi_eigenvalues(m, tol);
  Spectrum spectrum;
  spectrum.values = std::move(solved.eigenvalues);
  spectrum.provenance.assign(static_cast<std::size_t>(spectrum.values.size()), Provenance::dense());
  return spectrum;
}

Spectrum full_spectrum(const ThresholdGraph& g) {
  std::vector<std::pair<double, Provenance>> merged;
  merged.reserve(static_cast<std::size_t>(g.vertex_count()));

  for (const DirectBlock& b : direct_eigenpairs(g).blocks) {
    merged.insert(merged.end(), static_cast<std::size_t>(b.multiplicity()),
                  {static_cast<double>(b.eigenvalue), Provenance::direct(b.block)});
  }
  const Spectrum condensed = eigensolve(assemble_condensed(g));
  for (Eigen::Index i = 0; i < condensed.size(); ++i) {
    merged.emplace_back(condensed.values(i), Provenance::condensed());
  }

  // ties: direct before condensed, direct values by block
  auto rank = [](const Provenance& p) {
    return std::make_tuple(p.source == Provenance::Source::direct ? 0 : 1, p.block);
  };
  std::stable_sort(merged.begin(), merged.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return rank(a.second) < rank(b.second);
  });

  Spectrum spectrum;
  spectrum.values.resize(static_cast<Eigen::Index>(merged.size()));
  spectrum.provenance.reserve(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    spectrum.values(static_cast<Eigen::Index>(i)) = merged[i].first;
    spectrum.provenance.push_back(merged[i].second);
  }
  return spectrum;
}

std::vector<int> block_sizes(const ThresholdGraph& g) {
  std::vector<int> sizes;
  sizes.reserve(g.blocks().size());
  for (const Block& b : g.blocks()) sizes.push_back(b.count);
  return sizes;
}

SymMatrix<double> condensed_complement(const SymMatrix<double>& c, const std::vector<int>& block_sizes) {
  const auto r = static_cast<Eigen::Index>(block_sizes.size());
  if (c.order() != r) {
    throw InputError("condensed matrix has order " + std::to_string(c.order()) + " but " +
                     std::to_string(r) + " block sizes were given");
  }
  Eigen::VectorXd root_sizes(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    const int q = block_sizes[static_cast<std::size_t>(k)];
    if (q < 1) throw InputError("block sizes must be positive");
    root_sizes(k) = std::sqrt(static_cast<double>(q));
  }
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);

  Eigen::MatrixXd out = -c.dense();
  out.diagonal().array() += static_cast<double>(n - 2);
  out.noalias() += root_sizes * root_sizes.transpose();
  // q̂q̂ᵀ has exact integer diagonal q_k; restore it from the integer instead
  // of the rounded square root product
  for (Eigen::Index k = 0; k < r; ++k) {
    out(k, k) = static_cast<double>(n - 2 + block_sizes[static_cast<std::size_t>(k)]) - c(k, k);
  }
  return SymMatrix<double>(out);
}

Eigen::VectorXd apply(const SymMatrix<double>& m, const SparseVector& v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m.order());
  for (const auto& [index, coefficient] : v) out += coefficient * m.dense().col(index - 1);
  return out;
}

}  // namespace threshold_spectra
