#include "threshold_spectra/interlace.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace threshold_spectra {

namespace {

std::string idx(int i) { return std::to_string(i); }

struct Term {
  std::string label;
  double value;
};

/// Links consecutive terms of a chain given in descending (>=) order.
void add_descending(InterlacingReport& report, const std::vector<Term>& terms) {
  for (std::size_t a = terms.size(); a-- > 1;) {
    report.add(terms[a].label, terms[a].value, terms[a - 1].label, terms[a - 1].value);
  }
}

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T8:
      return "T8";
    case TheoremId::T9:
      return "T9";
    case TheoremId::L5:
      return "L5";
    case TheoremId::L7:
      return "L7";
    case TheoremId::T11:
      break;
  }
  return "T11";
}

void InterlacingReport::add(std::string lhs, double lhs_value, std::string rhs, double rhs_value) {
  const double slack = rhs_value - lhs_value;
  chain.push_back({std::move(lhs), lhs_value, std::move(rhs), rhs_value, slack});
  min_slack = std::min(min_slack, slack);
  pass = min_slack >= -tolerance;
}

InterlacingReport check_condensed_interlacing(const ThresholdGraph& g, double tol) {
  InterlacingReport report;
  report.theorem = TheoremId::T8;
  report.tolerance = tol;
  if (g.vertex_count() < 2) {
    report.applicable = false;
    return report;
  }

  const int r = g.block_count();
  const int z = g.zero_block_count();
  const int b1 = g.block(1).bit;
  const int br = g.block(r).bit;
  if (2 * z != r - br - b1 + 1) {
    throw std::logic_error("zero block count disagrees with (r - b_r - b_1 + 1) / 2");
  }

  const DegreeProfile profile = block_degrees(g);
  const Spectrum gamma = eigensolve(assemble_condensed(g));
  auto p = [&](int k) { return static_cast<double>(profile.block_degrees[static_cast<std::size_t>(k - 1)]); };
  auto lambda = [&](int i) { return Term{"lambda_" + idx(i) + "(C)", gamma[i]}; };

  // zero blocks from last to first have increasing degree
  std::vector<int> zero_blocks;
  std::vector<int> one_blocks;
  for (int k = r; k >= 1; --k) {
    if (g.block(k).bit == 0) zero_blocks.push_back(k);
  }
  for (int k = 1; k <= r; ++k) {
    if (g.block(k).bit == 1) one_blocks.push_back(k);
  }

  report.add("0", 0.0, lambda(1).label, lambda(1).value);

  for (int i = 1; i <= z; ++i) {
    const int k = zero_blocks[static_cast<std::size_t>(i - 1)];
    const Term l = lambda(i);
    report.add(l.label, l.value, "p_" + idx(k), p(k));
    if (i < z) {
      const Term next = lambda(i + 1);
      report.add("p_" + idx(k), p(k), next.label, next.value);
    }
  }

  const int m = r - z;
  for (int i = 1; i <= m; ++i) {
    const int k = one_blocks[static_cast<std::size_t>(i - 1)];
    const Term l = lambda(z + i);
    report.add("p_" + idx(k) + "-1", p(k) - 1.0, l.label, l.value);
    if (i < m) {
      const int next = one_blocks[static_cast<std::size_t>(i)];
      report.add(l.label, l.value, "p_" + idx(next) + "-1", p(next) - 1.0);
    }
  }
  return report;
}

InterlacingReport check_degree_interlacing(const ThresholdGraph& g, double tol) {
  return check_degree_interlacing(g, full_spectrum(g), block_degrees(g), tol);
}

InterlacingReport check_degree_interlacing(const ThresholdGraph& g, const Spectrum& spectrum,
                                           const DegreeProfile& degrees, double tol) {
  InterlacingReport report;
  report.theorem = TheoremId::T9;
  report.tolerance = tol;
  const int n = g.vertex_count();
  if (n < 2) {
    report.applicable = false;
    return report;
  }

  const int kbar = g.ones();
  auto d = [&](int i) { return static_cast<double>(degrees.degree_sequence[static_cast<std::size_t>(i - 1)]); };
  auto lambda = [&](int i) { return Term{"lambda_" + idx(i), spectrum[i]}; };

  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(2 * n + 1));
  for (int i = n; i >= n + 1 - kbar; --i) {
    terms.push_back(lambda(i));
    terms.push_back({"d_" + idx(i) + "-1", d(i) - 1.0});
  }
  for (int i = n - kbar; i >= 1; --i) {
    terms.push_back({"d_" + idx(i), d(i)});
    terms.push_back(lambda(i));
  }
  terms.push_back({"0", 0.0});
  add_descending(report, terms);

  const Block& first = g.block(1);
  if (first.bit == 1 && kbar > first.count) {
    const int i = n - kbar + first.count;
    report.add("d_" + idx(i), d(i), lambda(i).label, lambda(i).value);
  }
  return report;
}

InterlacingReport complement_chain(TheoremId id, const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu,
                                   double shift, const std::string& matrix, const std::string& complement,
                                   double tol) {
  InterlacingReport report;
  report.theorem = id;
  report.tolerance = tol;
  const auto m = static_cast<int>(lambda.size());
  if (mu.size() != lambda.size()) throw std::invalid_argument("spectra of different sizes");
  if (m == 0) return report;

  const std::string s = shift == static_cast<double>(static_cast<long long>(shift))
                            ? std::to_string(static_cast<long long>(shift))
                            : std::to_string(shift);
  auto lam = [&](int i) { return Term{"lambda_" + idx(i) + "(" + matrix + ")", lambda(i - 1)}; };
  // ν_i = shift - μ_{m+1-i}
  auto nu = [&](int i) {
    return Term{s + "-lambda_" + idx(m + 1 - i) + "(" + complement + ")", shift - mu(m - i)};
  };

  const Term nu1 = nu(1);
  report.add("max{" + nu1.label + ",0}", std::max(nu1.value, 0.0), lam(1).label, lam(1).value);
  for (int i = 1; i < m; ++i) {
    report.add(lam(i).label, lam(i).value, nu(i + 1).label, nu(i + 1).value);
    if (i + 1 < m) report.add(nu(i + 1).label, nu(i + 1).value, lam(i + 1).label, lam(i + 1).value);
  }
  const Term last = nu(m);
  report.add(last.label, last.value, "min{" + s + "," + lam(m).label + "}", std::min(shift, lambda(m - 1)));
  return report;
}

ComplementInterlacing check_complement_interlacing(const ThresholdGraph& g, double tol) {
  ComplementInterlacing out;
  out.signless.theorem = TheoremId::L5;
  out.condensed.theorem = TheoremId::L7;
  out.signless.tolerance = out.condensed.tolerance = tol;
  const int n = g.vertex_count();
  if (n < 2) {
    out.signless.applicable = out.condensed.applicable = false;
    return out;
  }
  const double shift = n - 2.0;
  const ThresholdGraph gbar = complement(g);

  const Spectrum q = eigensolve(assemble_q(g));
  const Spectrum qbar = eigensolve(assemble_q(gbar));
  out.signless = complement_chain(TheoremId::L5, q.values, qbar.values, shift, "Q", "Qbar", tol);

  const SymMatrix<double> c = assemble_condensed(g);
  const Spectrum cs = eigensolve(c);
  const Spectrum cbar = eigensolve(condensed_complement(c, block_sizes(g)));
  out.condensed = complement_chain(TheoremId::L7, cs.values, cbar.values, shift, "C", "Cbar", tol);
  return out;
}

ThresholdGraph append_one(const ThresholdGraph& g) {
  RawSequence seq = expand(g);
  seq.bits.push_back(1);
  return normalize(seq);
}

InterlacingReport check_append_one(const ThresholdGraph& g, double tol) {
  InterlacingReport report;
  report.theorem = TheoremId::T11;
  report.tolerance = tol;
  const int n = g.vertex_count();
  if (n < 2) {
    report.applicable = false;
    return report;
  }

  const Spectrum before = full_spectrum(g);
  const Spectrum after = full_spectrum(append_one(g));
  auto grown = [&](int i) { return Term{"lambda'_" + idx(i), after[i]}; };
  auto shifted = [&](int i) { return Term{"lambda_" + idx(i) + "+1", before[i] + 1.0}; };

  report.add("0", 0.0, grown(1).label, grown(1).value);
  for (int i = 1; i <= n; ++i) {
    report.add(grown(i).label, grown(i).value, shifted(i).label, shifted(i).value);
    report.add(shifted(i).label, shifted(i).value, grown(i + 1).label, grown(i + 1).value);
  }
  const double floor_value = std::max(n + 1.0, before[n] + 2.0);
  report.add("max{" + idx(n + 1) + ",lambda_" + idx(n) + "+2}", floor_value, grown(n + 1).label,
             grown(n + 1).value);
  return report;
}

}  // namespace threshold_spectra
