#include "threshold_spectra/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "threshold_spectra/brouwer.hpp"
#include "threshold_spectra/errors.hpp"

namespace threshold_spectra {

namespace {

struct Outcome {
  double min_slack = std::numeric_limits<double>::infinity();
  bool pass = true;
};

/// Accumulates everything a worker learns about one counter range.
struct Partial {
  std::vector<CheckSummary> checks;
  std::uint64_t graphs = 0;
  std::uint64_t failures = 0;
  std::vector<BrouwerRow> rows;
};

bool selected(const std::vector<Check>& checks, Check c) {
  return std::find(checks.begin(), checks.end(), c) != checks.end();
}

Outcome from_report(const InterlacingReport& r) { return {r.min_slack, r.pass}; }

void record(CheckSummary& summary, const Outcome& outcome, int n, std::uint64_t counter,
            const ThresholdGraph& g) {
  ++summary.graphs;
  summary.min_slack = std::min(summary.min_slack, outcome.min_slack);
  if (outcome.pass) return;
  ++summary.failures;
  if (!summary.first_counterexample) summary.first_counterexample = Counterexample{n, counter, to_bit_string(g)};
}

Partial sweep_range(int n, std::uint64_t first, std::uint64_t last, const SweepOptions& options) {
  Partial out;
  for (Check c : options.checks) out.checks.push_back({c, 0, 0, std::numeric_limits<double>::infinity(), {}});
  auto summary_for = [&](Check c) -> CheckSummary& {
    return *std::find_if(out.checks.begin(), out.checks.end(), [c](const CheckSummary& s) { return s.check == c; });
  };
  const double tol = options.tolerance;
  const bool need_spectrum = selected(options.checks, Check::t9) || selected(options.checks, Check::brouwer) ||
                             options.collect_rows;

  for (GraphEnumeration::iterator it{n, first}, end{n, last}; it != end; ++it) {
    const ThresholdGraph g = *it;
    const std::uint64_t counter = it.counter();
    const DegreeProfile degrees = block_degrees(g);
    const Spectrum spectrum = need_spectrum ? full_spectrum(g) : Spectrum{};
    bool graph_failed = false;
    auto note = [&](Check c, const Outcome& o) {
      record(summary_for(c), o, n, counter, g);
      graph_failed |= !o.pass;
    };

    if (selected(options.checks, Check::t8)) note(Check::t8, from_report(check_condensed_interlacing(g, tol)));
    if (selected(options.checks, Check::t9)) {
      note(Check::t9, from_report(check_degree_interlacing(g, spectrum, degrees, tol)));
    }
    if (selected(options.checks, Check::l5) || selected(options.checks, Check::l7)) {
      const ComplementInterlacing ci = check_complement_interlacing(g, tol);
      if (selected(options.checks, Check::l5)) note(Check::l5, from_report(ci.signless));
      if (selected(options.checks, Check::l7)) note(Check::l7, from_report(ci.condensed));
    }
    if (selected(options.checks, Check::t11)) note(Check::t11, from_report(check_append_one(g, tol)));

    if (selected(options.checks, Check::brouwer) || options.collect_rows) {
      const BrouwerReport br = check_brouwer(g, spectrum, degrees, tol);
      const bool bound_ok = br.min_slack >= -tol;
      if (selected(options.checks, Check::brouwer)) note(Check::brouwer, {br.min_slack, bound_ok});
      if (options.collect_rows) {
        out.rows.push_back({n, to_bit_string(g), g.ones(), br.edge_count, br.argmin_k, br.min_slack, bound_ok});
      }
    }
    if (selected(options.checks, Check::lemmas)) {
      const Lemma14Result l14 = check_lemma14(g, degrees);
      const Lemma15Result l15 = check_lemma15(g, degrees);
      Outcome o;
      for (long long s : l15.slacks) o.min_slack = std::min(o.min_slack, static_cast<double>(s));
      o.pass = l14.status != LemmaStatus::fail && l15.pass();
      note(Check::lemmas, o);
    }

    ++out.graphs;
    if (graph_failed) ++out.failures;
  }
  return out;
}

/// Order-insensitive except for the counterexample, which keeps the
/// smallest (n, counter).
void merge_into(CheckSummary& into, const CheckSummary& from) {
  into.graphs += from.graphs;
  into.failures += from.failures;
  into.min_slack = std::min(into.min_slack, from.min_slack);
  if (from.first_counterexample) {
    const Counterexample& c = *from.first_counterexample;
    if (!into.first_counterexample || std::make_pair(c.n, c.counter) < std::make_pair(into.first_counterexample->n,
                                                                                        into.first_counterexample->counter)) {
      into.first_counterexample = c;
    }
  }
}

std::string format_csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, round_output(x));
  return buf;
}

}  // namespace

std::string to_string(Check c) {
  switch (c) {
    case Check::t8:
      return "t8";
    case Check::t9:
      return "t9";
    case Check::l5:
      return "l5";
    case Check::l7:
      return "l7";
    case Check::t11:
      return "t11";
    case Check::brouwer:
      return "brouwer";
    case Check::lemmas:
      break;
  }
  return "lemmas";
}

std::vector<Check> parse_checks(const std::string& text) {
  if (text == "all") return {kAllChecks.begin(), kAllChecks.end()};
  std::vector<Check> out;
  std::stringstream stream(text);
  std::string name;
  while (std::getline(stream, name, ',')) {
    auto it = std::find_if(kAllChecks.begin(), kAllChecks.end(), [&](Check c) { return to_string(c) == name; });
    if (it == kAllChecks.end()) throw InputError("unknown check '" + name + "'");
    if (!selected(out, *it)) out.push_back(*it);
  }
  if (out.empty()) throw InputError("no checks selected");
  // canonical order keeps summaries identical however the list was spelled
  std::sort(out.begin(), out.end());
  return out;
}

SweepSummary run_sweep(const SweepOptions& options) {
  if (options.min_n < 1 || options.max_n < options.min_n) throw InputError("invalid vertex count range");
  if (options.jobs < 1) throw InputError("jobs must be at least 1");
  if (options.checks.empty()) throw InputError("no checks selected");

  SweepSummary summary;
  summary.min_n = options.min_n;
  summary.max_n = options.max_n;
  summary.tolerance = options.tolerance;
  for (Check c : options.checks) summary.checks.push_back({c, 0, 0, std::numeric_limits<double>::infinity(), {}});

  for (int n = options.min_n; n <= options.max_n; ++n) {
    const std::uint64_t total = enumeration_size(n);
    const auto jobs = static_cast<std::uint64_t>(options.jobs);
    const std::uint64_t pieces = std::min(jobs, total);

    std::vector<Partial> partials(static_cast<std::size_t>(pieces));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(pieces));
    auto work = [&](std::uint64_t piece) {
      const std::uint64_t first = total * piece / pieces;
      const std::uint64_t last = total * (piece + 1) / pieces;
      try {
        partials[piece] = sweep_range(n, first, last, options);
      } catch (...) {
        errors[piece] = std::current_exception();
      }
    };
    if (pieces == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(pieces));
      for (std::uint64_t piece = 0; piece < pieces; ++piece) threads.emplace_back(work, piece);
      for (std::thread& t : threads) t.join();
    }
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    VertexCountSummary per_n{n, 0, 0};
    for (Partial& p : partials) {
      per_n.graphs += p.graphs;
      per_n.failures += p.failures;
      for (std::size_t c = 0; c < p.checks.size(); ++c) merge_into(summary.checks[c], p.checks[c]);
      summary.rows.insert(summary.rows.end(), std::make_move_iterator(p.rows.begin()),
                          std::make_move_iterator(p.rows.end()));
    }
    summary.graphs += per_n.graphs;
    summary.failures += per_n.failures;
    summary.per_n.push_back(per_n);
  }
  return summary;
}

void to_json(Json& j, const SweepSummary& s) {
  Json per_n = Json::array();
  for (const VertexCountSummary& v : s.per_n) {
    per_n.push_back(Json{{"n", v.n}, {"graphs", v.graphs}, {"failures", v.failures}});
  }
  Json checks = Json::object();
  for (const CheckSummary& c : s.checks) {
    Json counterexample = nullptr;
    if (c.first_counterexample) {
      counterexample = Json{{"n", c.first_counterexample->n},
                            {"counter", c.first_counterexample->counter},
                            {"sequence", c.first_counterexample->sequence}};
    }
    checks[to_string(c.check)] = Json{{"graphs", c.graphs},
                                      {"failures", c.failures},
                                      {"min_slack", output_number(c.min_slack)},
                                      {"first_counterexample", std::move(counterexample)}};
  }
  j = Json{{"min_n", s.min_n},
           {"max_n", s.max_n},
           {"tolerance", s.tolerance},
           {"graphs", s.graphs},
           {"failures", s.failures},
           {"pass", s.pass()},
           {"per_n", std::move(per_n)},
           {"checks", std::move(checks)}};
}

std::string to_csv(const std::vector<BrouwerRow>& rows) {
  std::string out = "n,sequence,kbar,E,k_min_slack,min_slack,pass\n";
  for (const BrouwerRow& r : rows) {
    out += std::to_string(r.n) + ',' + r.sequence + ',' + std::to_string(r.kbar) + ',' + std::to_string(r.edges) +
           ',' + std::to_string(r.k_min_slack) + ',' + format_csv_number(r.min_slack) + ',' +
           (r.pass ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace threshold_spectra
