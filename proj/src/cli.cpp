#include "threshold_spectra/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "threshold_spectra/analysis.hpp"
#include "threshold_spectra/errors.hpp"
#include "threshold_spectra/graph.hpp"
#include "threshold_spectra/json_io.hpp"
#include "threshold_spectra/sweep.hpp"

namespace threshold_spectra {

namespace {

// Raising the cap beyond this would overflow the enumeration counter long
// before any run could finish.
constexpr int kHardSweepCap = 40;

int sweep_cap() {
  const char* value = std::getenv(kSweepCapVariable);
  if (value == nullptr || *value == '\0') return kDefaultSweepCap;
  int cap = 0;
  const char* last = value + std::char_traits<char>::length(value);
  auto [ptr, ec] = std::from_chars(value, last, cap);
  if (ec != std::errc{} || ptr != last || cap < 2 || cap > kHardSweepCap) {
    throw InputError(std::string(kSweepCapVariable) + " must be an integer in [2, " +
                     std::to_string(kHardSweepCap) + "]");
  }
  return cap;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, round_output(x));
  return buf;
}

enum class Format { json, csv, text };

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold graph signless Laplacian spectra and interlacing checks", "threshold-spectra"};
  app.require_subcommand(1);

  std::string sequence;
  double tol = kCheckTolerance;
  bool want_json = false;
  bool want_csv = false;
  bool with_t11 = false;
  bool dense = false;
  int max_n = 2;
  int jobs = 1;
  std::string checks = "all";

  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "Slack tolerance for inequality checks")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Spectrum, interlacing chains and Brouwer bound of one graph");
  analyze->add_option("sequence", sequence, "Creation sequence, e.g. 001101010111 or 0^2,1^2,0,1,0,1,0,1^3")
      ->required();
  add_tol(analyze);
  analyze->add_flag("--t11", with_t11, "Also check growth under appending a dominating vertex");
  analyze->add_flag("--json", want_json, "JSON output (default)");

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive sweep over all threshold graphs up to --max-n");
  verify->add_option("--max-n", max_n, "Largest vertex count (at least 2)")->capture_default_str();
  verify->add_option("--checks", checks, "Comma list of t8,t9,l5,l7,t11,brouwer,lemmas or 'all'")
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_tol(verify);
  verify->add_flag("--json", want_json, "JSON summary (default)");
  verify->add_flag("--csv", want_csv, "Per-graph Brouwer rows as CSV");

  CLI::App* ferrers_cmd = app.add_subcommand("ferrers", "Ferrers diagram of the degree sequence");
  ferrers_cmd->add_option("sequence", sequence, "Creation sequence")->required();

  CLI::App* complement_cmd = app.add_subcommand("complement", "Creation sequence of the complement graph");
  complement_cmd->add_option("sequence", sequence, "Creation sequence")->required();
  complement_cmd->add_flag("--json", want_json, "Graph summary as JSON");

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Signless Laplacian spectrum");
  spectrum_cmd->add_option("sequence", sequence, "Creation sequence")->required();
  spectrum_cmd->add_flag("--dense", dense, "Solve the full matrix instead of using block structure");
  spectrum_cmd->add_flag("--json", want_json, "JSON output (default)");
  spectrum_cmd->add_flag("--csv", want_csv, "index,value,provenance rows");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("threshold-spectra");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (want_json && want_csv) {
    err << "error: --json and --csv are mutually exclusive\n";
    return kExitInputError;
  }
  const Format format = want_csv ? Format::csv : Format::json;

  try {
    if (analyze->parsed()) {
      const ThresholdGraph g = normalize(parse_sequence(sequence));
      const AnalysisBundle bundle = threshold_spectra::analyze(g, {tol, with_t11});
      out << dump(Json(bundle));
      return bundle.pass() ? kExitOk : kExitCheckFailed;
    }

    if (verify->parsed()) {
      const int cap = sweep_cap();
      if (max_n < 2 || max_n > cap) {
        err << "error: --max-n must lie in [2, " << cap << "]; set " << kSweepCapVariable
            << " to raise the cap\n";
        return kExitInputError;
      }
      SweepOptions options;
      options.max_n = max_n;
      options.checks = parse_checks(checks);
      options.jobs = jobs;
      options.tolerance = tol;
      options.collect_rows = format == Format::csv;
      const SweepSummary summary = run_sweep(options);
      if (format == Format::csv) {
        out << to_csv(summary.rows);
      } else {
        out << dump(Json(summary));
      }
      return summary.pass() ? kExitOk : kExitCheckFailed;
    }

    if (ferrers_cmd->parsed()) {
      out << ferrers(normalize(parse_sequence(sequence)));
      return kExitOk;
    }

    if (complement_cmd->parsed()) {
      const ThresholdGraph gbar = complement(normalize(parse_sequence(sequence)));
      if (want_json) {
        out << dump(Json(summarize(gbar)));
      } else {
        out << to_bit_string(gbar) << '\n';
      }
      return kExitOk;
    }

    if (spectrum_cmd->parsed()) {
      const ThresholdGraph g = normalize(parse_sequence(sequence));
      const Spectrum s = dense ? eigensolve(assemble_q(g)) : full_spectrum(g);
      if (format == Format::csv) {
        out << "index,value,provenance\n";
        for (Eigen::Index i = 0; i < s.size(); ++i) {
          out << (i + 1) << ',' << format_number(s.values(i)) << ','
              << s.provenance[static_cast<std::size_t>(i)].to_string() << '\n';
        }
      } else {
        out << dump(Json(s));
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << " (residual " << format_number(e.residual()) << ")\n";
    return kExitNumericalError;
  }
  return kExitInputError;
}

}  // namespace threshold_spectra
