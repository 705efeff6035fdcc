// abelruns: stream maximal abelian-periodic fragments of a word.
//
// Subcommands:
//   run      online detection for a fixed period vector (--period) or for
//            all periods of a fixed norm (--norm)
//   run-all  offline computation of every abelian run
//
// Input is a raw byte sequence from a file or stdin; one trailing newline is
// stripped. Records stream to stdout as TSV (or JSON lines) with columns
// start, head, tail, end, period, anchor, cores, norm.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "abelruns/all_runs.hpp"
#include "abelruns/core.hpp"
#include "abelruns/fixed_norm.hpp"
#include "abelruns/fixed_period.hpp"
#include "abelruns/oracle.hpp"

namespace {

constexpr std::size_t kOracleInputLimit = 4096;

struct OutputOptions {
  std::string format = "tsv";
  bool header = false;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("cannot open input file '" + path + "'");
    }
    buffer << file.rdbuf();
  }
  std::string text = std::move(buffer).str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

void print_header(const OutputOptions& out) {
  if (out.format == "tsv" && out.header) {
    std::cout << "start\thead\ttail\tend\tperiod\tanchor\tcores\tnorm\n";
  }
}

void print_record(const abelruns::Run& run, const OutputOptions& out) {
  if (out.format == "tsv") {
    std::cout << run.start << '\t' << run.head << '\t' << run.tail << '\t'
              << run.end << '\t' << run.period.to_string() << '\t'
              << run.anchor() << '\t' << run.cores() << '\t'
              << run.period.norm() << '\n';
  } else {
    nlohmann::ordered_json record{
        {"start", run.start},   {"head", run.head},
        {"tail", run.tail},     {"end", run.end},
        {"period", run.period.to_string()},
        {"anchor", run.anchor()}, {"cores", run.cores()},
        {"norm", run.period.norm()}};
    std::cout << record.dump() << '\n';
  }
}

std::string render_trace(std::size_t step, bool initial,
                         const abelruns::TraceSnapshot& snap) {
  std::string line;
  if (!initial) line = "i=" + std::to_string(step) + " ";
  line += "k=" + std::to_string(snap.cursor) + " B=[";
  for (std::size_t i = 0; i < snap.suffix_start.size(); ++i) {
    if (i > 0) line += ",";
    line += snap.suffix_start[i] == abelruns::Scanner::kNoSuffix
                ? "inf"
                : std::to_string(snap.suffix_start[i]);
  }
  line += "] L=(";
  for (std::size_t i = 0; i < snap.anchor_order.size(); ++i) {
    if (i > 0) line += ",";
    line += std::to_string(snap.anchor_order[i]);
  }
  return line + ")";
}

abelruns::ScanMode parse_scan_mode(const std::string& mode) {
  if (mode == "anchored") return abelruns::ScanMode::anchored;
  if (mode == "abelian") return abelruns::ScanMode::abelian;
  throw std::invalid_argument("unknown mode '" + mode +
                              "' (expected anchored or abelian)");
}

void require_oracle_scale(const std::string& input) {
  if (input.size() > kOracleInputLimit) {
    throw std::invalid_argument(
        "the oracle engine is meant for small inputs (max " +
        std::to_string(kOracleInputLimit) + " bytes, got " +
        std::to_string(input.size()) + ")");
  }
}

struct RunCommand {
  std::string input_path = "-";
  std::string period_text;
  std::size_t norm = 0;
  std::string mode = "abelian";
  std::string alphabet_text;
  std::string engine = "main";
  OutputOptions out;
  bool trace = false;
  bool sparse = false;

  int execute() const {
    const std::string input = read_input(input_path);
    print_header(out);
    if (!period_text.empty()) {
      run_fixed_period(input);
    } else {
      run_fixed_norm(input);
    }
    return 0;
  }

  void run_fixed_period(const std::string& input) const {
    auto period = abelruns::ParikhVector::parse(period_text);
    if (period.norm() == 0) {
      throw std::invalid_argument("period norm must be at least 1");
    }
    abelruns::Alphabet alphabet;
    if (!alphabet_text.empty()) {
      alphabet = abelruns::Alphabet::from_symbols(alphabet_text);
      if (alphabet.size() != period.dimension()) {
        throw std::invalid_argument(
            "alphabet size " + std::to_string(alphabet.size()) +
            " does not match period dimension " +
            std::to_string(period.dimension()));
      }
    } else {
      alphabet = abelruns::alphabet_with_dimension(input, period.dimension());
    }
    const auto scan_mode = parse_scan_mode(mode);
    if (engine == "oracle") {
      require_oracle_scale(input);
      auto runs = scan_mode == abelruns::ScanMode::anchored
                      ? abelruns::oracle::anchored_runs(input, period, alphabet)
                      : abelruns::oracle::abelian_runs(input, period, alphabet);
      for (const auto& run : runs) print_record(run, out);
      return;
    }
    abelruns::Scanner scanner(period, alphabet, scan_mode,
                              abelruns::ScannerOptions{sparse});
    if (trace) std::cerr << render_trace(0, true, scanner.trace()) << '\n';
    for (std::size_t i = 0; i < input.size(); ++i) {
      auto runs = scanner.push(static_cast<unsigned char>(input[i]));
      if (trace) std::cerr << render_trace(i, false, scanner.trace()) << '\n';
      for (const auto& run : runs) print_record(run, out);
    }
    auto runs = scanner.finish();
    if (trace) {
      std::cerr << render_trace(input.size(), false, scanner.trace()) << '\n';
    }
    for (const auto& run : runs) print_record(run, out);
  }

  void run_fixed_norm(const std::string& input) const {
    if (norm == 0) {
      throw std::invalid_argument("period norm must be at least 1");
    }
    abelruns::Alphabet alphabet =
        alphabet_text.empty() ? abelruns::Alphabet::from_word(input)
                              : abelruns::Alphabet::from_symbols(alphabet_text);
    const auto scan_mode = parse_scan_mode(mode);
    if (engine == "oracle") {
      require_oracle_scale(input);
      auto runs =
          scan_mode == abelruns::ScanMode::anchored
              ? abelruns::oracle::anchored_runs_norm(input, norm, alphabet)
              : abelruns::oracle::abelian_runs_norm(input, norm, alphabet);
      for (const auto& run : runs) print_record(run, out);
      return;
    }
    abelruns::NormScanner scanner(norm, alphabet, scan_mode,
                                  abelruns::NormScannerOptions{sparse});
    for (char ch : input) {
      for (const auto& run : scanner.push(static_cast<unsigned char>(ch))) {
        print_record(run, out);
      }
    }
    for (const auto& run : scanner.finish()) print_record(run, out);
  }
};

struct RunAllCommand {
  std::string input_path = "-";
  std::string mode = "randomized";
  std::string alphabet_text;
  std::string engine = "main";
  OutputOptions out;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool parallel = false;
  bool debug_anchored = false;

  int execute() const {
    const std::string input = read_input(input_path);
    abelruns::Alphabet alphabet =
        alphabet_text.empty() ? abelruns::Alphabet::from_word(input)
                              : abelruns::Alphabet::from_symbols(alphabet_text);
    abelruns::AllRunsOptions options;
    if (mode == "deterministic") {
      options.mode = abelruns::NamingMode::deterministic;
    } else if (mode == "randomized") {
      options.mode = abelruns::NamingMode::randomized;
    } else {
      throw std::invalid_argument(
          "unknown mode '" + mode + "' (expected randomized or deterministic)");
    }
    if (seed_given) options.seed = seed;
    options.parallel = parallel;

    print_header(out);
    if (engine == "oracle") {
      require_oracle_scale(input);
      for (const auto& run : abelruns::oracle::all_runs(input, alphabet)) {
        print_record(run, out);
      }
      return 0;
    }
    if (debug_anchored) {
      for (const auto& rec :
           abelruns::all_anchored_runs(input, alphabet, options)) {
        print_record(rec.run, out);
      }
      return 0;
    }
    for (const auto& run : abelruns::all_abelian_runs(input, alphabet, options)) {
      print_record(run, out);
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Detection of abelian runs: maximal fragments of a word having a given "
      "abelian period, a period of a given norm, or any abelian period.\n"
      "Without --alphabet, letters are indexed by first occurrence in the "
      "input; period vectors on the command line and in the output use that "
      "order."};
  app.require_subcommand(1);

  RunCommand run;
  auto* run_cmd = app.add_subcommand(
      "run", "Stream runs for a fixed period (--period) or norm (--norm)");
  run_cmd->add_option("input", run.input_path,
                      "Input file, or - for stdin (default)");
  auto* period_opt = run_cmd->add_option(
      "--period", run.period_text,
      "Period vector as comma-separated counts, e.g. 2,2");
  auto* norm_opt =
      run_cmd->add_option("--norm", run.norm, "Period norm, e.g. 4");
  period_opt->excludes(norm_opt);
  run_cmd->add_option("--mode", run.mode, "anchored or abelian (default)")
      ->check(CLI::IsMember({"anchored", "abelian"}));
  run_cmd->add_option("--alphabet", run.alphabet_text,
                      "Ordered alphabet declaration, e.g. ab");
  run_cmd->add_option("--format", run.out.format, "tsv (default) or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  run_cmd->add_option("--engine", run.engine,
                      "main (default) or oracle (brute force, small inputs)")
      ->check(CLI::IsMember({"main", "oracle"}));
  run_cmd->add_flag("--trace", run.trace,
                    "Dump per-step scanner state to stderr (--period only)");
  run_cmd->add_flag("--header", run.out.header, "Emit a TSV header line");
  run_cmd->add_flag("--sparse", run.sparse,
                    "Hash-table window counters (O(p) space)");

  RunAllCommand all;
  auto* all_cmd =
      app.add_subcommand("run-all", "Compute all abelian runs (offline)");
  all_cmd->add_option("input", all.input_path,
                      "Input file, or - for stdin (default)");
  all_cmd->add_option("--mode", all.mode,
                      "randomized (default) or deterministic naming")
      ->check(CLI::IsMember({"randomized", "deterministic"}));
  all_cmd->add_option("--seed", all.seed, "Seed for randomized naming")
      ->trigger_on_parse();
  all_cmd->add_option("--alphabet", all.alphabet_text,
                      "Ordered alphabet declaration, e.g. ab");
  all_cmd->add_option("--format", all.out.format, "tsv (default) or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  all_cmd->add_option("--engine", all.engine,
                      "main (default) or oracle (brute force, small inputs)")
      ->check(CLI::IsMember({"main", "oracle"}));
  all_cmd->add_flag("--header", all.out.header, "Emit a TSV header line");
  all_cmd->add_flag("--parallel", all.parallel,
                    "Per-length parallelism in the square scan");
  all_cmd->add_flag("--debug-anchored", all.debug_anchored,
                    "Emit the intermediate anchored-run list instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run_cmd->parsed()) {
      if (period_opt->count() == 0 && norm_opt->count() == 0) {
        std::cerr << "error: one of --period or --norm is required\n";
        return 2;
      }
      if (run.trace && run.period_text.empty()) {
        std::cerr << "error: --trace is only available with --period\n";
        return 2;
      }
      if (run.trace && run.engine == "oracle") {
        std::cerr << "error: --trace is only available with the main engine\n";
        return 2;
      }
      return run.execute();
    }
    all.seed_given = all_cmd->count("--seed") > 0;
    return all.execute();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
