// sortbench: run, sweep, fit and verify the mergesort implementations.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource (allocation) failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipmsort/bench.hpp"
#include "ipmsort/fit.hpp"
#include "ipmsort/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunOptions {
  std::string algo = "inplace";
  std::size_t n = 0;
  std::string dist = "uniform";
  std::size_t period = 2;
  std::size_t universe = 16;
  std::uint64_t seed = 1;
  std::size_t reps = 1;
  bool count = false;
  bool attribute_phases = false;
  bool fixed_seed = false;
  std::string format = "csv";
  std::string out;
};

struct SweepOptions {
  std::size_t n_min = 100;
  std::size_t n_max = 10'000'000;
  std::size_t steps = 6;
};

struct FitOptions {
  std::string input;
  std::string column = "comparisons";
  std::string model = "nlogn";
  std::string algo;
};

const std::map<std::string, std::string> kAlgoNames{
    {"inplace", "inplace"}, {"buffered", "buffered"}, {"system", "system"}};
const std::map<std::string, std::string> kDistNames{{"uniform", "uniform"},
                                                    {"sorted", "sorted"},
                                                    {"reversed", "reversed"},
                                                    {"sawtooth", "sawtooth"},
                                                    {"fewdistinct", "fewdistinct"}};

void add_common_flags(CLI::App* cmd, RunOptions& o, bool with_n) {
  cmd->add_option("--algo", o.algo, "Sorting algorithm")
      ->transform(CLI::CheckedTransformer(kAlgoNames));
  if (with_n) cmd->add_option("--n", o.n, "Number of elements")->required();
  cmd->add_option("--dist", o.dist, "Input distribution")
      ->transform(CLI::CheckedTransformer(kDistNames));
  cmd->add_option("--period", o.period, "Sawtooth period")->check(CLI::Range(std::size_t{2}, SIZE_MAX));
  cmd->add_option("--universe", o.universe, "Few-distinct universe size")
      ->check(CLI::Range(std::size_t{1}, SIZE_MAX));
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--reps", o.reps, "Repetitions per size")->check(CLI::Range(std::size_t{1}, SIZE_MAX));
  cmd->add_flag("--count", o.count, "Count comparisons and moves");
  cmd->add_flag("--attribute-phases", o.attribute_phases,
                "Split in-place time into co-ranking and rotation");
  cmd->add_flag("--fixed-seed", o.fixed_seed, "Use the same seed for every rep");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Write the report to FILE instead of stdout");
}

ipmsort::BenchConfig to_config(const RunOptions& o, std::size_t n) {
  ipmsort::BenchConfig c;
  c.algorithm = *ipmsort::parse_algorithm(o.algo);
  c.n = n;
  switch (*ipmsort::parse_distribution_kind(o.dist)) {
    case ipmsort::Distribution::Kind::UniformRandom: c.dist = ipmsort::Distribution::uniform(); break;
    case ipmsort::Distribution::Kind::Presorted: c.dist = ipmsort::Distribution::presorted(); break;
    case ipmsort::Distribution::Kind::Reversed: c.dist = ipmsort::Distribution::reversed(); break;
    case ipmsort::Distribution::Kind::Sawtooth: c.dist = ipmsort::Distribution::sawtooth(o.period); break;
    case ipmsort::Distribution::Kind::FewDistinct:
      c.dist = ipmsort::Distribution::few_distinct(o.universe);
      break;
  }
  c.seed = o.seed;
  c.reps = o.reps;
  c.count_mode = o.count;
  c.attribute_phases = o.attribute_phases;
  c.fixed_seed = o.fixed_seed;
  return c;
}

void write_report(const RunOptions& o, const std::vector<ipmsort::BenchRecord>& records) {
  const auto format = *ipmsort::parse_report_format(o.format);
  if (o.out.empty()) {
    ipmsort::emit_report(std::cout, records, format);
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw std::runtime_error("cannot open " + o.out + " for writing");
  ipmsort::emit_report(file, records, format);
}

int run_configs(const RunOptions& o, const std::vector<std::size_t>& sizes) {
  std::vector<ipmsort::BenchRecord> all;
  for (const auto n : sizes) {
    try {
      auto records = ipmsort::run_benchmark(to_config(o, n));
      all.insert(all.end(), records.begin(), records.end());
    } catch (const ipmsort::BenchFailure& failure) {
      all.insert(all.end(), failure.records().begin(), failure.records().end());
      write_report(o, all);
      std::cerr << "sortbench: " << failure.what() << '\n';
      return failure.kind() == ipmsort::BenchFailure::Kind::Resource ? kExitResource
                                                                      : kExitVerification;
    }
  }
  write_report(o, all);
  return kExitOk;
}

int run_fit(const FitOptions& o) {
  std::ifstream file(o.input);
  if (!file) {
    std::cerr << "sortbench: cannot read " << o.input << '\n';
    return kExitUsage;
  }
  const std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  const auto records = ipmsort::parse_report(text);
  const auto points = ipmsort::fit_points(records, *ipmsort::parse_fit_column(o.column), o.algo);
  const auto fit = ipmsort::fit_constant(points, *ipmsort::parse_model(o.model));
  std::cout << "model=" << ipmsort::model_name(fit.model) << " column=" << o.column
            << " points=" << fit.points << " c=" << fit.c << " residual=" << fit.residual << '\n';
  return kExitOk;
}

int run_verify(const RunOptions& o) {
  auto config = to_config(o, o.n);
  config.tagged = true;
  config.reps = 1;
  try {
    ipmsort::run_benchmark(config);
  } catch (const ipmsort::BenchFailure& failure) {
    std::cerr << "sortbench: " << failure.what() << '\n';
    return failure.kind() == ipmsort::BenchFailure::Kind::Resource ? kExitResource
                                                                    : kExitVerification;
  }
  std::cout << "ok: " << o.algo << " n=" << o.n << " dist=" << ipmsort::distribution_label(config.dist)
            << " seed=" << o.seed << " sorted, stable, permutation\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark and verify stable mergesorts"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Sort one input size and report measurements");
  add_common_flags(run, run_opts, true);

  RunOptions sweep_opts;
  SweepOptions ladder;
  auto* sweep = app.add_subcommand("sweep", "Run a geometric ladder of input sizes");
  add_common_flags(sweep, sweep_opts, false);
  sweep->add_option("--n-min", ladder.n_min, "Smallest size")->check(CLI::Range(std::size_t{1}, SIZE_MAX));
  sweep->add_option("--n-max", ladder.n_max, "Largest size");
  sweep->add_option("--steps", ladder.steps, "Number of sizes")->check(CLI::Range(std::size_t{1}, SIZE_MAX));

  FitOptions fit_opts;
  auto* fit = app.add_subcommand("fit", "Fit y = c * model(n) to a report");
  fit->add_option("--input", fit_opts.input, "CSV or JSON report")->required();
  fit->add_option("--column", fit_opts.column, "Measured column")
      ->check(CLI::IsMember({"comparisons", "seconds"}));
  fit->add_option("--model", fit_opts.model, "Complexity model")->check(CLI::IsMember({"nlogn", "nlog2n"}));
  fit->add_option("--algo", fit_opts.algo, "Only use rows of this algorithm");

  RunOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Exit 0 iff the sort is sorted, stable and a permutation");
  add_common_flags(verify, verify_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return run_configs(run_opts, {run_opts.n});
    if (*sweep) {
      if (ladder.n_max < ladder.n_min) {
        std::cerr << "sortbench: --n-max must be >= --n-min\n";
        return kExitUsage;
      }
      return run_configs(sweep_opts, ipmsort::geometric_ladder(ladder.n_min, ladder.n_max, ladder.steps));
    }
    if (*fit) return run_fit(fit_opts);
    if (*verify) return run_verify(verify_opts);
  } catch (const std::bad_alloc& e) {
    std::cerr << "sortbench: out of memory\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sortbench: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "sortbench: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
