#include "ipmsort/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <new>
#include <utility>

#include "ipmsort/instrumentation.hpp"
#include "ipmsort/ordering.hpp"
#include "ipmsort/sort.hpp"

namespace ipmsort {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 3> kAlgorithms{{
    {Algorithm::InPlace, "inplace"},
    {Algorithm::Buffered, "buffered"},
    {Algorithm::System, "system"},
}};

template <class E, class Cmp>
void timed_sort(const BenchConfig& config, std::vector<E>& data, Cmp cmp, SortStats& stats) {
  if (config.algorithm == Algorithm::System) {
    const auto start = std::chrono::steady_clock::now();
    if (config.count_mode) {
      std::sort(data.begin(), data.end(), LessAdapter{counting_comparator(cmp, stats)});
    } else {
      std::sort(data.begin(), data.end(), LessAdapter{cmp});
    }
    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return;
  }

  SortOptions options;
  options.strategy = config.algorithm == Algorithm::InPlace ? MergeStrategy::InPlace
                                                            : MergeStrategy::Buffered;
  options.stats = &stats;
  options.count_comparisons = config.count_mode;
  options.attribute_phases = config.attribute_phases && config.algorithm == Algorithm::InPlace;
  mergesort(data, cmp, options);
}

BenchRecord skeleton(const BenchConfig& config, std::size_t rep) {
  BenchRecord r;
  r.algo = std::string(algorithm_name(config.algorithm));
  r.n = config.n;
  r.dist = distribution_label(config.dist);
  r.seed = rep_seed(config, rep);
  r.rep = rep;
  return r;
}

void fill_measurements(const BenchConfig& config, const SortStats& stats, BenchRecord& r) {
  const bool merge_based = config.algorithm != Algorithm::System;
  r.seconds = stats.wall_seconds;
  if (config.count_mode) {
    r.comparisons = stats.comparisons;
    if (merge_based) r.moves = stats.moves;
  }
  if (merge_based) r.max_depth = stats.max_merge_depth;
  if (config.attribute_phases && config.algorithm == Algorithm::InPlace) {
    r.corank_seconds = stats.corank_seconds;
    r.rotation_seconds = stats.rotation_seconds;
  }
  r.verified = true;
}

// One measured repetition; returns false if the output is wrong.
bool run_rep(const BenchConfig& config, std::size_t rep, BenchRecord& record) {
  const auto values = generate(config.n, config.dist, rep_seed(config, rep));
  SortStats stats;

  if (config.tagged) {
    const auto input = tag(values);
    auto data = input;
    timed_sort(config, data, KeyOrder{}, stats);
    if (!verify_stable_permutation(input, data, NaturalOrder{})) return false;
  } else {
    auto data = values;
    timed_sort(config, data, NaturalOrder{}, stats);
    if (!verify_sorted_permutation(values, data)) return false;
  }

  fill_measurements(config, stats, record);
  return true;
}

template <class T>
std::optional<T> median_of(std::span<const BenchRecord> reps, std::optional<T> BenchRecord::*field) {
  std::vector<double> values;
  for (const auto& r : reps) {
    if (!(r.*field)) return std::nullopt;
    values.push_back(static_cast<double>(*(r.*field)));
  }
  if (values.empty()) return std::nullopt;
  // Select the median record itself so integer counts stay exact.
  const double m = lower_median(values);
  for (const auto& r : reps) {
    if (static_cast<double>(*(r.*field)) == m) return r.*field;
  }
  return std::nullopt;
}

}  // namespace

std::string_view algorithm_name(Algorithm algo) {
  for (const auto& [a, name] : kAlgorithms) {
    if (a == algo) return name;
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kAlgorithms) {
    if (n == name) return a;
  }
  return std::nullopt;
}

std::string distribution_label(const Distribution& dist) {
  std::string label(distribution_name(dist.kind));
  if (dist.kind == Distribution::Kind::Sawtooth || dist.kind == Distribution::Kind::FewDistinct) {
    label += '/' + std::to_string(dist.parameter);
  }
  return label;
}

std::uint64_t rep_seed(const BenchConfig& config, std::size_t rep) {
  return config.fixed_seed ? config.seed : config.seed ^ static_cast<std::uint64_t>(rep);
}

bool verify_sorted_permutation(std::span<const double> input, std::span<const double> output) {
  if (input.size() != output.size()) return false;
  if (!verify_sorted(output)) return false;
  std::vector<double> expected(input.begin(), input.end());
  std::sort(expected.begin(), expected.end());
  return std::equal(expected.begin(), expected.end(), output.begin());
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& config) {
  if (config.reps < 1) throw std::invalid_argument("reps must be >= 1");

  std::vector<BenchRecord> records;
  records.reserve(config.reps + 1);
  for (std::size_t rep = 0; rep < config.reps; ++rep) {
    BenchRecord record = skeleton(config, rep);
    bool ok = false;
    try {
      ok = run_rep(config, rep, record);
    } catch (const std::bad_alloc&) {
      records.push_back(record);
      throw BenchFailure(BenchFailure::Kind::Resource,
                         "allocation failed for n = " + std::to_string(config.n),
                         std::move(records));
    } catch (const std::length_error&) {
      records.push_back(record);
      throw BenchFailure(BenchFailure::Kind::Resource,
                         "input of n = " + std::to_string(config.n) + " is too large",
                         std::move(records));
    }
    if (!ok) {
      records.push_back(record);
      throw BenchFailure(BenchFailure::Kind::Verification,
                         std::string(algorithm_name(config.algorithm)) +
                             " produced a wrong result for rep " + std::to_string(rep),
                         std::move(records));
    }
    records.push_back(std::move(record));
  }
  records.push_back(summarize(records));
  records.back().seed = config.seed;
  return records;
}

BenchRecord summarize(std::span<const BenchRecord> reps) {
  if (reps.empty()) throw std::invalid_argument("nothing to summarize");
  BenchRecord s;
  s.algo = reps.front().algo;
  s.n = reps.front().n;
  s.dist = reps.front().dist;
  s.seed = reps.front().seed;
  s.rep = std::nullopt;
  s.verified = std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.verified; });
  if (!s.verified) return s;
  s.seconds = median_of(reps, &BenchRecord::seconds);
  s.comparisons = median_of(reps, &BenchRecord::comparisons);
  s.moves = median_of(reps, &BenchRecord::moves);
  s.max_depth = median_of(reps, &BenchRecord::max_depth);
  s.corank_seconds = median_of(reps, &BenchRecord::corank_seconds);
  s.rotation_seconds = median_of(reps, &BenchRecord::rotation_seconds);
  return s;
}

std::vector<std::size_t> geometric_ladder(std::size_t n_min, std::size_t n_max, std::size_t steps) {
  if (n_min < 1 || n_max < n_min || steps < 1) {
    throw std::invalid_argument("ladder needs 1 <= n_min <= n_max and steps >= 1");
  }
  std::vector<std::size_t> out;
  if (steps == 1 || n_min == n_max) return {n_min};
  const double ratio = std::pow(static_cast<double>(n_max) / static_cast<double>(n_min),
                                1.0 / static_cast<double>(steps - 1));
  for (std::size_t s = 0; s < steps; ++s) {
    const auto n = s + 1 == steps
                       ? n_max
                       : static_cast<std::size_t>(std::llround(
                             static_cast<double>(n_min) * std::pow(ratio, static_cast<double>(s))));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

std::optional<FitColumn> parse_fit_column(std::string_view name) {
  if (name == "comparisons") return FitColumn::Comparisons;
  if (name == "seconds") return FitColumn::Seconds;
  return std::nullopt;
}

std::vector<FitPoint> fit_points(std::span<const BenchRecord> records, FitColumn column,
                                 std::string_view algo) {
  const bool have_summaries = std::any_of(records.begin(), records.end(), [&](const auto& r) {
    return r.is_summary() && (algo.empty() || r.algo == algo);
  });

  std::vector<FitPoint> points;
  for (const auto& r : records) {
    if (!r.verified || r.is_summary() != have_summaries) continue;
    if (!algo.empty() && r.algo != algo) continue;
    std::optional<double> y;
    if (column == FitColumn::Comparisons && r.comparisons) {
      y = static_cast<double>(*r.comparisons);
    } else if (column == FitColumn::Seconds && r.seconds) {
      y = *r.seconds;
    }
    if (y) points.push_back({static_cast<double>(r.n), *y});
  }
  return points;
}

}  // namespace ipmsort
