#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ipmsort/datagen.hpp"
#include "ipmsort/fit.hpp"
#include "ipmsort/report.hpp"

namespace ipmsort {

/// "system" is std::sort, an unstable reference point.
enum class Algorithm { InPlace, Buffered, System };

std::string_view algorithm_name(Algorithm algo);  // inplace / buffered / system
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Distribution label used in reports, e.g. "uniform" or "sawtooth/2".
std::string distribution_label(const Distribution& dist);

struct BenchConfig {
  Algorithm algorithm = Algorithm::InPlace;
  std::size_t n = 0;
  Distribution dist = Distribution::uniform();
  std::uint64_t seed = 0;
  std::size_t reps = 1;
  bool count_mode = false;        // count comparisons and moves
  bool attribute_phases = false;  // in-place only: co-rank vs rotation seconds
  bool fixed_seed = false;        // every rep uses `seed` instead of seed ^ rep
  bool tagged = false;            // sort (key, index) pairs and check stability too
};

/// Thrown by run_benchmark. `records` holds the completed reps followed by a
/// diagnostic record for the failing one (verified = false, no timings).
class BenchFailure : public std::runtime_error {
 public:
  enum class Kind { Verification, Resource };

  BenchFailure(Kind kind, const std::string& what, std::vector<BenchRecord> records)
      : std::runtime_error(what), kind_(kind), records_(std::move(records)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<BenchRecord>& records() const noexcept { return records_; }

 private:
  Kind kind_;
  std::vector<BenchRecord> records_;
};

/// Runs config.reps measurements, each on a fresh input, verifies every
/// output, and appends a median summary row (rep = nullopt) holding the
/// lower median of every measured field. Throws BenchFailure on a wrong
/// output or on allocation failure.
std::vector<BenchRecord> run_benchmark(const BenchConfig& config);

/// Seed used by repetition `rep`.
std::uint64_t rep_seed(const BenchConfig& config, std::size_t rep);

/// Median summary of a set of rep records for one configuration.
BenchRecord summarize(std::span<const BenchRecord> reps);

/// True iff `output` is sorted and holds exactly the values of `input`.
bool verify_sorted_permutation(std::span<const double> input, std::span<const double> output);

/// `steps` sizes spaced geometrically from n_min to n_max inclusive, rounded
/// to integers, deduplicated and ascending.
std::vector<std::size_t> geometric_ladder(std::size_t n_min, std::size_t n_max, std::size_t steps);

enum class FitColumn { Comparisons, Seconds };

std::optional<FitColumn> parse_fit_column(std::string_view name);

/// Extracts (n, y) pairs from verified records. Summary rows are used when
/// the input has any; otherwise every verified per-rep row is used.
/// `algo` filters on the algo column when non-empty.
std::vector<FitPoint> fit_points(std::span<const BenchRecord> records, FitColumn column,
                                 std::string_view algo = {});

}  // namespace ipmsort
