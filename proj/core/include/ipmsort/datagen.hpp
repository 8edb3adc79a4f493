#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ipmsort {

/// Shape of a generated benchmark input.
///
///  - UniformRandom: independent doubles in [0, 1).
///  - Presorted / Reversed: the uniform draw sorted ascending / descending.
///  - Sawtooth(period): value (index mod period) / period, i.e. repeated
///    ascending ramps; period 2 is strict alternation of two values.
///  - FewDistinct(universe): uniform keys from {0, 1, ..., universe - 1}.
struct Distribution {
  enum class Kind { UniformRandom, Presorted, Reversed, Sawtooth, FewDistinct };

  Kind kind = Kind::UniformRandom;
  std::size_t parameter = 0;  // period for Sawtooth, universe for FewDistinct

  static Distribution uniform() { return {Kind::UniformRandom, 0}; }
  static Distribution presorted() { return {Kind::Presorted, 0}; }
  static Distribution reversed() { return {Kind::Reversed, 0}; }
  static Distribution sawtooth(std::size_t period = 2);
  static Distribution few_distinct(std::size_t universe);

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// CLI name: uniform, sorted, reversed, sawtooth, fewdistinct.
std::string_view distribution_name(Distribution::Kind kind);
std::optional<Distribution::Kind> parse_distribution_kind(std::string_view name);

/// Deterministic input of length n. The same (n, dist, seed) always yields
/// the same sequence, on any platform: values come from std::mt19937_64
/// (whose output sequence is fixed by the standard) mapped to [0, 1) with
/// the top 53 bits.
std::vector<double> generate(std::size_t n, const Distribution& dist, std::uint64_t seed);

}  // namespace ipmsort
