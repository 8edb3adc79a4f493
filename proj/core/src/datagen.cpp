#include "ipmsort/datagen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>

namespace ipmsort {
namespace {

constexpr std::array<std::pair<Distribution::Kind, std::string_view>, 5> kNames{{
    {Distribution::Kind::UniformRandom, "uniform"},
    {Distribution::Kind::Presorted, "sorted"},
    {Distribution::Kind::Reversed, "reversed"},
    {Distribution::Kind::Sawtooth, "sawtooth"},
    {Distribution::Kind::FewDistinct, "fewdistinct"},
}};

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> uniform(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = unit_double(rng);
  return out;
}

}  // namespace

Distribution Distribution::sawtooth(std::size_t period) {
  if (period < 2) throw std::invalid_argument("sawtooth period must be >= 2");
  return {Kind::Sawtooth, period};
}

Distribution Distribution::few_distinct(std::size_t universe) {
  if (universe < 1) throw std::invalid_argument("few-distinct universe must be >= 1");
  return {Kind::FewDistinct, universe};
}

std::string_view distribution_name(Distribution::Kind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<Distribution::Kind> parse_distribution_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<double> generate(std::size_t n, const Distribution& dist, std::uint64_t seed) {
  switch (dist.kind) {
    case Distribution::Kind::UniformRandom:
      return uniform(n, seed);
    case Distribution::Kind::Presorted: {
      auto v = uniform(n, seed);
      std::sort(v.begin(), v.end());
      return v;
    }
    case Distribution::Kind::Reversed: {
      auto v = uniform(n, seed);
      std::sort(v.begin(), v.end(), std::greater<>());
      return v;
    }
    case Distribution::Kind::Sawtooth: {
      const std::size_t period = std::max<std::size_t>(dist.parameter, 2);
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<double>(i % period) / static_cast<double>(period);
      }
      return v;
    }
    case Distribution::Kind::FewDistinct: {
      const auto universe = static_cast<double>(std::max<std::size_t>(dist.parameter, 1));
      std::mt19937_64 rng(seed);
      std::vector<double> v(n);
      for (auto& x : v) x = std::floor(unit_double(rng) * universe);
      return v;
    }
  }
  throw std::invalid_argument("unknown distribution");
}

}  // namespace ipmsort
