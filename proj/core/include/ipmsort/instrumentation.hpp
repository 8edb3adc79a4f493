#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

#include "ipmsort/ordering.hpp"
#include "ipmsort/stats.hpp"

namespace ipmsort {

/// Comparator wrapper that bumps a counter once per invocation. Copies share
/// the counter, so it survives being passed by value through the algorithms.
template <class Cmp>
struct CountingComparator {
  Cmp inner;
  std::uint64_t* counter;

  template <class T>
  Ordering operator()(const T& a, const T& b) {
    ++*counter;
    return inner(a, b);
  }
};

template <class Cmp>
CountingComparator<Cmp> counting_comparator(Cmp inner, SortStats& stats) {
  return {std::move(inner), &stats.comparisons};
}

/// Tallies shared by a family of MoveCounted elements.
struct MoveCounter {
  std::uint64_t assignments = 0;
  std::uint64_t constructions = 0;
};

/// Element adapter that counts how often it is assigned to and copy/move
/// constructed. Only meant for tests and benchmarks.
template <class T>
class MoveCounted {
 public:
  MoveCounted(T value, MoveCounter* counter) : value_(std::move(value)), counter_(counter) {}

  MoveCounted(const MoveCounted& other) : value_(other.value_), counter_(other.counter_) {
    bump_construction();
  }
  MoveCounted(MoveCounted&& other) noexcept
      : value_(std::move(other.value_)), counter_(other.counter_) {
    bump_construction();
  }
  MoveCounted& operator=(const MoveCounted& other) {
    value_ = other.value_;
    counter_ = other.counter_;
    bump_assignment();
    return *this;
  }
  MoveCounted& operator=(MoveCounted&& other) noexcept {
    value_ = std::move(other.value_);
    counter_ = other.counter_;
    bump_assignment();
    return *this;
  }
  ~MoveCounted() = default;

  const T& value() const noexcept { return value_; }

 private:
  void bump_assignment() noexcept {
    if (counter_) ++counter_->assignments;
  }
  void bump_construction() noexcept {
    if (counter_) ++counter_->constructions;
  }

  T value_;
  MoveCounter* counter_;
};

/// Orders MoveCounted elements by their wrapped value.
template <class Cmp = NaturalOrder>
struct ValueOrder {
  Cmp inner{};

  template <class T>
  Ordering operator()(const MoveCounted<T>& a, const MoveCounted<T>& b) {
    return inner(a.value(), b.value());
  }
};

/// A key paired with its zero-based position in the original input.
template <class K>
struct TaggedElement {
  K key;
  std::size_t tag;

  friend bool operator==(const TaggedElement&, const TaggedElement&) = default;
};

/// Orders tagged elements by key only, so equal keys compare Equal
/// regardless of tag.
template <class Cmp = NaturalOrder>
struct KeyOrder {
  Cmp inner{};

  template <class K>
  Ordering operator()(const TaggedElement<K>& a, const TaggedElement<K>& b) {
    return inner(a.key, b.key);
  }
};

/// Pairs each value with its index.
template <std::ranges::input_range R>
auto tag(const R& values) {
  using K = std::ranges::range_value_t<R>;
  std::vector<TaggedElement<K>> out;
  if constexpr (std::ranges::sized_range<R>) out.reserve(std::ranges::size(values));
  std::size_t index = 0;
  for (const auto& v : values) out.push_back({v, index++});
  return out;
}

/// True iff no adjacent pair is out of order.
template <std::ranges::forward_range R, class Cmp = NaturalOrder>
bool verify_sorted(const R& range, Cmp cmp = {}) {
  auto it = std::ranges::begin(range);
  const auto end = std::ranges::end(range);
  if (it == end) return true;
  for (auto next = std::next(it); next != end; ++it, ++next) {
    if (cmp(*it, *next) == Ordering::Succeeds) return false;
  }
  return true;
}

/// True iff `output` is a permutation of `input` (by tag), sorted by key, and
/// every run of equal keys carries strictly increasing tags. Input tags must
/// be unique.
template <class K, class Cmp = NaturalOrder>
bool verify_stable_permutation(std::span<const TaggedElement<K>> input,
                               std::span<const TaggedElement<K>> output, Cmp cmp = {}) {
  if (input.size() != output.size()) return false;

  std::size_t max_tag = 0;
  for (const auto& e : input) max_tag = std::max(max_tag, e.tag);
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot(input.empty() ? 0 : max_tag + 1, kAbsent);
  for (std::size_t p = 0; p < input.size(); ++p) slot[input[p].tag] = p;

  std::vector<bool> seen(slot.size(), false);
  for (const auto& e : output) {
    if (e.tag >= slot.size() || slot[e.tag] == kAbsent || seen[e.tag]) return false;
    seen[e.tag] = true;
    if (cmp(input[slot[e.tag]].key, e.key) != Ordering::Equal) return false;
  }

  for (std::size_t p = 1; p < output.size(); ++p) {
    const Ordering o = cmp(output[p - 1].key, output[p].key);
    if (o == Ordering::Succeeds) return false;
    if (o == Ordering::Equal && output[p - 1].tag >= output[p].tag) return false;
  }
  return true;
}

template <class K, class Cmp = NaturalOrder>
bool verify_stable_permutation(const std::vector<TaggedElement<K>>& input,
                               const std::vector<TaggedElement<K>>& output, Cmp cmp = {}) {
  return verify_stable_permutation<K, Cmp>(std::span<const TaggedElement<K>>(input),
                                           std::span<const TaggedElement<K>>(output),
                                           std::move(cmp));
}

}  // namespace ipmsort
