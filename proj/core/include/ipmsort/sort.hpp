#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <ranges>
#include <span>
#include <utility>

#include "ipmsort/instrumentation.hpp"
#include "ipmsort/merge.hpp"
#include "ipmsort/ordering.hpp"
#include "ipmsort/stats.hpp"

namespace ipmsort {

enum class MergeStrategy { Buffered, InPlace };

/// Scratch lifetime for the buffered strategy. Reused allocates once per
/// top-level sort; PerMerge allocates and frees inside every merge call.
enum class BufferPolicy { Reused, PerMerge };

struct SortOptions {
  MergeStrategy strategy = MergeStrategy::InPlace;
  BufferPolicy buffer = BufferPolicy::Reused;
  // When set, comparisons, moves, depths and wall time are written here.
  SortStats* stats = nullptr;
  // Wrap the comparator in a counter when stats is set. Turning this off
  // keeps wall-time measurements free of counting overhead.
  bool count_comparisons = true;
  // In-place only: split wall time between co-ranking and rotation.
  bool attribute_phases = false;
};

namespace detail {

template <class T, class Cmp>
class MergesortDriver {
 public:
  MergesortDriver(Cmp& cmp, const SortOptions& options) : cmp_(cmp), options_(options) {
    hooks_.gauge = &gauge_;
    hooks_.stats = options.stats;
    hooks_.attribute_phases = options.attribute_phases;
  }

  void run(std::span<T> view) {
    if (options_.strategy == MergeStrategy::Buffered &&
        options_.buffer == BufferPolicy::Reused && view.size() > 1) {
      scratch_.allocate(view.size());
    }
    sort(view, 1);
    if (options_.stats) {
      options_.stats->max_merge_depth = std::max(options_.stats->max_merge_depth, gauge_.max);
      options_.stats->max_sort_depth = std::max(options_.stats->max_sort_depth, max_depth_);
    }
    scratch_.release();
  }

 private:
  void sort(std::span<T> view, std::size_t depth) {
    if (depth > max_depth_) max_depth_ = depth;
    const std::size_t n = view.size();
    if (n <= 1) return;
    const std::size_t mid = n / 2;
    sort(view.first(mid), depth + 1);
    sort(view.subspan(mid), depth + 1);
    merge(view, mid);
  }

  void merge(std::span<T> view, std::size_t mid) {
    if (options_.strategy == MergeStrategy::InPlace) {
      InplaceMerger<T, Cmp>(cmp_, hooks_).merge(view, mid);
    } else {
      // a buffered merge is a single non-recursive level
      gauge_.enter();
      if (scratch_.capacity() > 0) {
        merge_buffered(view, mid, std::ref(cmp_), scratch_, options_.stats);
      } else {
        merge_buffered(view, mid, std::ref(cmp_), options_.stats);
      }
      gauge_.leave();
    }
  }

  Cmp& cmp_;
  const SortOptions& options_;
  MergeHooks hooks_;
  MergeDepthGauge gauge_;
  std::size_t max_depth_ = 0;
  MergeScratch<T> scratch_;
};

}  // namespace detail

/// Top-down stable mergesort splitting at floor(n / 2). The merge strategy
/// decides between the classic buffered merge (O(n) scratch) and the
/// co-rank/rotation in-place merge (O(log n) bookkeeping). Both strategies
/// produce the same element order.
template <std::ranges::contiguous_range R, class Cmp = NaturalOrder>
  requires std::ranges::sized_range<R>
void mergesort(R&& range, Cmp cmp = {}, const SortOptions& options = {}) {
  auto view = std::span(range);
  using T = std::ranges::range_value_t<R>;

  if (!options.stats) {
    detail::MergesortDriver<T, Cmp>(cmp, options).run(view);
    return;
  }

  const auto start = std::chrono::steady_clock::now();
  if (options.count_comparisons) {
    auto counted = counting_comparator(std::move(cmp), *options.stats);
    detail::MergesortDriver<T, decltype(counted)>(counted, options).run(view);
  } else {
    detail::MergesortDriver<T, Cmp>(cmp, options).run(view);
  }
  options.stats->wall_seconds +=
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <std::ranges::contiguous_range R, class Cmp = NaturalOrder>
  requires std::ranges::sized_range<R>
void inplace_mergesort(R&& range, Cmp cmp = {}, SortStats* stats = nullptr) {
  SortOptions options;
  options.strategy = MergeStrategy::InPlace;
  options.stats = stats;
  mergesort(std::forward<R>(range), std::move(cmp), options);
}

template <std::ranges::contiguous_range R, class Cmp = NaturalOrder>
  requires std::ranges::sized_range<R>
void buffered_mergesort(R&& range, Cmp cmp = {}, SortStats* stats = nullptr) {
  SortOptions options;
  options.strategy = MergeStrategy::Buffered;
  options.stats = stats;
  mergesort(std::forward<R>(range), std::move(cmp), options);
}

}  // namespace ipmsort
