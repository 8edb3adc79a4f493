#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <ranges>
#include <span>
#include <stdexcept>
#include <utility>

#include "ipmsort/coranking.hpp"
#include "ipmsort/instrumentation.hpp"
#include "ipmsort/ordering.hpp"
#include "ipmsort/rotation.hpp"
#include "ipmsort/stats.hpp"

namespace ipmsort {

/// Uninitialized storage for up to `capacity` elements, used as the merge
/// target of the buffered merge. Slots are constructed and destroyed per merge.
template <class T, class Alloc = std::allocator<T>>
class MergeScratch {
 public:
  MergeScratch() = default;
  explicit MergeScratch(std::size_t capacity, Alloc alloc = Alloc()) : alloc_(std::move(alloc)) {
    allocate(capacity);
  }
  MergeScratch(const MergeScratch&) = delete;
  MergeScratch& operator=(const MergeScratch&) = delete;
  ~MergeScratch() { release(); }

  /// Replaces the storage with room for `capacity` elements.
  void allocate(std::size_t capacity) {
    release();
    if (capacity > 0) {
      data_ = std::allocator_traits<Alloc>::allocate(alloc_, capacity);
      capacity_ = capacity;
    }
  }
  void release() noexcept {
    if (data_) std::allocator_traits<Alloc>::deallocate(alloc_, data_, capacity_);
    data_ = nullptr;
    capacity_ = 0;
  }

  T* data() noexcept { return data_; }
  std::size_t capacity() const noexcept { return capacity_; }

 private:
  Alloc alloc_{};
  std::size_t capacity_ = 0;
  T* data_ = nullptr;
};

namespace detail {

template <class T, class Cmp>
void merge_into_scratch(std::span<T> base, std::size_t n1, Cmp& cmp, T* out,
                        SortStats* stats) {
  const std::size_t n = base.size();
  std::size_t a = 0;
  std::size_t b = n1;
  T* dst = out;
  while (a < n1 && b < n) {
    // take from the second run only if it strictly precedes; ties keep run order
    if (cmp(base[b], base[a]) == Ordering::Precedes) {
      std::construct_at(dst++, std::move(base[b++]));
    } else {
      std::construct_at(dst++, std::move(base[a++]));
    }
  }
  while (a < n1) std::construct_at(dst++, std::move(base[a++]));
  while (b < n) std::construct_at(dst++, std::move(base[b++]));

  for (std::size_t p = 0; p < n; ++p) base[p] = std::move(out[p]);
  std::destroy_n(out, n);
  if (stats) stats->moves += n;
}

}  // namespace detail

template <class R>
using element_t = std::ranges::range_value_t<R>;

/// Stable merge of base[0, n1) and base[n1, size) through `scratch`, which
/// must hold at least base.size() elements. At most size - 1 comparisons.
template <std::ranges::contiguous_range R, class Cmp, class Alloc>
void merge_buffered(R&& range, std::size_t n1, Cmp cmp, MergeScratch<element_t<R>, Alloc>& scratch,
                    SortStats* stats = nullptr) {
  auto base = std::span(range);
  if (n1 == 0 || n1 >= base.size()) return;
  if (scratch.capacity() < base.size()) throw std::length_error("merge_buffered: scratch too small");
  detail::merge_into_scratch(base, n1, cmp, scratch.data(), stats);
}

/// Stable merge of base[0, n1) and base[n1, size) using one scratch
/// allocation of base.size() elements, released before returning.
/// Allocation failure propagates as std::bad_alloc.
template <std::ranges::contiguous_range R, class Cmp = NaturalOrder>
void merge_buffered(R&& range, std::size_t n1, Cmp cmp = {}, SortStats* stats = nullptr) {
  auto base = std::span(range);
  if (n1 == 0 || n1 >= base.size()) return;
  MergeScratch<element_t<R>> scratch(base.size());
  detail::merge_into_scratch(base, n1, cmp, scratch.data(), stats);
}

/// One split step of the in-place merge, reported to MergeHooks::on_step.
struct MergeStep {
  std::size_t n1;
  std::size_t n2;
  CoRanks split;
  std::size_t rotated_length;
};

/// Optional observers for merge_inplace. Everything here may be left empty.
struct MergeHooks {
  MergeDepthGauge* gauge = nullptr;
  SortStats* stats = nullptr;       // moves, and phase seconds if attribute_phases
  bool attribute_phases = false;    // wall-clock brackets around co_rank / rotation
  std::function<void(const MergeStep&)> on_step;
};

namespace detail {

template <class T, class Cmp>
class InplaceMerger {
 public:
  InplaceMerger(Cmp& cmp, const MergeHooks& hooks)
      : cmp_(cmp), hooks_(hooks), gauge_(hooks.gauge ? hooks.gauge : &own_gauge_) {}

  // Splits at i = n1, rotates the middle block into place, then handles the
  // two independent halves: the smaller one by recursion, the larger one by
  // looping. Every recursive call therefore works on at most half the
  // elements of its caller and the depth stays within log2(n) + 1.
  void merge(std::span<T> base, std::size_t n1) {
    gauge_->enter();

    for (;;) {
      const std::size_t n2 = base.size() - n1;
      if (n1 == 0 || n2 == 0) break;

      const auto first = std::span<const T>(base.data(), n1);
      const auto second = std::span<const T>(base.data() + n1, n2);
      const CoRanks split = timed(&SortStats::corank_seconds, [&] {
        return co_rank_span(n1, first, second, cmp_);
      });
      const auto [j, k] = split;

      // j + k == n1, so the middle block [j, n1 + k) holds k elements from
      // each run and a left rotation by k swaps them.
      if (hooks_.on_step) hooks_.on_step(MergeStep{n1, n2, split, (n1 - j) + k});
      if (k == 0) break;

      timed(&SortStats::rotation_seconds, [&] {
        rotate_left_span(base.subspan(j, 2 * k), k);
        return 0;
      });
      if (hooks_.stats) hooks_.stats->moves += 2 * k;

      const auto left = base.first(n1);
      const auto right = base.subspan(n1);
      if (left.size() <= right.size()) {
        merge(left, j);
        base = right;
        n1 = k;
      } else {
        merge(right, k);
        base = left;
        n1 = j;
      }
    }

    gauge_->leave();
  }

 private:
  template <class F>
  auto timed(double SortStats::*slot, F&& f) {
    if (!hooks_.attribute_phases || !hooks_.stats) return f();
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    hooks_.stats->*slot +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

  Cmp& cmp_;
  const MergeHooks& hooks_;
  MergeDepthGauge own_gauge_;
  MergeDepthGauge* gauge_;
};

}  // namespace detail

/// Stable merge of base[0, n1) and base[n1, size) without a scratch buffer:
/// co-rank the midpoint, rotate the middle block, recurse on both halves.
/// O(n) comparisons, O(n log n) moves, O(log n) bookkeeping space. The
/// element order produced is identical to merge_buffered.
template <std::ranges::contiguous_range R, class Cmp = NaturalOrder>
void merge_inplace(R&& range, std::size_t n1, Cmp cmp = {}, const MergeHooks& hooks = {}) {
  auto base = std::span(range);
  if (n1 > base.size()) throw std::out_of_range("merge_inplace: first run longer than base");
  detail::InplaceMerger<element_t<R>, Cmp>(cmp, hooks).merge(base, n1);
}

template <std::ranges::contiguous_range R, class Cmp>
void merge_inplace(R&& range, std::size_t n1, Cmp cmp, MergeDepthGauge& gauge) {
  MergeHooks hooks;
  hooks.gauge = &gauge;
  merge_inplace(std::forward<R>(range), n1, std::move(cmp), hooks);
}

/// Runs merge_inplace under a counting comparator and returns the number of
/// comparisons used. Useful against std::inplace_merge, which only promises
/// O(N log N) comparisons when it cannot allocate.
template <std::ranges::contiguous_range R, class Cmp = NaturalOrder>
std::uint64_t count_inplace_merge_comparisons(R&& range, std::size_t n1, Cmp cmp = {}) {
  SortStats stats;
  merge_inplace(std::forward<R>(range), n1, counting_comparator(std::move(cmp), stats));
  return stats.comparisons;
}

}  // namespace ipmsort
