#pragma once

#include <algorithm>
#include <cstddef>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>

#include "ipmsort/ordering.hpp"

namespace ipmsort {

/// Split indices of a rank i in the (virtual) stable merge of A and B:
/// the first i merged elements are exactly A[0, j) and B[0, k), j + k = i.
struct CoRanks {
  std::size_t j = 0;
  std::size_t k = 0;

  friend bool operator==(const CoRanks&, const CoRanks&) = default;
};

namespace detail {

// Binary search over the split with j + k = i kept invariant. Each pass tests
// the two termination conditions
//   A[j-1] <= B[k]   (else j is too large)
//   B[k-1] <  A[j]   (else k is too large)
// with range checks short-circuiting ahead of every element access. The
// asymmetry (<= vs <) places equal A elements before equal B elements.
template <class T, class Cmp>
CoRanks co_rank_span(std::size_t i, std::span<const T> a, std::span<const T> b,
                     Cmp& cmp) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();

  std::size_t j = std::min(i, na);
  std::size_t k = i - j;
  std::size_t j_low = i > nb ? i - nb : 0;
  std::size_t k_low = i > na ? i - na : 0;

  for (;;) {
    if (j > 0 && k < nb && cmp(a[j - 1], b[k]) == Ordering::Succeeds) {
      const std::size_t delta = (j - j_low + 1) / 2;
      k_low = k;
      j -= delta;
      k += delta;
    } else if (k > 0 && j < na && cmp(b[k - 1], a[j]) != Ordering::Precedes) {
      const std::size_t delta = (k - k_low + 1) / 2;
      j_low = j;
      j += delta;
      k -= delta;
    } else {
      return {j, k};
    }
  }
}

template <class R>
auto const_span(const R& range) {
  return std::span<const std::ranges::range_value_t<R>>(std::ranges::data(range),
                                                        std::ranges::size(range));
}

}  // namespace detail

/// Finds the unique co-ranks (j, k) of rank `i` in the stable merge of the
/// sorted sequences `a` and `b`, using O(log(|a| + |b|)) comparisons and no
/// extra storage. Throws std::out_of_range if i > |a| + |b|.
template <std::ranges::contiguous_range RA, std::ranges::contiguous_range RB,
          class Cmp = NaturalOrder>
  requires std::same_as<std::ranges::range_value_t<RA>, std::ranges::range_value_t<RB>> &&
           ThreeWayComparator<Cmp, std::ranges::range_value_t<RA>>
CoRanks co_rank(std::size_t i, const RA& a, const RB& b, Cmp cmp = {}) {
  const auto sa = detail::const_span(a);
  const auto sb = detail::const_span(b);
  if (i > sa.size() + sb.size()) {
    throw std::out_of_range("co_rank: rank " + std::to_string(i) + " exceeds merged length " +
                            std::to_string(sa.size() + sb.size()));
  }
  return detail::co_rank_span(i, sa, sb, cmp);
}

/// Returns the element at index `i` of the stable merge of sorted `a` and `b`
/// in O(log n) comparisons. Ties resolve to `a`. Throws std::out_of_range if
/// i >= |a| + |b|.
template <std::ranges::contiguous_range RA, std::ranges::contiguous_range RB,
          class Cmp = NaturalOrder>
  requires std::same_as<std::ranges::range_value_t<RA>, std::ranges::range_value_t<RB>> &&
           ThreeWayComparator<Cmp, std::ranges::range_value_t<RA>>
const std::ranges::range_value_t<RA>& select_merged(std::size_t i, const RA& a, const RB& b,
                                                    Cmp cmp = {}) {
  const auto sa = detail::const_span(a);
  const auto sb = detail::const_span(b);
  if (i >= sa.size() + sb.size()) {
    throw std::out_of_range("select_merged: index " + std::to_string(i) +
                            " outside merged length " + std::to_string(sa.size() + sb.size()));
  }
  const auto [j, k] = detail::co_rank_span(i, sa, sb, cmp);
  if (j < sa.size() && k < sb.size()) {
    return cmp(sb[k], sa[j]) == Ordering::Precedes ? sb[k] : sa[j];
  }
  return j < sa.size() ? sa[j] : sb[k];
}

}  // namespace ipmsort
