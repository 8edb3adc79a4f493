#pragma once

#include <cstddef>
#include <cstdint>
#include <ranges>
#include <span>
#include <utility>

namespace ipmsort {

/// Maps an arbitrary signed offset into [0, n). Returns 0 for n == 0.
constexpr std::size_t normalize_offset(std::int64_t raw, std::size_t n) noexcept {
  if (n == 0) return 0;
  const auto m = static_cast<std::int64_t>(n);
  auto r = raw % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

namespace detail {

template <class T>
void rotate_left_span(std::span<T> view, std::size_t r) {
  const std::size_t n = view.size();
  if (n <= 1 || r == 0) return;

  std::size_t work = n;
  for (std::size_t start = 0; work > 0; ++start) {
    std::size_t i = start;
    T first = std::move(view[start]);
    for (;;) {
      std::size_t next = i + r;
      if (next >= n) next -= n;
      --work;
      if (next == start) {
        view[i] = std::move(first);
        break;
      }
      view[i] = std::move(view[next]);
      i = next;
    }
  }
}

}  // namespace detail

/// Rotates `range` to the left by `r` (0 <= r < size), so that the element
/// formerly at (s + r) mod n ends up at s.
///
/// Cycle-following ("juggling") rotation: each cycle of the permutation is
/// walked once, holding its first element in a single temporary, until the
/// walk returns to its start. A global work counter ends the outer loop after
/// exactly n positions have been written, so the number of cycles is never
/// computed. Every element is move-assigned exactly once; no element is ever
/// compared. Out-of-range offsets must go through normalize_offset first.
template <std::ranges::contiguous_range R>
  requires std::ranges::sized_range<R>
void rotate_left(R&& range, std::size_t r) {
  detail::rotate_left_span(std::span(range), r);
}

/// Right rotation by `r`, expressed as a left rotation by n - r.
template <std::ranges::contiguous_range R>
  requires std::ranges::sized_range<R>
void rotate_right(R&& range, std::size_t r) {
  auto view = std::span(range);
  if (r == 0) return;
  detail::rotate_left_span(view, view.size() - r);
}

}  // namespace ipmsort
