#pragma once

#include <concepts>
#include <type_traits>

namespace ipmsort {

/// Result of a three-way comparison between two elements.
enum class Ordering : signed char { Precedes = -1, Equal = 0, Succeeds = 1 };

/// A callable that orders two elements of type T and returns an Ordering.
///
/// Algorithms in this library only inspect elements through such a callable.
/// It must implement a strict weak ordering; this is documented, not checked.
template <class F, class T>
concept ThreeWayComparator =
    std::invocable<F&, const T&, const T&> &&
    std::same_as<std::invoke_result_t<F&, const T&, const T&>, Ordering>;

/// Orders elements with `operator<`.
struct NaturalOrder {
  template <class T>
  constexpr Ordering operator()(const T& a, const T& b) const {
    if (a < b) return Ordering::Precedes;
    if (b < a) return Ordering::Succeeds;
    return Ordering::Equal;
  }
};

/// Adapts a three-way comparator to the boolean "less" form expected by
/// standard algorithms.
template <class Cmp>
struct LessAdapter {
  Cmp cmp;

  template <class T>
  constexpr bool operator()(const T& a, const T& b) {
    return cmp(a, b) == Ordering::Precedes;
  }
};

}  // namespace ipmsort
