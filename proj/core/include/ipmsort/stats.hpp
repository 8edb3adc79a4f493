#pragma once

#include <cstddef>
#include <cstdint>

namespace ipmsort {

/// Per-run tally filled in by the sort driver when a caller asks for it.
///
/// `moves` counts element assignments into the sequence being sorted
/// (rotation writes for the in-place merge, copy-back writes for the
/// buffered merge). Constructing a temporary or a scratch slot is not a move.
struct SortStats {
  std::uint64_t comparisons = 0;
  std::uint64_t moves = 0;
  std::size_t max_merge_depth = 0;
  std::size_t max_sort_depth = 0;
  double wall_seconds = 0.0;

  // Populated only when phase attribution is requested for the in-place merge.
  double corank_seconds = 0.0;
  double rotation_seconds = 0.0;
};

/// Tracks the recursion depth of a merge.
struct MergeDepthGauge {
  std::size_t current = 0;
  std::size_t max = 0;

  void enter() noexcept {
    if (++current > max) max = current;
  }
  void leave() noexcept { --current; }
};

}  // namespace ipmsort
