#include "ipmsort/instrumentation.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace {

using ipmsort::KeyOrder;
using ipmsort::SortStats;
using ipmsort::TaggedElement;
using ipmsort::verify_sorted;
using ipmsort::verify_stable_permutation;

using E = TaggedElement<int>;

TEST(CountingComparator, CountsEveryCall) {
  SortStats stats;
  auto cmp = ipmsort::counting_comparator(ipmsort::NaturalOrder{}, stats);
  for (int i = 0; i < 5; ++i) cmp(i, 2);
  EXPECT_EQ(stats.comparisons, 5u);
  auto copy = cmp;
  copy(1, 1);
  EXPECT_EQ(stats.comparisons, 6u);
}

TEST(CountingComparator, SeparateStatsDoNotInterfere) {
  SortStats a, b;
  auto ca = ipmsort::counting_comparator(ipmsort::NaturalOrder{}, a);
  auto cb = ipmsort::counting_comparator(ipmsort::NaturalOrder{}, b);
  ca(1, 2);
  ca(2, 1);
  cb(3, 3);
  EXPECT_EQ(a.comparisons, 2u);
  EXPECT_EQ(b.comparisons, 1u);
}

TEST(VerifySorted, Examples) {
  EXPECT_TRUE(verify_sorted(std::vector<int>{1, 2, 2, 3}));
  EXPECT_FALSE(verify_sorted(std::vector<int>{2, 1}));
  EXPECT_TRUE(verify_sorted(std::vector<int>{}));
  EXPECT_TRUE(verify_sorted(std::vector<int>{4}));
}

TEST(VerifyStablePermutation, Examples) {
  const std::vector<E> input{{1, 0}, {1, 1}};
  EXPECT_TRUE(verify_stable_permutation(input, std::vector<E>{{1, 0}, {1, 1}}));
  EXPECT_FALSE(verify_stable_permutation(input, std::vector<E>{{1, 1}, {1, 0}}));
}

TEST(VerifyStablePermutation, RejectsBrokenPermutations) {
  const std::vector<E> input{{3, 0}, {1, 1}, {2, 2}};
  EXPECT_TRUE(verify_stable_permutation(input, std::vector<E>{{1, 1}, {2, 2}, {3, 0}}));
  // duplicated tag
  EXPECT_FALSE(verify_stable_permutation(input, std::vector<E>{{1, 1}, {1, 1}, {3, 0}}));
  // key changed under its tag
  EXPECT_FALSE(verify_stable_permutation(input, std::vector<E>{{1, 1}, {2, 2}, {4, 0}}));
  // unknown tag
  EXPECT_FALSE(verify_stable_permutation(input, std::vector<E>{{1, 1}, {2, 2}, {3, 7}}));
  // unsorted
  EXPECT_FALSE(verify_stable_permutation(input, std::vector<E>{{2, 2}, {1, 1}, {3, 0}}));
  // wrong length
  EXPECT_FALSE(verify_stable_permutation(input, std::vector<E>{{1, 1}, {2, 2}}));
}

TEST(Tag, PairsValuesWithIndices) {
  EXPECT_EQ(ipmsort::tag(std::vector<int>{7, 7}), (std::vector<E>{{7, 0}, {7, 1}}));
  EXPECT_TRUE(ipmsort::tag(std::vector<int>{}).empty());
  for (std::size_t n : {1u, 13u, 1000u}) {
    const auto t = ipmsort::tag(std::vector<double>(n, 0.5));
    ASSERT_EQ(t.size(), n);
    EXPECT_EQ(t.back().tag, n - 1);
  }
}

TEST(MoveCounted, CountsAssignmentsAndConstructionsSeparately) {
  ipmsort::MoveCounter counter;
  ipmsort::MoveCounted<int> a(1, &counter);
  ipmsort::MoveCounted<int> b(2, &counter);
  EXPECT_EQ(counter.constructions, 0u);
  auto c = a;
  EXPECT_EQ(counter.constructions, 1u);
  b = std::move(c);
  a = b;
  EXPECT_EQ(counter.assignments, 2u);
  EXPECT_EQ(a.value(), 1);
}

}  // namespace
