#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ipmsort/coranking.hpp"
#include "ipmsort/datagen.hpp"
#include "ipmsort/merge.hpp"
#include "ipmsort/rotation.hpp"
#include "ipmsort/sort.hpp"

namespace {

std::vector<double> uniform(std::size_t n) {
  return ipmsort::generate(n, ipmsort::Distribution::uniform(), 1);
}

std::vector<double> two_sorted_halves(std::size_t n) {
  auto v = uniform(n);
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::sort(v.begin(), mid);
  std::sort(mid, v.end());
  return v;
}

template <class Sort>
void run_sort(benchmark::State& state, Sort sort) {
  const auto input = uniform(static_cast<std::size_t>(state.range(0)));
  std::vector<double> v;
  for (auto _ : state) {
    state.PauseTiming();
    v = input;
    state.ResumeTiming();
    sort(v);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_InplaceSort(benchmark::State& state) {
  run_sort(state, [](auto& v) { ipmsort::inplace_mergesort(v); });
}

void BM_BufferedSort(benchmark::State& state) {
  run_sort(state, [](auto& v) { ipmsort::buffered_mergesort(v); });
}

void BM_StdStableSort(benchmark::State& state) {
  run_sort(state, [](auto& v) { std::stable_sort(v.begin(), v.end()); });
}

void BM_StdSort(benchmark::State& state) {
  run_sort(state, [](auto& v) { std::sort(v.begin(), v.end()); });
}

template <class Merge>
void run_merge(benchmark::State& state, Merge merge) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = two_sorted_halves(n);
  std::vector<double> v;
  for (auto _ : state) {
    state.PauseTiming();
    v = input;
    state.ResumeTiming();
    merge(v, n / 2);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MergeInplace(benchmark::State& state) {
  run_merge(state, [](auto& v, std::size_t n1) { ipmsort::merge_inplace(v, n1); });
}

void BM_MergeBuffered(benchmark::State& state) {
  run_merge(state, [](auto& v, std::size_t n1) { ipmsort::merge_buffered(v, n1); });
}

void BM_StdInplaceMerge(benchmark::State& state) {
  run_merge(state, [](auto& v, std::size_t n1) {
    std::inplace_merge(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n1), v.end());
  });
}

void BM_Rotate(benchmark::State& state) {
  auto v = uniform(static_cast<std::size_t>(state.range(0)));
  const auto r = v.size() / 3 + 1;
  for (auto _ : state) {
    ipmsort::rotate_left(v, r);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_StdRotate(benchmark::State& state) {
  auto v = uniform(static_cast<std::size_t>(state.range(0)));
  const auto r = static_cast<std::ptrdiff_t>(v.size() / 3 + 1);
  for (auto _ : state) {
    std::rotate(v.begin(), v.begin() + r, v.end());
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CoRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto v = two_sorted_halves(n);
  const std::span<const double> all(v);
  const auto a = all.first(n / 2);
  const auto b = all.subspan(n / 2);
  std::uint64_t i = 0;
  for (auto _ : state) {
    i = (i * 6364136223846793005ull + 1442695040888963407ull);
    benchmark::DoNotOptimize(ipmsort::co_rank(i % (n + 1), a, b));
  }
}

}  // namespace

BENCHMARK(BM_InplaceSort)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BufferedSort)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StdStableSort)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StdSort)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MergeInplace)->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_MergeBuffered)->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_StdInplaceMerge)->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_Rotate)->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_StdRotate)->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_CoRank)->RangeMultiplier(16)->Range(1 << 12, 1 << 20);
BENCHMARK_MAIN();
