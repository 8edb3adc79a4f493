// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <new>
#include <random>
#include <string>
#include <vector>

#include "ipmsort/bench.hpp"
#include "ipmsort/coranking.hpp"
#include "ipmsort/datagen.hpp"
#include "ipmsort/fit.hpp"
#include "ipmsort/instrumentation.hpp"
#include "ipmsort/merge.hpp"
#include "ipmsort/rotation.hpp"
#include "ipmsort/sort.hpp"
#include "support/oracles.hpp"

namespace {

std::size_t g_allocations = 0;
bool g_track_allocations = false;

void* counted_alloc(std::size_t size) {
  if (g_track_allocations) ++g_allocations;
  if (void* p = std::malloc(size == 0 ? 1 : size)) return p;
  throw std::bad_alloc();
}

}  // namespace

void* operator new(std::size_t size) { return counted_alloc(size); }
void* operator new[](std::size_t size) { return counted_alloc(size); }
void operator delete(void* p) noexcept { std::free(p); }
void operator delete[](void* p) noexcept { std::free(p); }
void operator delete(void* p, std::size_t) noexcept { std::free(p); }
void operator delete[](void* p, std::size_t) noexcept { std::free(p); }

namespace {

using ipmsort::CoRanks;
using ipmsort::Distribution;
using ipmsort::KeyOrder;
using ipmsort::SortStats;
using ipmsort::TaggedElement;
using ipmsort::testing::ceil_log2;
using Clock = std::chrono::steady_clock;
using E = TaggedElement<int>;

int g_failures = 0;

struct Check {
  bool ok = true;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

void report(int id, const char* title, double budget_seconds, const std::function<std::string(Check&)>& body,
            double prior_seconds = 0) {
  Check check;
  const auto start = Clock::now();
  std::string detail = body(check);
  const double secs = prior_seconds + std::chrono::duration<double>(Clock::now() - start).count();
  check.expect(secs < budget_seconds, "over time budget");
  if (!check.ok) ++g_failures;
  std::printf("criterion %2d %s  %s: %s%s%s [%.2fs / %.0fs]\n", id, check.ok ? "PASS" : "FAIL", title,
              detail.c_str(), check.ok ? "" : "; first failure: ", check.first_failure.c_str(), secs,
              budget_seconds);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Every nondecreasing sequence of length <= max_len over {0, ..., universe - 1}.
std::vector<std::vector<int>> all_sorted_up_to(std::size_t max_len, int universe) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t len) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (int v = cur.empty() ? 0 : cur.back(); v < universe; ++v) {
      cur.push_back(v);
      rec(len);
      cur.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len; ++len) rec(len);
  return out;
}

std::vector<int> random_sorted(std::mt19937_64& rng, std::size_t len, int universe) {
  std::vector<int> v(len);
  for (auto& x : v) x = static_cast<int>(rng() % static_cast<std::uint64_t>(universe));
  std::sort(v.begin(), v.end());
  return v;
}

struct CoRankTally {
  std::uint64_t queries = 0;
  std::uint64_t worst_excess = 0;  // max over queries of comparisons - bound, if positive
  bool equal = true;
  bool conditions = true;
  bool sums = true;
  bool within_bound = true;
};

// Checks co_rank for every i of one instance against a single oracle merge.
template <class T>
void check_all_ranks(std::span<const T> a, std::span<const T> b, CoRankTally& t,
                     const std::vector<std::size_t>* ranks = nullptr) {
  const auto from_b = ipmsort::testing::stable_merge_provenance(a, b);
  std::vector<std::size_t> prefix_b(from_b.size() + 1, 0);
  for (std::size_t s = 0; s < from_b.size(); ++s) prefix_b[s + 1] = prefix_b[s] + from_b[s];
  const std::size_t bound = 2 * (ceil_log2(a.size() + b.size() + 1) + 2);
  auto one = [&](std::size_t i) {
    SortStats stats;
    const auto got = ipmsort::co_rank(i, a, b, ipmsort::counting_comparator(ipmsort::NaturalOrder{}, stats));
    const CoRanks want{i - prefix_b[i], prefix_b[i]};
    ++t.queries;
    t.equal = t.equal && got == want;
    t.sums = t.sums && got.j + got.k == i;
    t.conditions = t.conditions && ipmsort::testing::satisfies_split_conditions<T>(i, a, b, got);
    if (stats.comparisons > bound) {
      t.within_bound = false;
      t.worst_excess = std::max<std::uint64_t>(t.worst_excess, stats.comparisons - bound);
    }
  };
  if (ranks) {
    for (auto i : *ranks) one(i);
  } else {
    for (std::size_t i = 0; i <= a.size() + b.size(); ++i) one(i);
  }
}

void criterion_1() {
  report(1, "rotation matches oracle, n moves, no comparisons", 5, [](Check& c) {
    std::size_t cases = 0;
    for (std::size_t n = 0; n <= 64; ++n) {
      for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
        ipmsort::MoveCounter counter;
        std::vector<int> plain(n);
        for (std::size_t p = 0; p < n; ++p) plain[p] = static_cast<int>(p);
        std::vector<ipmsort::MoveCounted<int>> v;
        for (int x : plain) v.emplace_back(x, &counter);
        counter = {};
        ipmsort::rotate_left(v, r);
        const auto want = ipmsort::testing::naive_rotate_oracle<int>(plain, r);
        bool same = v.size() == want.size();
        for (std::size_t p = 0; same && p < n; ++p) same = v[p].value() == want[p];
        const std::size_t expected_moves = (r == 0 || n == 0) ? 0 : n;
        c.expect(same, "output differs at n=" + std::to_string(n) + " r=" + std::to_string(r));
        c.expect(counter.assignments == expected_moves,
                 "move count at n=" + std::to_string(n) + " r=" + std::to_string(r));
        ++cases;
      }
    }
    // rotate_left takes no comparator, so the comparator call count is zero by construction
    return std::to_string(cases) + " (n, r) pairs, comparator calls 0";
  });
}

void criteria_2_and_3() {
  CoRankTally t;
  std::size_t instances = 0;
  const auto start = Clock::now();

  // exhaustive: every pair of sorted sequences, lengths <= 32, two-value keys
  {
    const auto seqs = all_sorted_up_to(32, 2);
    for (const auto& a : seqs) {
      for (const auto& b : seqs) {
        check_all_ranks<int>(a, b, t);
        ++instances;
      }
    }
  }
  // exhaustive: every pair of sorted sequences, lengths <= 8, four-value keys
  {
    const auto seqs = all_sorted_up_to(8, 4);
    for (const auto& a : seqs) {
      for (const auto& b : seqs) {
        check_all_ranks<int>(a, b, t);
        ++instances;
      }
    }
  }
  // every (nA, nB) <= 32 and every i, 64 random four-value key sets each
  std::mt19937_64 rng(20240601);
  for (std::size_t na = 0; na <= 32; ++na) {
    for (std::size_t nb = 0; nb <= 32; ++nb) {
      for (int s = 0; s < 64; ++s) {
        const auto a = random_sorted(rng, na, 4);
        const auto b = random_sorted(rng, nb, 4);
        check_all_ranks<int>(a, b, t);
        ++instances;
      }
    }
  }
  const std::uint64_t small_queries = t.queries;
  // 10^4 random large instances, nA + nB up to 10^6, log-uniform sizes
  std::size_t largest = 0;
  for (int s = 0; s < 10000; ++s) {
    auto log_uniform = [&](double hi) {
      return static_cast<std::size_t>(std::exp(std::uniform_real_distribution<double>(0, std::log(hi))(rng)));
    };
    const std::size_t na = log_uniform(5e5);
    const std::size_t nb = log_uniform(5e5);
    largest = std::max(largest, na + nb);
    const int universe = s % 2 == 0 ? 4 : 1 << 30;
    // nondecreasing by construction: a random walk with steps in [0, universe)
    auto walk = [&](std::size_t len) {
      std::vector<std::int64_t> v(len);
      std::int64_t x = 0;
      for (auto& y : v) {
        x += static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(universe == 4 ? 2 : 1000));
        y = x;
      }
      return v;
    };
    const auto a = walk(na);
    const auto b = walk(nb);
    std::vector<std::size_t> ranks{0, na + nb, (na + nb) / 2};
    for (int q = 0; q < 5; ++q) ranks.push_back(rng() % (na + nb + 1));
    check_all_ranks<std::int64_t>(a, b, t, &ranks);
    ++instances;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();

  const std::string summary = std::to_string(instances) + " instances, " + std::to_string(t.queries) +
                              " queries (" + std::to_string(small_queries) +
                              " exhaustive/systematic small, largest nA+nB " + std::to_string(largest) +
                              ")";
  report(2, "co_rank matches oracle, both conditions, j+k=i", 30, [&](Check& c) {
    c.expect(t.equal, "co_rank differs from oracle");
    c.expect(t.conditions, "split conditions violated");
    c.expect(t.sums, "j + k != i");
    return summary;
  }, secs);
  report(3, "co_rank comparisons <= 2(ceil(log2(nA+nB+1))+2)", 30, [&](Check& c) {
    c.expect(t.within_bound, "bound exceeded by " + std::to_string(t.worst_excess));
    return "checked on every query above";
  }, secs);
}

std::vector<E> adjacent_runs(std::mt19937_64& rng, std::size_t n1, std::size_t n2, int kind) {
  auto keys = [&](std::size_t len, std::uint64_t seed) {
    std::vector<double> v;
    switch (kind) {
      case 0: v = ipmsort::generate(len, Distribution::uniform(), seed); break;
      case 1: v = ipmsort::generate(len, Distribution::few_distinct(4), seed); break;
      case 2: v = ipmsort::generate(len, Distribution::sawtooth(7), seed); break;
      case 3: v = ipmsort::generate(len, Distribution::few_distinct(1), seed); break;
      default: v = ipmsort::generate(len, Distribution::few_distinct(64), seed); break;
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto k1 = keys(n1, rng());
  const auto k2 = keys(n2, rng());
  std::vector<E> out;
  for (double k : k1) out.push_back({static_cast<int>(k * 1000), out.size()});
  for (double k : k2) out.push_back({static_cast<int>(k * 1000), out.size()});
  return out;
}

void criterion_4() {
  report(4, "merge_inplace == merge_buffered, stable permutation", 60, [](Check& c) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = rng() % 2049;
      std::size_t n1 = 0;
      switch (trial % 6) {
        case 0: n1 = n / 2; break;
        case 1: n1 = std::min<std::size_t>(n, rng() % 4); break;
        case 2: n1 = n - std::min<std::size_t>(n, rng() % 4); break;
        case 3: n1 = n / 10; break;
        default: n1 = rng() % (n + 1); break;
      }
      const auto input = adjacent_runs(rng, n1, n - n1, trial % 5);
      auto buffered = input;
      ipmsort::merge_buffered(buffered, n1, KeyOrder{});
      auto inplace = input;
      ipmsort::merge_inplace(inplace, n1, KeyOrder{});
      c.expect(inplace == buffered, "outputs differ at trial " + std::to_string(trial));
      c.expect(ipmsort::verify_stable_permutation(input, inplace),
               "not a stable permutation at trial " + std::to_string(trial));
    }
    return std::string("1000 trials, n <= 2048, 5 key distributions, 6 skew patterns");
  });
}

void criterion_5() {
  report(5, "balanced merge comparisons(2n)/comparisons(n) <= 2.3", 120, [](Check& c) {
    std::vector<double> counts;
    std::string ratios;
    for (std::size_t n = std::size_t{1} << 12; n <= std::size_t{1} << 20; n *= 2) {
      auto v = ipmsort::generate(n, Distribution::uniform(), n);
      std::sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n / 2));
      std::sort(v.begin() + static_cast<std::ptrdiff_t>(n / 2), v.end());
      counts.push_back(static_cast<double>(ipmsort::count_inplace_merge_comparisons(v, n / 2)));
      c.expect(std::is_sorted(v.begin(), v.end()), "merge output unsorted at n=" + std::to_string(n));
      if (counts.size() > 1) {
        const double r = counts.back() / counts[counts.size() - 2];
        c.expect(r <= 2.3, "ratio " + std::to_string(r) + " at n=" + std::to_string(n));
        ratios += (ratios.empty() ? "" : " ") + fmt("%.3f", r);
      }
    }
    return fmt("comparisons/n at 2^20 = %.3f; ratios ", counts.back() / double(1 << 20)) + ratios;
  });
}

void criterion_6() {
  report(6, "sort comparison constants (c n log2 n fit)", 300, [](Check& c) {
    std::vector<ipmsort::FitPoint> buffered, inplace;
    for (std::size_t n = std::size_t{1} << 10; n <= std::size_t{1} << 20; n *= 2) {
      const auto input = ipmsort::generate(n, Distribution::uniform(), 6000 + n);
      auto b = input;
      SortStats sb;
      ipmsort::buffered_mergesort(b, ipmsort::NaturalOrder{}, &sb);
      auto p = input;
      SortStats sp;
      ipmsort::inplace_mergesort(p, ipmsort::NaturalOrder{}, &sp);
      c.expect(b == p && std::is_sorted(p.begin(), p.end()), "sort outputs wrong at n=" + std::to_string(n));
      buffered.push_back({static_cast<double>(n), static_cast<double>(sb.comparisons)});
      inplace.push_back({static_cast<double>(n), static_cast<double>(sp.comparisons)});
    }
    const auto fb = ipmsort::fit_constant(buffered, ipmsort::ComplexityModel::NLogN);
    const auto fi = ipmsort::fit_constant(inplace, ipmsort::ComplexityModel::NLogN);
    const double ratio = fi.c / fb.c;
    c.expect(fb.c >= 0.80 && fb.c <= 1.10, "buffered c out of [0.80, 1.10]");
    c.expect(fi.c >= 1.80 && fi.c <= 3.00, "in-place c out of [1.80, 3.00]");
    c.expect(ratio >= 1.8 && ratio <= 3.2, "ratio out of [1.8, 3.2]");
    return fmt("buffered c=%.4f (res %.4f), in-place c=%.4f (res %.4f)", fb.c, fb.residual, fi.c, fi.residual) +
           fmt(", ratio %.3f", ratio);
  });
}

void criterion_7() {
  report(7, "merge depth <= ceil(log2 n)+2, no heap allocation in-place", 60, [](Check& c) {
    const std::vector<std::pair<const char*, Distribution>> dists{
        {"uniform", Distribution::uniform()},          {"sorted", Distribution::presorted()},
        {"reversed", Distribution::reversed()},        {"sawtooth/2", Distribution::sawtooth(2)},
        {"sawtooth/1000", Distribution::sawtooth(1000)}, {"fewdistinct/16", Distribution::few_distinct(16)},
        {"fewdistinct/1", Distribution::few_distinct(1)}};
    std::size_t worst_slack = 1000;
    for (const auto& [name, dist] : dists) {
      for (std::size_t n : {1000u, 31623u, 1000000u}) {
        auto v = ipmsort::generate(n, dist, 7);
        SortStats stats;
        ipmsort::inplace_mergesort(v, ipmsort::NaturalOrder{}, &stats);
        const std::size_t bound = ceil_log2(n) + 2;
        c.expect(std::is_sorted(v.begin(), v.end()), std::string("unsorted ") + name);
        c.expect(stats.max_merge_depth <= bound,
                 std::string(name) + " n=" + std::to_string(n) + " depth " + std::to_string(stats.max_merge_depth));
        worst_slack = std::min(worst_slack, bound - std::min(bound, stats.max_merge_depth));
      }
    }
    // adversarial skew: single outliers and lopsided runs merged directly
    const std::size_t n = 1000000;
    for (std::size_t n1 : {std::size_t{1}, n - 1, std::size_t{1000}, n - 1000}) {
      for (bool low_first : {false, true}) {
        std::vector<double> v(n);
        for (std::size_t p = 0; p < n; ++p) v[p] = static_cast<double>(p);
        // make run 1 all-large or run 2 all-small so every element crosses over
        if (!low_first) {
          for (std::size_t p = 0; p < n1; ++p) v[p] += static_cast<double>(n);
        } else {
          for (std::size_t p = n1; p < n; ++p) v[p] -= static_cast<double>(n);
        }
        ipmsort::MergeDepthGauge gauge;
        ipmsort::merge_inplace(v, n1, ipmsort::NaturalOrder{}, gauge);
        c.expect(std::is_sorted(v.begin(), v.end()), "skew merge unsorted");
        c.expect(gauge.max <= ceil_log2(n) + 2, "skew n1=" + std::to_string(n1) + " depth " + std::to_string(gauge.max));
      }
    }
    // heap allocations during an instrumented in-place sort of 10^6 elements
    auto v = ipmsort::generate(n, Distribution::uniform(), 77);
    SortStats stats;
    g_allocations = 0;
    g_track_allocations = true;
    ipmsort::inplace_mergesort(v, ipmsort::NaturalOrder{}, &stats);
    g_track_allocations = false;
    const std::size_t inplace_allocs = g_allocations;
    auto w = ipmsort::generate(n, Distribution::uniform(), 77);
    g_allocations = 0;
    g_track_allocations = true;
    ipmsort::buffered_mergesort(w);
    g_track_allocations = false;
    c.expect(inplace_allocs == 0, std::to_string(inplace_allocs) + " allocations in the in-place sort");
    return "7 distributions x 3 sizes + 8 skew merges at 10^6, min slack " + std::to_string(worst_slack) +
           ", in-place allocations " + std::to_string(inplace_allocs) + " (buffered: " +
           std::to_string(g_allocations) + ")";
  });
}

void criterion_8() {
  report(8, "bit-identical counts across 10 repetitions", 60, [](Check& c) {
    std::string detail;
    for (auto algo : {ipmsort::Algorithm::InPlace, ipmsort::Algorithm::Buffered}) {
      ipmsort::BenchConfig config;
      config.algorithm = algo;
      config.n = 1000000;
      config.seed = 8;
      config.reps = 10;
      config.count_mode = true;
      config.fixed_seed = true;
      const auto records = ipmsort::run_benchmark(config);
      double lo = 1e300, hi = 0;
      for (std::size_t rep = 0; rep < 10; ++rep) {
        c.expect(records[rep].verified, "unverified rep");
        c.expect(records[rep].comparisons == records[0].comparisons, "comparison count differs");
        c.expect(records[rep].moves == records[0].moves, "move count differs");
        lo = std::min(lo, *records[rep].seconds);
        hi = std::max(hi, *records[rep].seconds);
      }
      detail += std::string(detail.empty() ? "" : "; ") + std::string(ipmsort::algorithm_name(algo)) +
                " comparisons " + std::to_string(*records[0].comparisons) + " moves " +
                std::to_string(*records[0].moves) +
                fmt(", seconds spread %.1f%% (reported only)", 100.0 * (hi - lo) / lo);
    }
    return detail;
  });
}

void criterion_9() {
  report(9, "select_merged equals brute-force stable merge", 10, [](Check& c) {
    std::uint64_t queries = 0;
    const auto seqs = all_sorted_up_to(16, 3);
    for (const auto& ka : seqs) {
      std::vector<E> a;
      for (int k : ka) a.push_back({k, a.size()});
      for (const auto& kb : seqs) {
        std::vector<E> b;
        for (int k : kb) b.push_back({k, 100 + b.size()});
        const auto merged = ipmsort::testing::stable_merge_oracle<E>(a, b, KeyOrder{});
        for (std::size_t i = 0; i < merged.size(); ++i) {
          ++queries;
          if (!(ipmsort::select_merged(i, a, b, KeyOrder{}) == merged[i])) {
            c.expect(false, "mismatch at i=" + std::to_string(i));
          }
        }
      }
    }
    return "all sorted A, B with nA, nB <= 16 over 3 keys (" + std::to_string(seqs.size()) + "^2 pairs), " +
           std::to_string(queries) + " queries";
  });
}

void criterion_10() {
  report(10, "desk-scale substitutes (informational, not gated)", 300, [](Check& c) {
    const std::size_t n = 1000000;
    auto run = [&](ipmsort::Algorithm algo, bool attribute) {
      ipmsort::BenchConfig config;
      config.algorithm = algo;
      config.n = n;
      config.seed = 10;
      config.reps = 3;
      config.attribute_phases = attribute;
      return ipmsort::run_benchmark(config).back();
    };
    const auto inplace = run(ipmsort::Algorithm::InPlace, false);
    const auto buffered = run(ipmsort::Algorithm::Buffered, false);
    const auto system = run(ipmsort::Algorithm::System, false);
    const auto phases = run(ipmsort::Algorithm::InPlace, true);
    c.expect(inplace.verified && buffered.verified && system.verified && phases.verified, "unverified run");
    return fmt("n=10^6 median seconds: in-place %.3f, buffered %.3f, std::sort %.3f", *inplace.seconds,
               *buffered.seconds, *system.seconds) +
           fmt("; in-place/buffered %.2fx, in-place/std::sort %.2fx", *inplace.seconds / *buffered.seconds,
               *inplace.seconds / *system.seconds) +
           fmt("; attributed co-rank %.3fs, rotation %.3fs", *phases.corank_seconds, *phases.rotation_seconds);
  });
}

}  // namespace

int main() {
  criterion_1();
  criteria_2_and_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures);
  return g_failures == 0 ? 0 : 1;
}
