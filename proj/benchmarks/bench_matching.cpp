#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "altdiam/matching.hpp"

namespace {

std::uint64_t xorshift(std::uint64_t& state) {
  state ^= state << 13;
  state ^= state >> 7;
  state ^= state << 17;
  return state;
}

// Sum of `reg` random permutation matrices: doubly reg-regular by construction.
std::vector<std::vector<int>> random_regular(int n, int reg, std::uint64_t seed) {
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
  std::vector<int> perm(n);
  for (int r = 0; r < reg; ++r) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[xorshift(seed) % static_cast<std::uint64_t>(i + 1)]);
    for (int a = 0; a < n; ++a) ++entries[a][perm[a]];
  }
  return entries;
}

void BM_hall_matching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto entries = random_regular(n, n / 2 + 1, 42);
  for (auto _ : state) {
    auto N = altdiam::MultiplicityMatrix::from_entries(entries);
    benchmark::DoNotOptimize(altdiam::hall_matching(N));
  }
}

}  // namespace

BENCHMARK(BM_hall_matching)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
