#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "altdiam/decompose.hpp"
#include "altdiam/multi.hpp"

namespace {

std::uint64_t xorshift(std::uint64_t& state) {
  state ^= state << 13;
  state ^= state >> 7;
  state ^= state << 17;
  return state;
}

std::vector<int> random_table(int cells, std::uint64_t seed) {
  std::vector<int> table(cells);
  std::iota(table.begin(), table.end(), 0);
  for (int i = cells - 1; i > 0; --i)
    std::swap(table[i], table[xorshift(seed) % static_cast<std::uint64_t>(i + 1)]);
  return table;
}

void BM_decompose_two(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = altdiam::GridPermutation::from_table(n, n, random_table(n * n, 7));
  for (auto _ : state)
    benchmark::DoNotOptimize(altdiam::decompose_two(p, altdiam::StageOrder::RLR));
}

void BM_decompose_multi(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::vector<int> dims{d, d, d};
  const auto p = altdiam::MultiGridPermutation::from_table(dims, random_table(d * d * d, 11));
  for (auto _ : state) benchmark::DoNotOptimize(altdiam::decompose_multi(p));
}

}  // namespace

BENCHMARK(BM_decompose_two)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_decompose_multi)->Arg(3)->Arg(4)->Arg(6);
