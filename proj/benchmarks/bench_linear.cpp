#include <benchmark/benchmark.h>

#include <cstdint>

#include "altdiam/linear.hpp"

namespace {

std::uint64_t xorshift(std::uint64_t& state) {
  state ^= state << 13;
  state ^= state >> 7;
  state ^= state << 17;
  return state;
}

// Identity times random row operations: invertible by construction.
altdiam::FieldMatrix random_invertible(const altdiam::PrimeField& field, int n,
                                       std::uint64_t seed) {
  auto a = altdiam::FieldMatrix::identity(field, n);
  for (int k = 0; k < 4 * n; ++k) {
    const int t = static_cast<int>(xorshift(seed) % static_cast<std::uint64_t>(n));
    const int s = static_cast<int>(xorshift(seed) % static_cast<std::uint64_t>(n));
    const auto c = static_cast<std::uint32_t>(xorshift(seed) % field.p());
    if (t != s) a.row_addmul(t, s, c);
  }
  return a;
}

void BM_decompose_linear(benchmark::State& state) {
  const altdiam::PrimeField field(65521);
  const int n = static_cast<int>(state.range(0));
  const auto a = random_invertible(field, n, 3);
  const altdiam::BlockSplit split{n / 2, n - n / 2};
  for (auto _ : state) benchmark::DoNotOptimize(altdiam::decompose_linear(a, split));
}

void BM_matrix_inverse(benchmark::State& state) {
  const altdiam::PrimeField field(65521);
  const int n = static_cast<int>(state.range(0));
  const auto a = random_invertible(field, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(altdiam::inverse(a));
}

void BM_matrix_multiply(benchmark::State& state) {
  const altdiam::PrimeField field(65521);
  const int n = static_cast<int>(state.range(0));
  const auto a = random_invertible(field, n, 9);
  const auto b = random_invertible(field, n, 13);
  for (auto _ : state) benchmark::DoNotOptimize(altdiam::multiply(a, b));
}

}  // namespace

BENCHMARK(BM_decompose_linear)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_matrix_inverse)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_matrix_multiply)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
