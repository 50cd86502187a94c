// Serial against parallel kernels: Smith form and chain-complex assembly.
#include "homzero/abelian.hpp"
#include "homzero/homology.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace homzero;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 131 + cols);
  std::uniform_int_distribution<int> d(-3, 3);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

FiniteSemigroup cyclic(std::size_t order) {
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) t[i][j] = (i + j) % order;
  return FiniteSemigroup::from_table(t);
}

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::parallel : Execution::serial; }

void BM_SmithForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n, n + n / 4);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m, mode(state)));
}

void BM_ZeroComplex(benchmark::State& state) {
  const auto s = adjoin_zero(cyclic(static_cast<std::size_t>(state.range(0))));
  const auto a = trivial_module(s, FGAbelianGroup::free(2));
  for (auto _ : state) benchmark::DoNotOptimize(zero_chain_complex(s, a, 4, mode(state)));
}

void BM_ZeroHomology(benchmark::State& state) {
  const auto s = adjoin_zero(cyclic(static_cast<std::size_t>(state.range(0))));
  const auto a = trivial_module(s, FGAbelianGroup::free(1));
  for (auto _ : state) benchmark::DoNotOptimize(zero_homology(s, a, 2, mode(state)));
}

}  // namespace

BENCHMARK(BM_SmithForm)->ArgsProduct({{40, 80, 160}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZeroComplex)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZeroHomology)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
