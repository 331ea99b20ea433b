#include <benchmark/benchmark.h>

#include <random>

#include "simpmon/bisimplicial.hpp"
#include "simpmon/finite_monoid.hpp"
#include "simpmon/kernels.hpp"
#include "simpmon/simplicial_set.hpp"
#include "simpmon/smith.hpp"

using namespace simpmon;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "omp"); }

// An associative table exercises the full n^3 scan.
void BM_Associativity(benchmark::State& state) {
  const FiniteMonoid m = direct_product(rectangular_band_with_unit(6, 6), cyclic_group(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::find_nonassociative_triple(m.flat_table(), m.size(), exec_of(state)));
  label(state);
}

void BM_RowsAxpy(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<SparseRow> rows(2000);
  for (auto& r : rows)
    for (std::size_t c = 0; c < 400; c += 1 + rng() % 8) r.push_back({c, Integer(static_cast<long>(rng() % 9) + 1)});
  std::vector<std::size_t> targets;
  std::vector<Integer> factors;
  for (std::size_t t = 1; t < rows.size(); ++t) {
    targets.push_back(t);
    factors.emplace_back(static_cast<long>(t % 5) - 2);
  }
  for (auto _ : state) {
    auto copy = rows;
    kernels::rows_axpy(copy, targets, factors, rows[0], exec_of(state));
    benchmark::DoNotOptimize(copy);
  }
  label(state);
}

void BM_NormalizedChains(benchmark::State& state) {
  const SimplicialSetTrunc d = diagonal(build_S(5, 5));
  for (auto _ : state) benchmark::DoNotOptimize(normalized_chains(d, exec_of(state)));
  label(state);
}

void BM_SmithDiagonalBoundary(benchmark::State& state) {
  const SparseIntMatrix d5 = normalized_chains(diagonal(build_S(5, 5))).boundary(5);
  SmithOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d5, opts));
  label(state);
}

}  // namespace

BENCHMARK(BM_Associativity)->Arg(0)->Arg(1);
BENCHMARK(BM_RowsAxpy)->Arg(0)->Arg(1);
BENCHMARK(BM_NormalizedChains)->Arg(0)->Arg(1);
BENCHMARK(BM_SmithDiagonalBoundary)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
