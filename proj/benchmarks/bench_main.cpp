#include <benchmark/benchmark.h>

#include "wordhom/complex.hpp"
#include "wordhom/filler.hpp"
#include "wordhom/genpos.hpp"
#include "wordhom/group.hpp"
#include "wordhom/homology.hpp"
#include "wordhom/smith.hpp"

#include <random>

using namespace wordhom;

static void BM_SmithInjectiveTop(benchmark::State& state) {
  const auto cx = build_injective(static_cast<int>(state.range(0)));
  const auto& d = cx.boundary_matrix(cx.top_degree());
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d));
  state.counters["rows"] = static_cast<double>(d.rows());
  state.counters["cols"] = static_cast<double>(d.cols());
}
BENCHMARK(BM_SmithInjectiveTop)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> val(-5, 5);
  std::bernoulli_distribution keep(0.1);
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(rng)) entries.push_back({i, j, Integer(val(rng))});
  const auto m = SparseIntMatrix::from_triplets(n, n, entries);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

static void BM_BuildGpVec(benchmark::State& state) {
  VectorRelation G(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_gp(G, Word{}));
}
BENCHMARK(BM_BuildGpVec)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_GpVecQuery(benchmark::State& state) {
  const auto A = Alphabet::vectors(3, static_cast<int>(state.range(0)));
  const auto syms = A.symbols();
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, syms.size() - 1);
  std::vector<std::pair<Word, Word>> queries(256);
  for (auto& [x, y] : queries) {
    for (int i = 0; i < 3; ++i) x.push_back(syms[pick(rng)]);
    for (int i = 0; i < 2; ++i) y.push_back(syms[pick(rng)]);
  }
  for (auto _ : state)
    for (const auto& [x, y] : queries) benchmark::DoNotOptimize(gp_vec(A, x, y));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * queries.size()));
}
BENCHMARK(BM_GpVecQuery)->DenseRange(2, 4);

static void BM_GpOrder(benchmark::State& state) {
  VectorRelation G(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(gp_order(G));
}
BENCHMARK(BM_GpOrder)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_FillInjective(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<Chain> cycles;
  std::mt19937_64 rng(3);
  const auto cx = build_injective(m);
  std::uniform_int_distribution<std::size_t> pick(0, cx.basis(m - 1).size() - 1);
  for (int t = 0; t < 16; ++t) {
    Chain c(m - 1);
    for (int k = 0; k < 3; ++k) c.add(cx.basis(m - 1)[pick(rng)], 1);
    cycles.push_back(boundary(c));
  }
  for (auto _ : state)
    for (const auto& c : cycles) benchmark::DoNotOptimize(fill_injective(c, m));
}
BENCHMARK(BM_FillInjective)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_BarHomologyS4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sym_homology(4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BarHomologyS4)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
