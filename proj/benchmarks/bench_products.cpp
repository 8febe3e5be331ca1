#include <benchmark/benchmark.h>

#include <memory>

#include "dyckm/paths.hpp"
#include "dyckm/posets.hpp"
#include "dyckm/tamari.hpp"
#include "dyckm/trees.hpp"

using namespace dyckm;

namespace {

// All basis products of degrees (n, r) summing to `total`, fresh memo per run.
void BM_TreeProducts(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), total = static_cast<int>(state.range(1));
  for (auto _ : state) {
    TreeAlgebra algebra(m);
    std::size_t terms = 0;
    for (int n = 1; n < total; ++n)
      for (const auto& t : algebra.basis(n))
        for (const auto& w : algebra.basis(total - n))
          for (int i = 0; i <= m; ++i) terms += algebra.product(t, w, i).size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_TreeProducts)->Args({1, 6})->Args({2, 5})->Args({3, 4});

void BM_PathProducts(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), total = static_cast<int>(state.range(1));
  std::vector<std::vector<DyckPath>> basis(total);
  for (int n = 1; n < total; ++n) basis[n] = enumerate_paths(m, n);
  for (auto _ : state) {
    std::size_t terms = 0;
    for (int n = 1; n < total; ++n)
      for (const auto& p : basis[n])
        for (const auto& q : basis[total - n])
          for (int i = 0; i <= m; ++i) terms += path_product(p, q, i).size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_PathProducts)->Args({1, 7})->Args({2, 6})->Args({3, 5});

void BM_TamariLattice(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(m, n).interval_count());
}
BENCHMARK(BM_TamariLattice)->Args({1, 7})->Args({2, 5})->Args({3, 4});

void BM_AxiomsTrees(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_dyck_axioms(make_tree_oracle(m), 5).cases);
}
BENCHMARK(BM_AxiomsTrees)->Arg(1)->Arg(2)->Arg(3);

void BM_AxiomsPaths(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_dyck_axioms(make_path_oracle(m), 5).cases);
}
BENCHMARK(BM_AxiomsPaths)->Arg(1)->Arg(2)->Arg(3);

void BM_DendriformPoset(benchmark::State& state) {
  const auto family = make_binary_tree_family(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_dendriform_poset(*family, static_cast<int>(state.range(0))).conditions[1].cases);
}
BENCHMARK(BM_DendriformPoset)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
