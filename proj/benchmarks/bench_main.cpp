#include "symtope/corpus.hpp"
#include "symtope/groebner.hpp"
#include "symtope/invariants.hpp"

#include <benchmark/benchmark.h>

using namespace symtope;

namespace {

const SimplicialComplex &fx(const char *name) { return corpus_fixture(name).complex; }

void BM_SmithNormalForm(benchmark::State &state) {
  const IntegerMatrix a = boundary_map(fx("moore_z3"), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm);

void BM_TotalUnimodularity(benchmark::State &state) {
  const IntegerMatrix a = boundary_map(fx("cone_k33"), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_totally_unimodular(a));
}
BENCHMARK(BM_TotalUnimodularity);

void BM_HullBjorner(benchmark::State &state) {
  const IntegerMatrix a = top_boundary_map(fx("bjorner"));
  for (auto _ : state) {
    CSPolytope p(a); // fresh facet cache each iteration
    benchmark::DoNotOptimize(p.facets().size());
  }
}
BENCHMARK(BM_HullBjorner)->Unit(benchmark::kMillisecond);

void BM_LatticePoints(benchmark::State &state) {
  const CSPolytope p = homology_polytope(fx("bjorner"));
  const long k = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(lattice_points(p, k).total);
}
BENCHMARK(BM_LatticePoints)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GroebnerBjorner(benchmark::State &state) {
  const IntegerMatrix a = saturate(top_boundary_map(fx("bjorner")));
  for (auto _ : state)
    benchmark::DoNotOptimize(groebner_basis(a).size());
}
BENCHMARK(BM_GroebnerBjorner)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
