#include <benchmark/benchmark.h>

#include <hydrosym/catalog.hpp>
#include <hydrosym/conserve.hpp>
#include <hydrosym/hydro.hpp>
#include <hydrosym/parser.hpp>
#include <hydrosym/symmetry.hpp>

using namespace hydrosym;

static void BM_CanonicalMultiply(benchmark::State& state) {
  init_standard_symbols();
  SymExpr a = parse_expr("R^2*S + x*t*R_x - eta1*eta2*psi_x*xi_x + exp(C1*t)");
  SymExpr b = parse_expr("S^2 - 2*R*S + t^(-2)*x");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CanonicalMultiply);

static void BM_StructureTable(benchmark::State& state) {
  const auto& gens = Catalog::instance().generators("susy");
  for (auto _ : state) benchmark::DoNotOptimize(structure_table(gens));
}
BENCHMARK(BM_StructureTable);

static void BM_InvarianceJ(benchmark::State& state) {
  PDESystem sys = classical_system();
  const VectorField& J = Catalog::instance().generator("classical", "J");
  for (auto _ : state) benchmark::DoNotOptimize(check_invariance(J, sys));
}
BENCHMARK(BM_InvarianceJ);

static void BM_DivergenceK6(benchmark::State& state) {
  ConservationPair pair = density_flux(6, true);
  for (auto _ : state) benchmark::DoNotOptimize(check_divergence(pair));
}
BENCHMARK(BM_DivergenceK6);

static void BM_NewtonInvert(benchmark::State& state) {
  ProfilePair quad = preset_pair("quadratic");
  for (auto _ : state)
    benchmark::DoNotOptimize(invert_map(2.5, 3.0, quad, 0.9, 2.1));
}
BENCHMARK(BM_NewtonInvert);

BENCHMARK_MAIN();
