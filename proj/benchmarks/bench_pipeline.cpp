#include <benchmark/benchmark.h>

#include "bmres/ideal_io.hpp"
#include "bmres/lcm_lattice.hpp"
#include "bmres/matching.hpp"
#include "bmres/morse.hpp"
#include "bmres/search.hpp"
#include "bmres/taylor.hpp"
#include "bmres/verify.hpp"

namespace {

bmres::MonomialIdeal sample_ideal() {
  return bmres::parse_ideal_inline("x^2*y; y^2*z; x*z^2; x*y*z; z^3");
}

void BM_BuildTaylor(benchmark::State& state) {
  auto ideal = sample_ideal();
  for (auto _ : state) {
    auto complex = bmres::build_taylor(ideal);
    benchmark::DoNotOptimize(complex.ranks());
  }
}
BENCHMARK(BM_BuildTaylor);

void BM_BettiOracle(benchmark::State& state) {
  auto ideal = sample_ideal();
  bmres::LcmLattice lattice(ideal);
  for (auto _ : state) {
    auto betti = bmres::betti_oracle(ideal, lattice, bmres::Field::Rationals);
    benchmark::DoNotOptimize(betti.totals());
  }
}
BENCHMARK(BM_BettiOracle);

void BM_Pipeline(benchmark::State& state) {
  auto ideal = sample_ideal();
  bmres::SearchConfig cfg;
  for (auto _ : state) {
    auto report = bmres::main_theorem_pipeline(ideal, std::nullopt, cfg);
    benchmark::DoNotOptimize(report.certificate.minimal);
  }
}
BENCHMARK(BM_Pipeline);

}  // namespace

BENCHMARK_MAIN();
