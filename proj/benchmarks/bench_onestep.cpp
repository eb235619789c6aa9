#include <benchmark/benchmark.h>

#include <cstdint>

#include "onestep/evolve.hpp"
#include "onestep/fock.hpp"
#include "onestep/generator.hpp"
#include "onestep/langevin.hpp"
#include "onestep/lattice.hpp"
#include "onestep/liouville.hpp"
#include "onestep/rng.hpp"
#include "onestep/scheme_parser.hpp"
#include "onestep/ssa.hpp"
#include "onestep/stochastization.hpp"

using namespace onestep;

namespace {

const char* kLogisticSource = "X -> 2X @ 2.0 ~ 0.1\nX -> 0 @ 1.0\n";

const InteractionScheme& logistic() {
  static const InteractionScheme scheme = parse_scheme(kLogisticSource);
  return scheme;
}

void BM_ParseScheme(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_scheme(kLogisticSource));
  }
}
BENCHMARK(BM_ParseScheme);

void BM_NormalOrderedProduct(benchmark::State& state) {
  const NormalOrderedPoly p = build_liouville(logistic()).poly;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(p, p));
  }
}
BENCHMARK(BM_NormalOrderedProduct);

void BM_GeneratorAssembly(benchmark::State& state) {
  const TruncatedLattice lattice({state.range(0)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_generator(logistic(), lattice));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeneratorAssembly)->Arg(16)->Arg(64)->Arg(256)->Complexity();

void BM_RationalGeneratorAssembly(benchmark::State& state) {
  const TruncatedLattice lattice({state.range(0)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_generator_rational(logistic(), lattice));
  }
}
BENCHMARK(BM_RationalGeneratorAssembly)->Arg(64);

void BM_OperatorRouteGenerator(benchmark::State& state) {
  const TruncatedLattice lattice({state.range(0)});
  const NormalOrderedPoly poly = build_liouville(logistic()).poly;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generator_from_liouville(poly, lattice));
  }
}
BENCHMARK(BM_OperatorRouteGenerator)->Arg(16)->Arg(64);

void BM_MasterEquationEvolve(benchmark::State& state) {
  const TruncatedLattice lattice({64});
  const GeneratorMatrix generator = build_generator(logistic(), lattice);
  const double dt = suggest_dt(generator);
  const ProbabilityDistribution initial = delta_distribution(lattice, {10});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(initial, generator, 100 * dt, dt));
  }
}
BENCHMARK(BM_MasterEquationEvolve);

void BM_SsaTrajectory(benchmark::State& state) {
  std::uint64_t replica = 0;
  for (auto _ : state) {
    Rng rng = Rng::substream(1, replica++);
    benchmark::DoNotOptimize(ssa_sample(logistic(), {10}, 5.0, rng));
  }
}
BENCHMARK(BM_SsaTrajectory);

void BM_LangevinPath(benchmark::State& state) {
  SdeModel model;
  model.scheme = &logistic();
  model.policy = NoisePolicy::clamp;
  std::uint64_t replica = 0;
  for (auto _ : state) {
    Rng rng = Rng::substream(2, replica++);
    benchmark::DoNotOptimize(euler_maruyama(model, {10.0}, 0.01, 500, rng));
  }
}
BENCHMARK(BM_LangevinPath);

}  // namespace

BENCHMARK_MAIN();
