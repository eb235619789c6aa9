#pragma once

#include <cstddef>
#include <vector>

#include "onestep/generator.hpp"
#include "onestep/lattice.hpp"

namespace onestep {

struct ProbabilityDistribution {
  std::vector<double> p;
  double time = 0.0;
};

/// Point mass at `state`.
ProbabilityDistribution delta_distribution(const TruncatedLattice& lattice, const State& state);

struct EvolveResult {
  ProbabilityDistribution dist;
  double raw_mass = 1.0;  // total probability before clamping and renormalizing
  double leakage = 0.0;   // probability absorbed by the truncation boundary
  std::size_t steps = 0;
};

/// Integrates dp/dt = G p over `duration` with classic fourth-order
/// Runge-Kutta at fixed step `dt` (the final step is shortened to land on
/// the endpoint). Requires dt * max|diagonal| <= 0.5, otherwise throws
/// DomainError. The result is clamped at zero and renormalized; mass lost to
/// the absorbing boundary is reported as leakage.
EvolveResult evolve(const ProbabilityDistribution& p0, const GeneratorMatrix& generator,
                    double duration, double dt);

/// A step size that satisfies the stability requirement with margin.
double suggest_dt(const GeneratorMatrix& generator);

/// Expectation of the state under `dist`, one entry per species.
std::vector<double> distribution_mean(const ProbabilityDistribution& dist,
                                      const TruncatedLattice& lattice);

}  // namespace onestep
