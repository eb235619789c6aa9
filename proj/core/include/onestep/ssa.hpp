#pragma once

#include <cstdint>
#include <vector>

#include "onestep/rng.hpp"
#include "onestep/scheme.hpp"

namespace onestep {

/// One jump-process sample path. times[0] = 0 with the initial state, then
/// one record per executed jump; the state holds the final value from the
/// last recorded time until t_end.
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
};

/// Gillespie direct method on the exact combinatorial propensities. Channel
/// order is interaction 0 forward, interaction 0 backward, interaction 1
/// forward, and so on. Stops early when every channel rate is zero.
Trajectory ssa_sample(const InteractionScheme& scheme, const State& x0, double t_end, Rng& rng);

Trajectory ssa_sample(const InteractionScheme& scheme, const State& x0, double t_end,
                      std::uint64_t seed);

}  // namespace onestep
