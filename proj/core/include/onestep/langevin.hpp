#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "onestep/matrix.hpp"
#include "onestep/rng.hpp"
#include "onestep/scheme.hpp"
#include "onestep/stats.hpp"
#include "onestep/stochastization.hpp"

namespace onestep {

/// What to do when the diffusion matrix stops being positive semidefinite
/// along a path: strict aborts with NotPositiveSemidefinite (the offending
/// state and time attached), clamp drops the noise term for that step and
/// counts the event.
enum class NoisePolicy { strict, clamp };

NoisePolicy noise_policy_from_string(std::string_view text);
std::string to_string(NoisePolicy policy);

/// Factor B = b b^T via symmetric eigendecomposition. Columns are
/// sqrt(lambda) * v for eigenvalues above 1e-12, ordered by descending
/// eigenvalue; the returned matrix is n x m with m the retained rank (m = 0
/// yields an empty matrix). Eigenvalues below -1e-10 raise
/// NotPositiveSemidefinite. For n = 1 this reduces to b = sqrt(B).
Matrix diffusion_factor(const Matrix& diffusion);

struct SdeModel {
  const InteractionScheme* scheme = nullptr;
  Convention convention = Convention::paper;
  NoisePolicy policy = NoisePolicy::strict;
  bool noise = true;  // false integrates the plain Euler drift flow
};

struct SdeTrajectory {
  SampledSeries series;                       // times k*dt, one row per step
  std::size_t invalid_diffusion_events = 0;   // clamp policy only
  std::size_t floor_clamps = 0;               // components clipped at zero
};

/// Euler-Maruyama with increments b * eps * sqrt(dt), eps standard normal,
/// one draw per retained noise dimension per step. Components are floored at
/// zero after each step. With noise disabled the update is exactly
/// x + drift * dt.
SdeTrajectory euler_maruyama(const SdeModel& model, const std::vector<double>& x0, double dt,
                             std::size_t steps, Rng& rng);

SdeTrajectory euler_maruyama(const SdeModel& model, const std::vector<double>& x0, double dt,
                             std::size_t steps, std::uint64_t seed);

}  // namespace onestep
