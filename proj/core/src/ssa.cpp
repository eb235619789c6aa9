#include "onestep/ssa.hpp"

#include "onestep/errors.hpp"
#include "onestep/stochastization.hpp"

namespace onestep {

Trajectory ssa_sample(const InteractionScheme& scheme, const State& x0, double t_end, Rng& rng) {
  if (!(t_end >= 0.0)) throw DomainError("t_end must be non-negative");
  const StepMatrix steps = step_operator(scheme);

  Trajectory trajectory;
  trajectory.times.push_back(0.0);
  trajectory.states.push_back(x0);

  State x = x0;
  double t = 0.0;
  while (true) {
    const auto rates = exact_propensities(scheme, x);
    double total = 0.0;
    for (const auto& pair : rates) total += pair.forward + pair.backward;
    if (total <= 0.0) break;

    t += rng.exponential(total);
    if (t > t_end) break;

    const double pick = rng.uniform01() * total;
    double cumulative = 0.0;
    std::size_t chosen = 0;
    int direction = +1;
    bool found = false;
    for (std::size_t a = 0; a < rates.size() && !found; ++a) {
      cumulative += rates[a].forward;
      if (rates[a].forward > 0.0 && pick <= cumulative) {
        chosen = a;
        direction = +1;
        found = true;
        break;
      }
      cumulative += rates[a].backward;
      if (rates[a].backward > 0.0 && pick <= cumulative) {
        chosen = a;
        direction = -1;
        found = true;
      }
    }
    if (!found) {
      for (std::size_t a = rates.size(); a-- > 0;) {
        if (rates[a].backward > 0.0) {
          chosen = a;
          direction = -1;
          break;
        }
        if (rates[a].forward > 0.0) {
          chosen = a;
          direction = +1;
          break;
        }
      }
    }

    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] += direction * steps[chosen][i];
    }
    trajectory.times.push_back(t);
    trajectory.states.push_back(x);
  }
  return trajectory;
}

Trajectory ssa_sample(const InteractionScheme& scheme, const State& x0, double t_end,
                      std::uint64_t seed) {
  Rng rng(seed);
  return ssa_sample(scheme, x0, t_end, rng);
}

}  // namespace onestep
