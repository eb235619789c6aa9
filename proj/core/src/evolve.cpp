#include "onestep/evolve.hpp"

#include <cmath>
#include <sstream>

#include "onestep/errors.hpp"

namespace onestep {
namespace {

constexpr double kStabilityBound = 0.5;
constexpr double kDistributionTolerance = 1e-9;
constexpr double kNegativeTolerance = 1e-12;

void check_distribution(const std::vector<double>& p) {
  double sum = 0.0;
  for (const double value : p) {
    if (!(value >= 0.0)) throw DomainError("initial distribution has negative entries");
    sum += value;
  }
  if (std::abs(sum - 1.0) > kDistributionTolerance) {
    throw DomainError("initial distribution does not sum to 1");
  }
}

}  // namespace

ProbabilityDistribution delta_distribution(const TruncatedLattice& lattice, const State& state) {
  ProbabilityDistribution dist;
  dist.p.assign(lattice.size(), 0.0);
  dist.p[lattice.index_of(state)] = 1.0;
  return dist;
}

EvolveResult evolve(const ProbabilityDistribution& p0, const GeneratorMatrix& generator,
                    double duration, double dt) {
  if (p0.p.size() != generator.dimension()) throw DomainError("distribution size mismatch");
  if (!(duration >= 0.0)) throw DomainError("duration must be non-negative");
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  check_distribution(p0.p);

  EvolveResult result;
  result.dist = p0;
  if (duration == 0.0) return result;

  const double stiffness = dt * max_abs_diagonal(generator);
  if (stiffness > kStabilityBound) {
    std::ostringstream msg;
    msg << "dt too large for stable integration: dt * max|diagonal| = " << stiffness
        << " exceeds " << kStabilityBound;
    throw DomainError(msg.str());
  }

  const auto steps = static_cast<std::size_t>(std::ceil(duration / dt - 1e-12));
  std::vector<double>& p = result.dist.p;
  std::vector<double> k1, k2, k3, k4, work(p.size());
  for (std::size_t step = 0; step < steps; ++step) {
    const double h = (step + 1 == steps) ? duration - dt * static_cast<double>(step) : dt;
    apply_generator(generator, p, k1);
    for (std::size_t i = 0; i < p.size(); ++i) work[i] = p[i] + 0.5 * h * k1[i];
    apply_generator(generator, work, k2);
    for (std::size_t i = 0; i < p.size(); ++i) work[i] = p[i] + 0.5 * h * k2[i];
    apply_generator(generator, work, k3);
    for (std::size_t i = 0; i < p.size(); ++i) work[i] = p[i] + h * k3[i];
    apply_generator(generator, work, k4);
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }
  result.steps = steps;

  double raw_sum = 0.0;
  for (const double value : p) {
    if (value < -kNegativeTolerance) {
      throw DomainError("integration produced negative probabilities beyond tolerance");
    }
    raw_sum += value;
  }
  result.raw_mass = raw_sum;
  result.leakage = std::max(0.0, 1.0 - raw_sum);
  double clamped_sum = 0.0;
  for (double& value : p) {
    if (value < 0.0) value = 0.0;
    clamped_sum += value;
  }
  if (clamped_sum <= 0.0) throw DomainError("all probability mass leaked out of the lattice");
  for (double& value : p) value /= clamped_sum;
  result.dist.time = p0.time + duration;
  return result;
}

double suggest_dt(const GeneratorMatrix& generator) {
  const double scale = max_abs_diagonal(generator);
  if (scale == 0.0) return 0.1;
  return 0.4 / scale;
}

std::vector<double> distribution_mean(const ProbabilityDistribution& dist,
                                      const TruncatedLattice& lattice) {
  if (dist.p.size() != lattice.size()) throw DomainError("distribution size mismatch");
  std::vector<double> mean(lattice.arity(), 0.0);
  for (std::size_t index = 0; index < dist.p.size(); ++index) {
    if (dist.p[index] == 0.0) continue;
    const State state = lattice.state_of(index);
    for (std::size_t i = 0; i < mean.size(); ++i) {
      mean[i] += dist.p[index] * static_cast<double>(state[i]);
    }
  }
  return mean;
}

}  // namespace onestep
