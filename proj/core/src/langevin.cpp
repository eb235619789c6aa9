#include "onestep/langevin.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "onestep/errors.hpp"

namespace onestep {

namespace {

constexpr double kNegativeEigenvalueTolerance = 1e-10;
constexpr double kRankCutoff = 1e-12;
constexpr double kSymmetryTolerance = 1e-9;

}  // namespace

NoisePolicy noise_policy_from_string(std::string_view text) {
  if (text == "strict") return NoisePolicy::strict;
  if (text == "clamp") return NoisePolicy::clamp;
  throw DomainError("unknown noise policy: " + std::string(text));
}

std::string to_string(NoisePolicy policy) {
  return policy == NoisePolicy::strict ? "strict" : "clamp";
}

Matrix diffusion_factor(const Matrix& diffusion) {
  const std::size_t n = diffusion.rows;
  if (n == 0 || diffusion.cols != n) throw DomainError("diffusion matrix must be square");

  if (n == 1) {
    const double value = diffusion.at(0, 0);
    if (value < -kNegativeEigenvalueTolerance) throw NotPositiveSemidefinite(value);
    if (value <= kRankCutoff) return Matrix(1, 0);
    Matrix factor(1, 1);
    factor.at(0, 0) = std::sqrt(value);
    return factor;
  }

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(diffusion.at(i, j)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(diffusion.at(i, j) - diffusion.at(j, i)) > kSymmetryTolerance * (1.0 + scale)) {
        throw DomainError("diffusion matrix must be symmetric");
      }
    }
  }

  Eigen::MatrixXd sym(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sym(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          0.5 * (diffusion.at(i, j) + diffusion.at(j, i));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) throw DomainError("eigendecomposition failed");
  const auto& values = solver.eigenvalues();    // ascending
  const auto& vectors = solver.eigenvectors();

  if (values(0) < -kNegativeEigenvalueTolerance) throw NotPositiveSemidefinite(values(0));

  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) > kRankCutoff) ++rank;
  }
  Matrix factor(n, rank);
  std::size_t out = 0;
  for (Eigen::Index k = values.size(); k-- > 0;) {
    if (values(k) <= kRankCutoff) continue;
    const double root = std::sqrt(values(k));
    for (std::size_t i = 0; i < n; ++i) {
      factor.at(i, out) = root * vectors(static_cast<Eigen::Index>(i), k);
    }
    ++out;
  }
  return factor;
}

SdeTrajectory euler_maruyama(const SdeModel& model, const std::vector<double>& x0, double dt,
                             std::size_t steps, Rng& rng) {
  if (model.scheme == nullptr) throw DomainError("model has no scheme");
  if (x0.size() != model.scheme->species.size()) throw DomainError("x0 arity mismatch");
  if (!(dt > 0.0)) throw DomainError("dt must be positive");

  const std::size_t n = x0.size();
  const double sqrt_dt = std::sqrt(dt);
  SdeTrajectory trajectory;
  trajectory.series.times.reserve(steps + 1);
  trajectory.series.values.reserve(steps + 1);

  std::vector<double> x = x0;
  trajectory.series.times.push_back(0.0);
  trajectory.series.values.push_back(x);

  std::vector<double> noise_shift(n);
  for (std::size_t step = 0; step < steps; ++step) {
    const double t = dt * static_cast<double>(step);
    const DriftDiffusion dd = drift_diffusion(*model.scheme, x, model.convention);

    bool with_noise = false;
    Matrix factor;
    if (model.noise) {
      try {
        factor = diffusion_factor(dd.diffusion);
        with_noise = factor.cols > 0;
      } catch (NotPositiveSemidefinite& error) {
        if (model.policy == NoisePolicy::strict) {
          error.attach_state(x, t);
          throw;
        }
        ++trajectory.invalid_diffusion_events;
      }
    }

    if (with_noise) {
      noise_shift.assign(n, 0.0);
      for (std::size_t j = 0; j < factor.cols; ++j) {
        const double eps = rng.normal();
        for (std::size_t i = 0; i < n; ++i) {
          noise_shift[i] += factor.at(i, j) * eps;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        x[i] += dd.drift[i] * dt + noise_shift[i] * sqrt_dt;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        x[i] += dd.drift[i] * dt;
      }
    }
    for (double& value : x) {
      if (value < 0.0) {
        value = 0.0;
        ++trajectory.floor_clamps;
      }
    }
    trajectory.series.times.push_back(dt * static_cast<double>(step + 1));
    trajectory.series.values.push_back(x);
  }
  return trajectory;
}

SdeTrajectory euler_maruyama(const SdeModel& model, const std::vector<double>& x0, double dt,
                             std::size_t steps, std::uint64_t seed) {
  Rng rng(seed);
  return euler_maruyama(model, x0, dt, steps, rng);
}

}  // namespace onestep
