#include "onestep/stats.hpp"

#include <cmath>

#include "onestep/errors.hpp"

namespace onestep {

SampledSeries sample_trajectory(const Trajectory& trajectory, const std::vector<double>& times) {
  if (trajectory.times.empty() || trajectory.times.size() != trajectory.states.size()) {
    throw DomainError("malformed trajectory");
  }
  SampledSeries series;
  series.times = times;
  series.values.reserve(times.size());
  std::size_t cursor = 0;
  double previous = 0.0;
  for (const double t : times) {
    if (t < 0.0 || t < previous) throw DomainError("sample times must be non-decreasing and non-negative");
    previous = t;
    while (cursor + 1 < trajectory.times.size() && trajectory.times[cursor + 1] <= t) ++cursor;
    const State& state = trajectory.states[cursor];
    std::vector<double> row(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) row[i] = static_cast<double>(state[i]);
    series.values.push_back(std::move(row));
  }
  return series;
}

EnsembleStats ensemble_stats(const std::vector<SampledSeries>& ensemble) {
  if (ensemble.size() < 2) throw DomainError("ensemble statistics need at least two replicas");
  const SampledSeries& first = ensemble.front();
  const std::size_t points = first.times.size();
  const std::size_t dims = points == 0 ? 0 : first.values.front().size();
  for (const SampledSeries& series : ensemble) {
    if (series.times != first.times) throw DomainError("replicas sampled on mismatched time grids");
    if (series.values.size() != points) throw DomainError("malformed sampled series");
    for (const auto& row : series.values) {
      if (row.size() != dims) throw DomainError("malformed sampled series");
    }
  }

  const double n = static_cast<double>(ensemble.size());
  EnsembleStats stats;
  stats.times = first.times;
  stats.replicas = ensemble.size();
  stats.mean.assign(points, std::vector<double>(dims, 0.0));
  stats.variance.assign(points, std::vector<double>(dims, 0.0));
  stats.standard_error.assign(points, std::vector<double>(dims, 0.0));
  for (std::size_t k = 0; k < points; ++k) {
    for (std::size_t i = 0; i < dims; ++i) {
      double sum = 0.0;
      for (const SampledSeries& series : ensemble) sum += series.values[k][i];
      const double mean = sum / n;
      double squares = 0.0;
      for (const SampledSeries& series : ensemble) {
        const double d = series.values[k][i] - mean;
        squares += d * d;
      }
      const double variance = squares / (n - 1.0);
      stats.mean[k][i] = mean;
      stats.variance[k][i] = variance;
      stats.standard_error[k][i] = std::sqrt(variance / n);
    }
  }
  return stats;
}

}  // namespace onestep
