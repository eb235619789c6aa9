#pragma once

#include <cstddef>
#include <vector>

#include "onestep/ssa.hpp"

namespace onestep {

/// Values of one trajectory on a shared time grid: values[k][i] is species i
/// at times[k].
struct SampledSeries {
  std::vector<double> times;
  std::vector<std::vector<double>> values;
};

/// Piecewise-constant (left-continuous jump) sampling: the value at time t is
/// the state of the last jump at or before t. Sample times must be
/// non-decreasing and non-negative.
SampledSeries sample_trajectory(const Trajectory& trajectory, const std::vector<double>& times);

struct EnsembleStats {
  std::vector<double> times;
  std::vector<std::vector<double>> mean;            // [time][species]
  std::vector<std::vector<double>> variance;        // unbiased, N-1
  std::vector<std::vector<double>> standard_error;  // sqrt(variance / N)
  std::size_t replicas = 0;
};

/// Requires at least two replicas, all on the identical time grid.
EnsembleStats ensemble_stats(const std::vector<SampledSeries>& ensemble);

}  // namespace onestep
