#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "onestep/evolve.hpp"
#include "onestep/lattice.hpp"
#include "onestep/ssa.hpp"
#include "onestep/stats.hpp"

namespace onestep {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

using MetadataList = std::vector<std::pair<std::string, std::string>>;

/// "# key: value" comment lines, one per pair, emitted before CSV headers.
void write_metadata_comments(std::ostream& out, const MetadataList& metadata);

/// Header `t,<species...>`, one row per record.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          const std::vector<std::string>& species, const MetadataList& metadata);

/// Same schema as write_trajectory_csv, for real-valued sampled series.
void write_series_csv(std::ostream& out, const SampledSeries& series,
                      const std::vector<std::string>& species, const MetadataList& metadata);

/// Header `t,mean_<s>...,var_<s>...,se_<s>...`.
void write_stats_csv(std::ostream& out, const EnsembleStats& stats,
                     const std::vector<std::string>& species, const MetadataList& metadata);

/// Header `state_index,<counts...>,p`.
void write_distribution_csv(std::ostream& out, const ProbabilityDistribution& dist,
                            const TruncatedLattice& lattice,
                            const std::vector<std::string>& species, const MetadataList& metadata);

}  // namespace onestep
