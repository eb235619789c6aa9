#include "onestep/io.hpp"

#include <charconv>

#include "onestep/errors.hpp"

namespace onestep {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void write_metadata_comments(std::ostream& out, const MetadataList& metadata) {
  for (const auto& [key, value] : metadata) {
    out << "# " << key << ": " << value << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          const std::vector<std::string>& species, const MetadataList& metadata) {
  write_metadata_comments(out, metadata);
  out << 't';
  for (const auto& name : species) out << ',' << name;
  out << '\n';
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    out << format_double(trajectory.times[k]);
    for (const auto count : trajectory.states[k]) out << ',' << count;
    out << '\n';
  }
}

void write_series_csv(std::ostream& out, const SampledSeries& series,
                      const std::vector<std::string>& species, const MetadataList& metadata) {
  write_metadata_comments(out, metadata);
  out << 't';
  for (const auto& name : species) out << ',' << name;
  out << '\n';
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    out << format_double(series.times[k]);
    for (const double value : series.values[k]) out << ',' << format_double(value);
    out << '\n';
  }
}

void write_stats_csv(std::ostream& out, const EnsembleStats& stats,
                     const std::vector<std::string>& species, const MetadataList& metadata) {
  write_metadata_comments(out, metadata);
  out << 't';
  for (const auto& name : species) out << ",mean_" << name;
  for (const auto& name : species) out << ",var_" << name;
  for (const auto& name : species) out << ",se_" << name;
  out << '\n';
  for (std::size_t k = 0; k < stats.times.size(); ++k) {
    out << format_double(stats.times[k]);
    for (const double value : stats.mean[k]) out << ',' << format_double(value);
    for (const double value : stats.variance[k]) out << ',' << format_double(value);
    for (const double value : stats.standard_error[k]) out << ',' << format_double(value);
    out << '\n';
  }
}

void write_distribution_csv(std::ostream& out, const ProbabilityDistribution& dist,
                            const TruncatedLattice& lattice,
                            const std::vector<std::string>& species, const MetadataList& metadata) {
  if (dist.p.size() != lattice.size()) throw DomainError("distribution size mismatch");
  write_metadata_comments(out, metadata);
  out << "state_index";
  for (const auto& name : species) out << ',' << name;
  out << ",p\n";
  for (std::size_t index = 0; index < dist.p.size(); ++index) {
    out << index;
    for (const auto count : lattice.state_of(index)) out << ',' << count;
    out << ',' << format_double(dist.p[index]) << '\n';
  }
}

}  // namespace onestep
