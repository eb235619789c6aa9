#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "onestep/rational.hpp"

namespace onestep {

/// Particle counts per species. Index order matches SpeciesTable.
using State = std::vector<std::int64_t>;

/// Per-interaction state change, one row per interaction (products minus
/// reactants).
using StepMatrix = std::vector<std::vector<int>>;

/// Largest stoichiometric coefficient accepted anywhere. Keeps the
/// arrangement combinatorics (products of up to this many falling-factorial
/// terms) exact and cheap.
inline constexpr int kMaxStoichiometry = 16;

/// Ordered table of distinct species identifiers. Index order is declaration
/// order and is stable.
class SpeciesTable {
 public:
  SpeciesTable() = default;
  explicit SpeciesTable(std::vector<std::string> names);

  /// Appends a new species; throws ParseError-free std::invalid_argument on
  /// duplicates (the parser wraps this with a source location).
  std::size_t add(const std::string& name);

  std::optional<std::size_t> index_of(const std::string& name) const;
  const std::string& name(std::size_t index) const { return names_[index]; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

/// One reversible interaction channel: `reactants -> products` at
/// rate_forward, with the reverse direction at rate_backward (zero when the
/// channel is irreversible). Vectors are per-species stoichiometries.
struct Interaction {
  std::vector<int> reactants;  // counts consumed by the forward direction
  std::vector<int> products;   // counts produced by the forward direction
  Rational rate_forward = 0;   // 1/time
  Rational rate_backward = 0;  // 1/time

  std::vector<int> step() const;  // products - reactants
};

/// A validated set of interactions over a common species table.
struct InteractionScheme {
  SpeciesTable species;
  std::vector<Interaction> interactions;
  /// Named rate parameters bound in the source, kept for summaries.
  std::map<std::string, Rational> parameters;

  std::size_t order() const { return species.size(); }  // number of species
};

/// Per-interaction step vectors, one row per interaction. Every row is
/// guaranteed nonzero for a validated scheme.
StepMatrix step_operator(const InteractionScheme& scheme);

/// Checks the structural invariants: at least one interaction, consistent
/// vector lengths, non-negative stoichiometries within bounds, finite
/// non-negative rates, no no-op interactions. When `require_active_rates` is
/// set (the parser's contract) every interaction must also have
/// rate_forward + rate_backward > 0. Throws DomainError on violation.
void validate_scheme(const InteractionScheme& scheme, bool require_active_rates = true);

/// Componentwise max over interactions of |step|. Used for interior-state
/// bounds.
std::vector<int> max_step_magnitude(const InteractionScheme& scheme);

/// Canonical source rendering: a species header followed by one reaction
/// line per interaction with fully resolved decimal rates. Parsing the
/// result reproduces the same species order, stoichiometries and rates.
/// Throws std::invalid_argument if a rate admits no finite decimal literal.
std::string serialize_scheme(const InteractionScheme& scheme);

/// FNV-1a 64 hash of the canonical rendering, as "fnv1a64:<hex>". Stable
/// across platforms; embedded in every output artifact.
std::string scheme_hash(const InteractionScheme& scheme);

}  // namespace onestep
