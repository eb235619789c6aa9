#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onestep/fock.hpp"
#include "onestep/generator.hpp"
#include "onestep/lattice.hpp"
#include "onestep/scheme.hpp"

namespace onestep {

/// The single operator whose action on the generating state reproduces the
/// whole family of master equations for the scheme.
struct LiouvilleOperator {
  NormalOrderedPoly poly;
  std::vector<std::string> species;
};

/// L = sum over interactions of
///   k+ (prod_i pi_i^F - prod_i pi_i^I) prod_i a_i^I
/// + k- (prod_i pi_i^I - prod_i pi_i^F) prod_i a_i^F,
/// normal-ordered with exact coefficients.
LiouvilleOperator build_liouville(const InteractionScheme& scheme);

/// Entry (n, m) = (1 / prod_i n_i!) <n| L |m> over the lattice basis,
/// computed through apply_to_basis and inner_product. Exact.
RationalGenerator generator_from_liouville(const NormalOrderedPoly& poly,
                                           const TruncatedLattice& lattice);

struct GeneratorMismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational combinatorial;
  Rational operator_based;
};

struct EquivalenceReport {
  bool equal = true;
  std::vector<std::int64_t> caps;
  std::vector<std::pair<std::int64_t, std::int64_t>> interior_range;  // per species
  std::size_t interior_count = 0;
  Rational max_discrepancy;  // 0 when equal
  std::optional<GeneratorMismatch> first_mismatch;
  std::vector<GeneratorMismatch> mismatches;
};

/// Compares two generators column by column on interior states (columns whose
/// jump neighbourhood stays inside the lattice). Inequality is reported, not
/// thrown; an empty interior is a DomainError.
EquivalenceReport compare_generators(const RationalGenerator& combinatorial,
                                     const RationalGenerator& operator_based,
                                     const TruncatedLattice& lattice,
                                     const std::vector<int>& max_step);

/// Builds both routes for the scheme and compares them exactly.
EquivalenceReport verify_equivalence(const InteractionScheme& scheme,
                                     const TruncatedLattice& lattice);

std::string to_json_text(const EquivalenceReport& report);

}  // namespace onestep
