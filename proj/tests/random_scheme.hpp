#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "onestep/rng.hpp"
#include "onestep/scheme.hpp"

namespace testutil {

/// Seeded random scheme: up to 2 species, up to 3 channels, stoichiometries
/// up to 2, rates k/10 with k up to 30 and every channel active in at least
/// one direction. Always passes validate_scheme.
inline onestep::InteractionScheme random_scheme(onestep::Rng& rng) {
  using onestep::Rational;
  onestep::InteractionScheme scheme;
  const std::size_t species = 1 + rng.next_u64() % 2;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < species; ++s) {
    names.emplace_back(1, static_cast<char>('A' + s));
  }
  scheme.species = onestep::SpeciesTable(names);

  const std::size_t channels = 1 + rng.next_u64() % 3;
  while (scheme.interactions.size() < channels) {
    onestep::Interaction interaction;
    interaction.reactants.assign(species, 0);
    interaction.products.assign(species, 0);
    bool changes_state = false;
    for (std::size_t s = 0; s < species; ++s) {
      interaction.reactants[s] = static_cast<int>(rng.next_u64() % 3);
      interaction.products[s] = static_cast<int>(rng.next_u64() % 3);
      changes_state = changes_state || interaction.reactants[s] != interaction.products[s];
    }
    if (!changes_state) continue;
    interaction.rate_forward = Rational(rng.next_u64() % 31, 10);
    interaction.rate_backward = Rational(rng.next_u64() % 31, 10);
    if (interaction.rate_forward == 0 && interaction.rate_backward == 0) {
      interaction.rate_forward = Rational(1, 10);
    }
    scheme.interactions.push_back(interaction);
  }
  onestep::validate_scheme(scheme);
  return scheme;
}

}  // namespace testutil
