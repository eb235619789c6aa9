#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "onestep/scheme.hpp"

namespace onestep {

/// Finite box [0, caps] of the countable state space, with a stable
/// bijection between states and flat indices (mixed radix, species 0
/// fastest).
class TruncatedLattice {
 public:
  /// caps are inclusive per-species maxima, each at least 1. Total size
  /// (product of caps+1) is limited to 2^31 states.
  explicit TruncatedLattice(std::vector<std::int64_t> caps);

  std::size_t arity() const { return caps_.size(); }
  std::size_t size() const { return size_; }
  const std::vector<std::int64_t>& caps() const { return caps_; }

  bool contains(const State& state) const;
  std::size_t index_of(const State& state) const;  // throws DomainError when outside
  State state_of(std::size_t index) const;

 private:
  std::vector<std::int64_t> caps_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// True when every jump from `state` (one step of any interaction, either
/// direction) stays inside the lattice. `max_step` is per-species
/// max_a |r^{ia}| (see max_step_magnitude).
bool is_interior(const TruncatedLattice& lattice, const State& state,
                 const std::vector<int>& max_step);

/// The interior states form a box [lo, hi]; empty (nullopt) when the lattice
/// is too small for the scheme's steps.
std::optional<std::pair<State, State>> interior_box(const TruncatedLattice& lattice,
                                                    const std::vector<int>& max_step);

}  // namespace onestep
