#include "onestep/lattice.hpp"

#include <limits>
#include <string>

#include "onestep/errors.hpp"

namespace onestep {

TruncatedLattice::TruncatedLattice(std::vector<std::int64_t> caps) : caps_(std::move(caps)) {
  if (caps_.empty()) throw DomainError("lattice needs at least one species");
  constexpr std::size_t kMaxStates = std::size_t{1} << 31;
  std::size_t size = 1;
  strides_.resize(caps_.size());
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    if (caps_[i] < 1) throw DomainError("lattice cap must be at least 1");
    strides_[i] = size;
    const auto radix = static_cast<std::size_t>(caps_[i]) + 1;
    if (size > kMaxStates / radix) throw DomainError("lattice too large");
    size *= radix;
  }
  size_ = size;
}

bool TruncatedLattice::contains(const State& state) const {
  if (state.size() != caps_.size()) return false;
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    if (state[i] < 0 || state[i] > caps_[i]) return false;
  }
  return true;
}

std::size_t TruncatedLattice::index_of(const State& state) const {
  if (!contains(state)) throw DomainError("state outside lattice");
  std::size_t index = 0;
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    index += static_cast<std::size_t>(state[i]) * strides_[i];
  }
  return index;
}

State TruncatedLattice::state_of(std::size_t index) const {
  if (index >= size_) throw DomainError("lattice index out of range");
  State state(caps_.size());
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    const auto radix = static_cast<std::size_t>(caps_[i]) + 1;
    state[i] = static_cast<std::int64_t>(index % radix);
    index /= radix;
  }
  return state;
}

bool is_interior(const TruncatedLattice& lattice, const State& state,
                 const std::vector<int>& max_step) {
  if (state.size() != lattice.arity() || max_step.size() != lattice.arity()) {
    throw DomainError("arity mismatch");
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] < max_step[i]) return false;
    if (state[i] > lattice.caps()[i] - max_step[i]) return false;
  }
  return true;
}

std::optional<std::pair<State, State>> interior_box(const TruncatedLattice& lattice,
                                                    const std::vector<int>& max_step) {
  if (max_step.size() != lattice.arity()) throw DomainError("arity mismatch");
  State lo(lattice.arity());
  State hi(lattice.arity());
  for (std::size_t i = 0; i < lattice.arity(); ++i) {
    lo[i] = max_step[i];
    hi[i] = lattice.caps()[i] - max_step[i];
    if (lo[i] > hi[i]) return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

}  // namespace onestep
