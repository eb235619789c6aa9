#include "onestep/generator.hpp"

#include <cstdlib>

#include "onestep/stochastization.hpp"

namespace onestep {
namespace {

void check_steps_fit(const InteractionScheme& scheme, const TruncatedLattice& lattice) {
  const StepMatrix steps = step_operator(scheme);
  for (const auto& step : steps) {
    bool fits = true;
    for (std::size_t i = 0; i < step.size(); ++i) {
      if (std::abs(step[i]) > lattice.caps()[i]) {
        fits = false;
        break;
      }
    }
    if (fits) return;
  }
  throw DomainError("lattice too small for every interaction step");
}

State shifted(const State& state, const std::vector<int>& step, int direction) {
  State target(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    target[i] = state[i] + direction * step[i];
  }
  return target;
}

template <class Scalar, class Propensities>
SparseGenerator<Scalar> build(const InteractionScheme& scheme, const TruncatedLattice& lattice,
                              Propensities propensities) {
  if (lattice.arity() != scheme.species.size()) throw DomainError("lattice arity mismatch");
  check_steps_fit(scheme, lattice);
  const StepMatrix steps = step_operator(scheme);
  SparseGenerator<Scalar> generator(lattice.size());
  for (std::size_t col = 0; col < lattice.size(); ++col) {
    const State state = lattice.state_of(col);
    const auto rates = propensities(state);
    Scalar absorbed{0};
    for (std::size_t a = 0; a < steps.size(); ++a) {
      if (rates[a].forward != Scalar{0}) {
        const State target = shifted(state, steps[a], +1);
        if (lattice.contains(target)) {
          generator.add(lattice.index_of(target), col, rates[a].forward);
        } else {
          absorbed += rates[a].forward;
        }
      }
      if (rates[a].backward != Scalar{0}) {
        const State target = shifted(state, steps[a], -1);
        if (lattice.contains(target)) {
          generator.add(lattice.index_of(target), col, rates[a].backward);
        } else {
          absorbed += rates[a].backward;
        }
      }
    }
    Scalar off{0};
    for (const auto& [row, value] : generator.column(col)) off += value;
    const Scalar outflow = off + absorbed;
    if (outflow != Scalar{0}) generator.set(col, col, -outflow);
  }
  return generator;
}

}  // namespace

GeneratorMatrix build_generator(const InteractionScheme& scheme, const TruncatedLattice& lattice) {
  return build<double>(scheme, lattice,
                       [&](const State& state) { return exact_propensities(scheme, state); });
}

RationalGenerator build_generator_rational(const InteractionScheme& scheme,
                                           const TruncatedLattice& lattice) {
  return build<Rational>(scheme, lattice, [&](const State& state) {
    return exact_propensities_rational(scheme, state);
  });
}

double max_abs_diagonal(const GeneratorMatrix& generator) {
  double result = 0.0;
  for (std::size_t col = 0; col < generator.dimension(); ++col) {
    const double diag = generator.entry(col, col);
    if (std::abs(diag) > result) result = std::abs(diag);
  }
  return result;
}

void apply_generator(const GeneratorMatrix& generator, const std::vector<double>& p,
                     std::vector<double>& out) {
  if (p.size() != generator.dimension()) throw DomainError("vector size mismatch");
  out.assign(p.size(), 0.0);
  for (std::size_t col = 0; col < p.size(); ++col) {
    const double weight = p[col];
    if (weight == 0.0) continue;
    for (const auto& [row, value] : generator.column(col)) {
      out[row] += value * weight;
    }
  }
}

}  // namespace onestep
