#include "onestep/stochastization.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "onestep/errors.hpp"

namespace onestep {

Convention convention_from_string(std::string_view name) {
  if (name == "paper") return Convention::paper;
  if (name == "km" || name == "kramers_moyal") return Convention::kramers_moyal;
  throw DomainError("unknown convention '" + std::string(name) + "'");
}

const char* to_string(Convention c) {
  return c == Convention::paper ? "paper" : "kramers_moyal";
}

namespace {

// Falling factorial of an integer count, accumulated in double: every factor
// is an exact small integer, the rate scales the product once at the end.
double falling_factorial_d(std::int64_t x, int k) {
  if (x < k) return 0.0;
  double out = 1.0;
  for (int j = 0; j < k; ++j) out *= static_cast<double>(x - j);
  return out;
}

double int_pow(double x, int k) {
  double out = 1.0;
  for (int j = 0; j < k; ++j) out *= x;
  return out;
}

Rational int_pow(const Rational& x, int k) {
  Rational out = 1;
  for (int j = 0; j < k; ++j) out *= x;
  return out;
}

void check_state(const InteractionScheme& scheme, std::size_t state_size) {
  if (state_size != scheme.order()) {
    throw DomainError("state has length " + std::to_string(state_size) +
                      ", scheme has " + std::to_string(scheme.order()) + " species");
  }
}

void check_counts(const State& state) {
  for (auto c : state) {
    if (c < 0) throw DomainError("negative particle count in state");
  }
}

template <class Weight>
std::vector<PropensityPair> propensities_d(const InteractionScheme& scheme, const State& state,
                                           Weight weight) {
  check_state(scheme, state.size());
  check_counts(state);
  std::vector<PropensityPair> out;
  out.reserve(scheme.interactions.size());
  for (const auto& inter : scheme.interactions) {
    double fwd = 1.0;
    double bwd = 1.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
      fwd *= weight(state[i], inter.reactants[i]);
      bwd *= weight(state[i], inter.products[i]);
    }
    out.push_back({fwd * to_double(inter.rate_forward), bwd * to_double(inter.rate_backward)});
  }
  return out;
}

template <class Weight>
std::vector<RationalPropensityPair> propensities_q(const InteractionScheme& scheme,
                                                   const State& state, Weight weight) {
  check_state(scheme, state.size());
  check_counts(state);
  std::vector<RationalPropensityPair> out;
  out.reserve(scheme.interactions.size());
  for (const auto& inter : scheme.interactions) {
    Rational fwd = 1;
    Rational bwd = 1;
    for (std::size_t i = 0; i < state.size(); ++i) {
      fwd *= weight(state[i], inter.reactants[i]);
      bwd *= weight(state[i], inter.products[i]);
    }
    out.push_back({fwd * inter.rate_forward, bwd * inter.rate_backward});
  }
  return out;
}

std::vector<double> to_real(const State& state) {
  return std::vector<double>(state.begin(), state.end());
}

}  // namespace

std::vector<PropensityPair> exact_propensities(const InteractionScheme& scheme,
                                               const State& state) {
  return propensities_d(scheme, state,
                        [](std::int64_t x, int k) { return falling_factorial_d(x, k); });
}

std::vector<RationalPropensityPair> exact_propensities_rational(const InteractionScheme& scheme,
                                                                const State& state) {
  return propensities_q(scheme, state, [](std::int64_t x, int k) {
    return Rational(falling_factorial(Integer(x), static_cast<std::uint64_t>(k)));
  });
}

std::vector<PropensityPair> polynomial_propensities(const InteractionScheme& scheme,
                                                    const State& state) {
  check_counts(state);
  return polynomial_propensities(scheme, to_real(state));
}

std::vector<PropensityPair> polynomial_propensities(const InteractionScheme& scheme,
                                                    const std::vector<double>& state) {
  check_state(scheme, state.size());
  std::vector<PropensityPair> out;
  out.reserve(scheme.interactions.size());
  for (const auto& inter : scheme.interactions) {
    double fwd = 1.0;
    double bwd = 1.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
      fwd *= int_pow(state[i], inter.reactants[i]);
      bwd *= int_pow(state[i], inter.products[i]);
    }
    out.push_back({fwd * to_double(inter.rate_forward), bwd * to_double(inter.rate_backward)});
  }
  return out;
}

std::vector<RationalPropensityPair> polynomial_propensities_rational(
    const InteractionScheme& scheme, const State& state) {
  return propensities_q(scheme, state,
                        [](std::int64_t x, int k) { return int_pow(Rational(x), k); });
}

namespace {

// Shared accumulators so the advertised identities (drift == first jump
// moment, kramers_moyal diffusion == second jump moment) hold bitwise, not
// just to rounding.
std::vector<double> first_moment(const InteractionScheme& scheme,
                                 const std::vector<PropensityPair>& s, const StepMatrix& r) {
  std::vector<double> out(scheme.order(), 0.0);
  for (std::size_t a = 0; a < s.size(); ++a) {
    const double w = s[a].forward - s[a].backward;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += r[a][i] * w;
    }
  }
  return out;
}

Matrix second_moment_signed(const InteractionScheme& scheme,
                            const std::vector<PropensityPair>& s, const StepMatrix& r,
                            double backward_sign) {
  const std::size_t n = scheme.order();
  Matrix out(n, n);
  for (std::size_t a = 0; a < s.size(); ++a) {
    const double w = s[a].forward + backward_sign * s[a].backward;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.at(i, j) += r[a][i] * r[a][j] * w;
      }
    }
  }
  return out;
}

}  // namespace

JumpMoment jump_moment(const InteractionScheme& scheme, const State& state, unsigned order) {
  if (order == 0) throw DomainError("jump moment order must be at least 1");
  const auto s = polynomial_propensities(scheme, state);
  const auto r = step_operator(scheme);
  JumpMoment out;
  out.order = order;
  if (order == 1) {
    out.vec = first_moment(scheme, s, r);
  } else if (order == 2) {
    out.mat = second_moment_signed(scheme, s, r, +1.0);
  } else {
    // Diagonal slice: (+r)^m s+ + (-r)^m s-.
    const double backward_sign = (order % 2 == 0) ? +1.0 : -1.0;
    out.vec.assign(scheme.order(), 0.0);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t i = 0; i < out.vec.size(); ++i) {
        out.vec[i] += int_pow(r[a][i], static_cast<int>(order)) *
                      (s[a].forward + backward_sign * s[a].backward);
      }
    }
  }
  return out;
}

DriftDiffusion drift_diffusion(const InteractionScheme& scheme, const std::vector<double>& state,
                               Convention convention) {
  const auto s = polynomial_propensities(scheme, state);
  const auto r = step_operator(scheme);
  DriftDiffusion out;
  out.convention = convention;
  out.drift = first_moment(scheme, s, r);
  const double sign = convention == Convention::paper ? -1.0 : +1.0;
  out.diffusion = second_moment_signed(scheme, s, r, sign);
  return out;
}

DriftDiffusion drift_diffusion(const InteractionScheme& scheme, const State& state,
                               Convention convention) {
  check_counts(state);
  std::vector<double> real(state.begin(), state.end());
  return drift_diffusion(scheme, real, convention);
}

RationalDriftDiffusion drift_diffusion_rational(const InteractionScheme& scheme,
                                                const State& state, Convention convention) {
  const auto s = polynomial_propensities_rational(scheme, state);
  const auto r = step_operator(scheme);
  const std::size_t n = scheme.order();
  RationalDriftDiffusion out;
  out.convention = convention;
  out.drift.assign(n, Rational(0));
  out.diffusion.assign(n, std::vector<Rational>(n, Rational(0)));
  const int sign = convention == Convention::paper ? -1 : +1;
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Rational wd = s[a].forward - s[a].backward;
    const Rational wb = s[a].forward + sign * s[a].backward;
    for (std::size_t i = 0; i < n; ++i) {
      out.drift[i] += r[a][i] * wd;
      for (std::size_t j = 0; j < n; ++j) {
        out.diffusion[i][j] += r[a][i] * r[a][j] * wb;
      }
    }
  }
  return out;
}

}  // namespace onestep
