#pragma once

#include <vector>

#include "onestep/matrix.hpp"
#include "onestep/rational.hpp"
#include "onestep/scheme.hpp"

namespace onestep {

/// Sign convention for the second-order coefficient B.
///
/// `paper` takes B^{ij} = sum_a r^i r^j (s+ - s-): the printed form, which
/// can go negative. `kramers_moyal` takes the second jump moment
/// B^{ij} = sum_a r^i r^j (s+ + s-), non-negative on the diagonal at every
/// valid state. The drift A is identical under both.
enum class Convention { paper, kramers_moyal };

Convention convention_from_string(std::string_view name);  // "paper" | "km" | "kramers_moyal"
const char* to_string(Convention c);

/// Forward/backward transition rates of one interaction at a state. Units
/// 1/time.
struct PropensityPair {
  double forward = 0.0;
  double backward = 0.0;
};

struct RationalPropensityPair {
  Rational forward;
  Rational backward;
};

/// Arrangement-counting rates: forward = k+ * prod_i ff(x_i, reactants_i),
/// backward = k- * prod_i ff(x_i, products_i), with ff the falling
/// factorial. A factor underflowing (count below stoichiometry) yields 0.
std::vector<PropensityPair> exact_propensities(const InteractionScheme& scheme,
                                               const State& state);
std::vector<RationalPropensityPair> exact_propensities_rational(
    const InteractionScheme& scheme, const State& state);

/// Same with plain powers instead of falling factorials: the form entering
/// the Fokker-Planck coefficients. Defined for real-valued states as well.
std::vector<PropensityPair> polynomial_propensities(const InteractionScheme& scheme,
                                                    const State& state);
std::vector<PropensityPair> polynomial_propensities(const InteractionScheme& scheme,
                                                    const std::vector<double>& state);
std::vector<RationalPropensityPair> polynomial_propensities_rational(
    const InteractionScheme& scheme, const State& state);

/// m-th moment of the jump distribution at a state, built from polynomial
/// propensities. Order 1 fills `vec` (the drift); order 2 fills `mat` (the
/// full symmetric second moment); orders >= 3 fill `vec` with the diagonal
/// slice sum_a (r^i)^m [s+ + (-1)^m s-] since the expansion beyond second
/// order is only used componentwise.
struct JumpMoment {
  unsigned order = 1;
  std::vector<double> vec;
  Matrix mat;
};

JumpMoment jump_moment(const InteractionScheme& scheme, const State& state, unsigned order);

/// First- and second-order coefficients of the Fokker-Planck form.
/// `drift` is convention-independent; `diffusion` follows the convention
/// flag (see Convention). diffusion is n-by-n symmetric, units counts^2/time.
struct DriftDiffusion {
  std::vector<double> drift;
  Matrix diffusion;
  Convention convention = Convention::paper;
};

DriftDiffusion drift_diffusion(const InteractionScheme& scheme, const std::vector<double>& state,
                               Convention convention);
DriftDiffusion drift_diffusion(const InteractionScheme& scheme, const State& state,
                               Convention convention);

/// Exact-rational evaluation at integer states, for identity checks.
struct RationalDriftDiffusion {
  std::vector<Rational> drift;
  std::vector<std::vector<Rational>> diffusion;
  Convention convention = Convention::paper;
};

RationalDriftDiffusion drift_diffusion_rational(const InteractionScheme& scheme,
                                                const State& state, Convention convention);

}  // namespace onestep
