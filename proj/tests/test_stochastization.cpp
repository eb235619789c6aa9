#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "onestep/errors.hpp"
#include "onestep/scheme_parser.hpp"
#include "onestep/stochastization.hpp"

using namespace onestep;

namespace {

InteractionScheme verhulst() {
  return parse_scheme("X -> 2X @ 2.0 ~ 0.1\nX -> 0 @ 1.0\n");
}

InteractionScheme conversion() {
  // X + Y -> 2Y, irreversible.
  return parse_scheme("X + Y -> 2Y @ 0.25\n");
}

}  // namespace

TEST_CASE("exact propensities count ordered arrangements") {
  const InteractionScheme scheme = verhulst();

  // Channel X -> 2X backwards consumes two X: rate 0.1 * (4 * 3) at four
  // particles, the arrangement count computed by hand.
  const auto at4 = exact_propensities(scheme, {4});
  CHECK(at4[0].forward == 8.0);
  CHECK(at4[0].backward == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(at4[1].forward == 4.0);
  CHECK(at4[1].backward == 0.0);

  const auto at5 = exact_propensities_rational(scheme, {5});
  CHECK(at5[0].forward == Rational(10));
  CHECK(at5[0].backward == Rational(2));  // 1/10 * 5 * 4
  CHECK(at5[1].forward == Rational(5));

  // Too few particles for the jump: zero, not negative.
  const auto at1 = exact_propensities_rational(scheme, {1});
  CHECK(at1[0].backward == Rational(0));
  const auto at0 = exact_propensities_rational(scheme, {0});
  CHECK(at0[0].forward == Rational(0));
  CHECK(at0[1].forward == Rational(0));
}

TEST_CASE("polynomial propensities use plain powers") {
  const InteractionScheme scheme = verhulst();
  const auto at4 = polynomial_propensities(scheme, State{4});
  CHECK(at4[0].backward == doctest::Approx(1.6).epsilon(1e-14));  // 0.1 * 4^2

  const auto rational = polynomial_propensities_rational(scheme, {5});
  CHECK(rational[0].backward == Rational(5, 2));  // 1/10 * 25

  // Unlike the exact family, the polynomial form is positive below the
  // arrangement threshold.
  const auto at1 = polynomial_propensities(scheme, State{1});
  CHECK(at1[0].backward == doctest::Approx(0.1));
}

TEST_CASE("exact and polynomial families agree when all stoichiometries are 0 or 1") {
  const InteractionScheme scheme = conversion();
  for (std::int64_t x = 0; x <= 6; ++x) {
    for (std::int64_t y = 0; y <= 6; ++y) {
      const auto exact = exact_propensities_rational(scheme, {x, y});
      const auto poly = polynomial_propensities_rational(scheme, {x, y});
      CHECK(exact[0].forward == poly[0].forward);
      CHECK(exact[0].backward == poly[0].backward);
    }
  }
}

TEST_CASE("propensities reject negative counts and arity mismatches") {
  const InteractionScheme scheme = verhulst();
  CHECK_THROWS_AS(exact_propensities(scheme, {-1}), DomainError);
  CHECK_THROWS_AS(exact_propensities(scheme, {1, 2}), DomainError);
  CHECK_THROWS_AS(polynomial_propensities(scheme, State{-3}), DomainError);
}

TEST_CASE("jump moments at phi = 5") {
  const InteractionScheme scheme = verhulst();
  const JumpMoment xi1 = jump_moment(scheme, {5}, 1);
  REQUIRE(xi1.vec.size() == 1);
  CHECK(xi1.vec[0] == doctest::Approx(2.5).epsilon(1e-14));

  const JumpMoment xi2 = jump_moment(scheme, {5}, 2);
  REQUIRE(xi2.mat.rows == 1);
  CHECK(xi2.mat.at(0, 0) == doctest::Approx(17.5).epsilon(1e-14));

  // Higher moments alternate the sign of the backward contribution:
  // odd orders subtract, even orders add (jump of -r raised to the order).
  const JumpMoment xi3 = jump_moment(scheme, {5}, 3);
  CHECK(xi3.vec[0] == doctest::Approx(2.5).epsilon(1e-14));
  const JumpMoment xi4 = jump_moment(scheme, {5}, 4);
  CHECK(xi4.vec[0] == doctest::Approx(17.5).epsilon(1e-14));

  CHECK_THROWS_AS(jump_moment(scheme, {5}, 0), DomainError);
}

TEST_CASE("drift and diffusion at phi = 5 in both conventions") {
  const InteractionScheme scheme = verhulst();

  const DriftDiffusion paper = drift_diffusion(scheme, State{5}, Convention::paper);
  CHECK(paper.drift[0] == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(paper.diffusion.at(0, 0) == doctest::Approx(12.5).epsilon(1e-14));

  const DriftDiffusion km = drift_diffusion(scheme, State{5}, Convention::kramers_moyal);
  CHECK(km.drift[0] == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(km.diffusion.at(0, 0) == doctest::Approx(17.5).epsilon(1e-14));

  const RationalDriftDiffusion exact = drift_diffusion_rational(scheme, {5}, Convention::paper);
  CHECK(exact.drift[0] == Rational(5, 2));
  CHECK(exact.diffusion[0][0] == Rational(25, 2));
  const RationalDriftDiffusion exact_km =
      drift_diffusion_rational(scheme, {5}, Convention::kramers_moyal);
  CHECK(exact_km.diffusion[0][0] == Rational(35, 2));
}

TEST_CASE("drift equals the first jump moment bitwise") {
  const InteractionScheme scheme = verhulst();
  for (std::int64_t phi = 0; phi <= 40; ++phi) {
    const JumpMoment xi1 = jump_moment(scheme, {phi}, 1);
    const DriftDiffusion dd = drift_diffusion(scheme, State{phi}, Convention::paper);
    CHECK(xi1.vec == dd.drift);
  }
}

TEST_CASE("kramers_moyal diffusion equals the second jump moment bitwise") {
  const InteractionScheme scheme = conversion();
  for (std::int64_t x = 0; x <= 8; ++x) {
    for (std::int64_t y = 0; y <= 8; ++y) {
      const JumpMoment xi2 = jump_moment(scheme, {x, y}, 2);
      const DriftDiffusion dd = drift_diffusion(scheme, State{x, y}, Convention::kramers_moyal);
      CHECK(xi2.mat == dd.diffusion);
    }
  }
}

TEST_CASE("conventions differ by twice the backward flow") {
  const InteractionScheme scheme = verhulst();
  for (std::int64_t phi = 0; phi <= 40; ++phi) {
    const RationalDriftDiffusion paper = drift_diffusion_rational(scheme, {phi}, Convention::paper);
    const RationalDriftDiffusion km =
        drift_diffusion_rational(scheme, {phi}, Convention::kramers_moyal);
    // km - paper = 2 sum_a r r^T (backward polynomial propensity).
    const Rational gap = km.diffusion[0][0] - paper.diffusion[0][0];
    const Rational backward = Rational(2) * Rational(1, 10) * Rational(phi) * Rational(phi);
    CHECK(gap == backward);
    CHECK(km.drift[0] == paper.drift[0]);
  }
}

TEST_CASE("paper-convention diffusion turns negative above the carrying capacity band") {
  const InteractionScheme scheme = verhulst();
  // B(phi) = 2 phi + phi - 0.1 phi^2 vanishes at phi = 30 and is negative
  // from phi = 31 on.
  std::int64_t first_negative = -1;
  for (std::int64_t phi = 0; phi <= 60; ++phi) {
    const DriftDiffusion dd = drift_diffusion(scheme, State{phi}, Convention::paper);
    if (dd.diffusion.at(0, 0) < 0.0) {
      first_negative = phi;
      break;
    }
  }
  CHECK(first_negative == 31);

  const RationalDriftDiffusion at30 = drift_diffusion_rational(scheme, {30}, Convention::paper);
  CHECK(at30.diffusion[0][0] == Rational(0));
  const RationalDriftDiffusion at31 = drift_diffusion_rational(scheme, {31}, Convention::paper);
  CHECK(at31.diffusion[0][0] == Rational(-31, 10));

  // The second-jump-moment convention stays non-negative everywhere.
  for (std::int64_t phi = 0; phi <= 200; ++phi) {
    const DriftDiffusion km = drift_diffusion(scheme, State{phi}, Convention::kramers_moyal);
    CHECK(km.diffusion.at(0, 0) >= 0.0);
  }
}

TEST_CASE("two-species drift and diffusion structure") {
  const InteractionScheme scheme = conversion();
  // r = (-1, +1); at (x, y) the channel rate is x y / 4.
  const RationalDriftDiffusion dd = drift_diffusion_rational(scheme, {4, 2}, Convention::paper);
  CHECK(dd.drift[0] == Rational(-2));
  CHECK(dd.drift[1] == Rational(2));
  CHECK(dd.diffusion[0][0] == Rational(2));
  CHECK(dd.diffusion[0][1] == Rational(-2));
  CHECK(dd.diffusion[1][0] == Rational(-2));
  CHECK(dd.diffusion[1][1] == Rational(2));
}

TEST_CASE("convention names") {
  CHECK(convention_from_string("paper") == Convention::paper);
  CHECK(convention_from_string("km") == Convention::kramers_moyal);
  CHECK(convention_from_string("kramers_moyal") == Convention::kramers_moyal);
  CHECK_THROWS_AS(convention_from_string("other"), DomainError);
  CHECK(std::string(to_string(Convention::paper)) == "paper");
  CHECK(std::string(to_string(Convention::kramers_moyal)) == "kramers_moyal");
}

TEST_CASE("real-valued evaluation matches integer evaluation on lattice points") {
  const InteractionScheme scheme = verhulst();
  for (std::int64_t phi = 0; phi <= 20; ++phi) {
    const DriftDiffusion a = drift_diffusion(scheme, State{phi}, Convention::paper);
    const DriftDiffusion b =
        drift_diffusion(scheme, std::vector<double>{static_cast<double>(phi)}, Convention::paper);
    CHECK(a.drift == b.drift);
    CHECK(a.diffusion == b.diffusion);
  }
}
