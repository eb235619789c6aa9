#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "onestep/errors.hpp"
#include "onestep/fock.hpp"
#include "onestep/lattice.hpp"
#include "onestep/rng.hpp"

using namespace onestep;

namespace {

NormalOrderedPoly cre(std::uint32_t power = 1) { return NormalOrderedPoly::creation_op(1, 0, power); }
NormalOrderedPoly ann(std::uint32_t power = 1) {
  return NormalOrderedPoly::annihilation_op(1, 0, power);
}
NormalOrderedPoly one() { return NormalOrderedPoly::constant(1, Rational(1)); }

BasisState ket(std::int64_t n) { return BasisState{{n}}; }

Rational term(const NormalOrderedPoly& p, std::uint32_t c, std::uint32_t d) {
  const OperatorWord word{{c}, {d}};
  auto it = p.terms().find(word);
  return it == p.terms().end() ? Rational(0) : it->second;
}

/// X -> 2X at lambda = 2 with backward gamma = 1/10, X -> 0 at beta = 1,
/// written directly in creation/annihilation form.
NormalOrderedPoly logistic_operator() {
  const Rational lambda(2), beta(1), gamma(1, 10);
  NormalOrderedPoly poly = lambda * multiply(cre(2) - cre(1), ann(1));
  poly += gamma * multiply(cre(1) - cre(2), ann(2));
  poly += beta * multiply(one() - cre(1), ann(1));
  return poly;
}

NormalOrderedPoly random_poly(Rng& rng, std::size_t arity, std::uint32_t max_power,
                              std::size_t max_terms) {
  NormalOrderedPoly poly(arity);
  const std::size_t terms = 1 + rng.next_u64() % max_terms;
  for (std::size_t t = 0; t < terms; ++t) {
    OperatorWord word{std::vector<std::uint32_t>(arity, 0), std::vector<std::uint32_t>(arity, 0)};
    for (std::size_t s = 0; s < arity; ++s) {
      word.creation[s] = static_cast<std::uint32_t>(rng.next_u64() % (max_power + 1));
      word.annihilation[s] = static_cast<std::uint32_t>(rng.next_u64() % (max_power + 1));
    }
    const std::int64_t numerator = static_cast<std::int64_t>(rng.next_u64() % 13) - 6;
    const std::int64_t denominators[] = {1, 2, 5, 10};
    const Rational coefficient(numerator, denominators[rng.next_u64() % 4]);
    poly.add_term(word, coefficient);
  }
  return poly;
}

std::vector<std::uint32_t> max_creation_power(const NormalOrderedPoly& p) {
  std::vector<std::uint32_t> result(p.arity(), 0);
  for (const auto& [word, coefficient] : p.terms()) {
    for (std::size_t s = 0; s < p.arity(); ++s) {
      result[s] = std::max(result[s], word.creation[s]);
    }
  }
  return result;
}

/// Checks rep(p*q) == rep(p)*rep(q) on every column whose image under q
/// stays inside the truncated basis.
void check_representation_product(const NormalOrderedPoly& p, const NormalOrderedPoly& q,
                                  std::int64_t cap) {
  const RationalMatrix lhs = matrix_representation(multiply(p, q), cap);
  const RationalMatrix rhs =
      matrix_multiply(matrix_representation(p, cap), matrix_representation(q, cap));
  const TruncatedLattice lattice(std::vector<std::int64_t>(p.arity(), cap));
  const auto reach = max_creation_power(q);
  REQUIRE(lhs.dim == lattice.size());
  for (std::size_t col = 0; col < lattice.size(); ++col) {
    const State n = lattice.state_of(col);
    bool safe = true;
    for (std::size_t s = 0; s < n.size(); ++s) {
      safe = safe && n[s] + static_cast<std::int64_t>(reach[s]) <= cap;
    }
    if (!safe) continue;
    for (std::size_t row = 0; row < lhs.dim; ++row) {
      REQUIRE(lhs.at(row, col) == rhs.at(row, col));
    }
  }
}

}  // namespace

TEST_CASE("factories build single normal-ordered terms") {
  const NormalOrderedPoly p = cre(2);
  REQUIRE(p.terms().size() == 1);
  CHECK(term(p, 2, 0) == 1);
  CHECK(term(ann(3), 0, 3) == 1);
  CHECK(one().terms().begin()->first.identity());
  CHECK(NormalOrderedPoly::zero(1).is_zero());
  CHECK_THROWS_AS(NormalOrderedPoly::creation_op(1, 1), DomainError);
}

TEST_CASE("additions cancel exactly") {
  NormalOrderedPoly p = cre() + ann();
  p -= cre();
  p -= ann();
  CHECK(p.is_zero());
  CHECK((Rational(0) * cre()).is_zero());
}

TEST_CASE("the canonical commutator [a, pi] is one") {
  CHECK(commutator(ann(), cre()) == one());
  CHECK(commutator(cre(), ann()) == Rational(-1) * one());
  CHECK(commutator(cre(), cre(2)).is_zero());
  CHECK(commutator(ann(), ann(2)).is_zero());
}

TEST_CASE("reordering a past pi produces the contraction ladder") {
  // a pi = pi a + 1
  const NormalOrderedPoly ap = multiply(ann(), cre());
  REQUIRE(ap.terms().size() == 2);
  CHECK(term(ap, 1, 1) == 1);
  CHECK(term(ap, 0, 0) == 1);

  // pi a stays put
  const NormalOrderedPoly pa = multiply(cre(), ann());
  REQUIRE(pa.terms().size() == 1);
  CHECK(term(pa, 1, 1) == 1);

  // a pi^2 = pi^2 a + 2 pi
  const NormalOrderedPoly ap2 = multiply(ann(), cre(2));
  CHECK(term(ap2, 2, 1) == 1);
  CHECK(term(ap2, 1, 0) == 2);
  CHECK(ap2.terms().size() == 2);

  // a^2 pi^2 = pi^2 a^2 + 4 pi a + 2
  const NormalOrderedPoly a2p2 = multiply(ann(2), cre(2));
  CHECK(term(a2p2, 2, 2) == 1);
  CHECK(term(a2p2, 1, 1) == 4);
  CHECK(term(a2p2, 0, 0) == 2);
  CHECK(a2p2.terms().size() == 3);
}

TEST_CASE("different species commute") {
  const NormalOrderedPoly ax = NormalOrderedPoly::annihilation_op(2, 0);
  const NormalOrderedPoly py = NormalOrderedPoly::creation_op(2, 1);
  const NormalOrderedPoly px = NormalOrderedPoly::creation_op(2, 0);
  CHECK(commutator(ax, py).is_zero());
  CHECK(commutator(ax, px) == NormalOrderedPoly::constant(2, Rational(1)));
  const NormalOrderedPoly product = multiply(ax, py);
  REQUIRE(product.terms().size() == 1);
  const OperatorWord expected{{0, 1}, {1, 0}};
  CHECK(product.terms().begin()->first == expected);
}

TEST_CASE("multiplication is associative on random triples") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const NormalOrderedPoly p = random_poly(rng, 1, 3, 3);
    const NormalOrderedPoly q = random_poly(rng, 1, 3, 3);
    const NormalOrderedPoly r = random_poly(rng, 1, 3, 3);
    CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
  }
  for (int trial = 0; trial < 15; ++trial) {
    const NormalOrderedPoly p = random_poly(rng, 2, 2, 2);
    const NormalOrderedPoly q = random_poly(rng, 2, 2, 2);
    const NormalOrderedPoly r = random_poly(rng, 2, 2, 2);
    CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
  }
}

TEST_CASE("powers are repeated products") {
  const NormalOrderedPoly s = cre() + ann();
  CHECK(s.pow(0) == one());
  CHECK(s.pow(1) == s);
  CHECK(s.pow(2) == multiply(s, s));
  CHECK(s.pow(3) == multiply(s, multiply(s, s)));
  // (pi + a)^2 = pi^2 + 2 pi a + a^2 + 1
  const NormalOrderedPoly sq = s.pow(2);
  CHECK(term(sq, 2, 0) == 1);
  CHECK(term(sq, 1, 1) == 2);
  CHECK(term(sq, 0, 2) == 1);
  CHECK(term(sq, 0, 0) == 1);
}

TEST_CASE("arity mismatches are rejected") {
  const NormalOrderedPoly p = cre();
  const NormalOrderedPoly q = NormalOrderedPoly::creation_op(2, 0);
  CHECK_THROWS_AS(multiply(p, q), DomainError);
  NormalOrderedPoly r = cre();
  CHECK_THROWS_AS(r += q, DomainError);
  CHECK_THROWS_AS(apply_to_basis(p, BasisState{{1, 2}}), DomainError);
}

TEST_CASE("ladder action on number states") {
  const StateExpansion down = apply_to_basis(ann(), ket(3));
  REQUIRE(down.size() == 1);
  CHECK(down.at(ket(2)) == 3);

  const StateExpansion up = apply_to_basis(cre(), ket(3));
  REQUIRE(up.size() == 1);
  CHECK(up.at(ket(4)) == 1);

  CHECK(apply_to_basis(ann(), ket(0)).empty());
  CHECK(apply_to_basis(ann(2), ket(1)).empty());

  // a^2|5> = 20 |3>
  CHECK(apply_to_basis(ann(2), ket(5)).at(ket(3)) == 20);

  CHECK_THROWS_AS(apply_to_basis(ann(), ket(-1)), DomainError);
}

TEST_CASE("the number operator is diagonal") {
  const NormalOrderedPoly number = multiply(cre(), ann());
  for (std::int64_t n = 0; n <= 50; ++n) {
    const StateExpansion image = apply_to_basis(number, ket(n));
    if (n == 0) {
      CHECK(image.empty());
    } else {
      REQUIRE(image.size() == 1);
      CHECK(image.at(ket(n)) == n);
    }
    // (a pi - pi a)|n> = |n> for every n: the commutator acts as identity.
    const StateExpansion diff = apply_to_expansion(commutator(ann(), cre()), {{ket(n), Rational(1)}});
    REQUIRE(diff.size() == 1);
    CHECK(diff.at(ket(n)) == 1);
  }
}

TEST_CASE("application of a product equals composed application") {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const NormalOrderedPoly p = random_poly(rng, 1, 3, 3);
    const NormalOrderedPoly q = random_poly(rng, 1, 3, 3);
    const BasisState n = ket(static_cast<std::int64_t>(rng.next_u64() % 7));
    const StateExpansion direct = apply_to_basis(multiply(p, q), n);
    const StateExpansion composed = apply_to_expansion(p, apply_to_basis(q, n));
    CHECK(direct == composed);
  }
}

TEST_CASE("inner products carry the factorial weights") {
  CHECK(inner_product(ket(2), {{ket(2), Rational(1)}}) == 2);
  CHECK(inner_product(ket(3), {{ket(3), Rational(1)}}) == 6);
  CHECK(inner_product(ket(1), {{ket(2), Rational(1)}}) == 0);
  CHECK(inner_product(ket(2), {{ket(2), Rational(3)}, {ket(1), Rational(-1)}}) == 6);
  const BasisState pair{{2, 3}};
  CHECK(inner_product(pair, {{pair, Rational(1)}}) == 12);
  CHECK_THROWS_AS(inner_product(ket(-2), StateExpansion{}), DomainError);
}

TEST_CASE("pi and the transpose of a agree under the weighted pairing") {
  for (std::int64_t m = 0; m <= 12; ++m) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      const Rational lhs = inner_product(ket(m), apply_to_basis(cre(), ket(n)));
      const Rational rhs = inner_product(ket(n), apply_to_basis(ann(), ket(m)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("the logistic operator acts with the master-equation coefficients") {
  const NormalOrderedPoly liouville = logistic_operator();

  const StateExpansion image = apply_to_basis(liouville, ket(1));
  REQUIRE(image.size() == 3);
  CHECK(image.at(ket(0)) == 1);           // beta
  CHECK(image.at(ket(1)) == -3);          // -(lambda + beta)
  CHECK(image.at(ket(2)) == 2);           // lambda

  // Diagonal at n = 3: <3|L|3> / 3! = -(3 lambda + 3 beta + 6 gamma).
  const Rational diag = inner_product(ket(3), apply_to_basis(liouville, ket(3))) / Rational(6);
  CHECK(diag == Rational(-48, 5));
}

TEST_CASE("matrix representations at small caps") {
  const RationalMatrix rep_pi = matrix_representation(cre(), 2);
  REQUIRE(rep_pi.dim == 3);
  for (std::size_t row = 0; row < 3; ++row) {
    for (std::size_t col = 0; col < 3; ++col) {
      CHECK(rep_pi.at(row, col) == (row == col + 1 ? Rational(1) : Rational(0)));
    }
  }

  const RationalMatrix rep_a = matrix_representation(ann(), 2);
  CHECK(rep_a.at(0, 1) == 1);
  CHECK(rep_a.at(1, 2) == 2);
  CHECK(rep_a.at(0, 0) == 0);
  CHECK(rep_a.at(2, 2) == 0);

  const RationalMatrix rep_number = matrix_representation(multiply(cre(), ann()), 4);
  for (std::size_t i = 0; i < 5; ++i) CHECK(rep_number.at(i, i) == Rational(i));
}

TEST_CASE("representation is multiplicative on truncation-safe columns") {
  check_representation_product(ann(2), cre(2), 64);
  Rng rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    check_representation_product(random_poly(rng, 1, 3, 3), random_poly(rng, 1, 3, 3), 12);
  }
  for (int trial = 0; trial < 10; ++trial) {
    check_representation_product(random_poly(rng, 2, 2, 2), random_poly(rng, 2, 2, 2), 5);
  }
}

TEST_CASE("pretty rendering") {
  NormalOrderedPoly p = Rational(2) * multiply(cre(2), ann());
  p -= multiply(cre(), ann());
  CHECK(pretty(p) == "2·π^2·a - π·a");

  CHECK(pretty(NormalOrderedPoly::zero(1)) == "0");
  CHECK(pretty(one()) == "1");
  CHECK(pretty(NormalOrderedPoly::constant(1, Rational(-5, 2))) == "-5/2");
  CHECK(pretty(cre() - one()) == "π - 1");
  CHECK(pretty(Rational(-1) * cre()) == "-π");
  CHECK(pretty(Rational(1, 2) * ann(3)) == "1/2·a^3");

  const NormalOrderedPoly cross =
      multiply(NormalOrderedPoly::creation_op(2, 0), NormalOrderedPoly::annihilation_op(2, 1));
  CHECK(pretty(cross, {"X", "Y"}) == "π_X·a_Y");
  CHECK(pretty(cross) == "π_1·a_2");
}

TEST_CASE("json round trip") {
  Rng rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    const NormalOrderedPoly p = random_poly(rng, 1 + trial % 2, 3, 3);
    CHECK(poly_from_json_text(to_json_text(p)) == p);
  }
  const std::string text = to_json_text(logistic_operator());
  CHECK(text.find("\"arity\"") != std::string::npos);
  CHECK(text.find("\"terms\"") != std::string::npos);
  CHECK(text.find("\"coefficient\"") != std::string::npos);

  CHECK_THROWS_AS(poly_from_json_text("not json"), DomainError);
  CHECK_THROWS_AS(poly_from_json_text("{\"arity\": 1}"), DomainError);
  CHECK_THROWS_AS(
      poly_from_json_text(
          "{\"arity\": 2, \"terms\": [{\"creation\": [1], \"annihilation\": [1, 0], "
          "\"coefficient\": \"1\"}]}"),
      DomainError);
}
