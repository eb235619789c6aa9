#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "onestep/rational.hpp"

namespace onestep {

/// One normal-ordered monomial: every creation factor to the left of every
/// annihilation factor, powers listed per species.
struct OperatorWord {
  std::vector<std::uint32_t> creation;
  std::vector<std::uint32_t> annihilation;

  friend auto operator<=>(const OperatorWord&, const OperatorWord&) = default;

  bool identity() const;
};

/// Number state |n>, one non-negative occupation per species.
struct BasisState {
  std::vector<std::int64_t> occupation;

  friend auto operator<=>(const BasisState&, const BasisState&) = default;
};

/// Finite linear combination of number states.
using StateExpansion = std::map<BasisState, Rational>;

/// Polynomial in per-species creation/annihilation operators, kept in normal
/// order with exact rational coefficients. The term map is canonical: equal
/// operators have equal maps.
class NormalOrderedPoly {
 public:
  explicit NormalOrderedPoly(std::size_t arity = 1) : arity_(arity) {}

  static NormalOrderedPoly zero(std::size_t arity);
  static NormalOrderedPoly constant(std::size_t arity, const Rational& value);
  static NormalOrderedPoly creation_op(std::size_t arity, std::size_t species,
                                       std::uint32_t power = 1);
  static NormalOrderedPoly annihilation_op(std::size_t arity, std::size_t species,
                                           std::uint32_t power = 1);
  /// The word is taken as already normal-ordered.
  static NormalOrderedPoly monomial(OperatorWord word, const Rational& coefficient);

  std::size_t arity() const { return arity_; }
  const std::map<OperatorWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NormalOrderedPoly& operator+=(const NormalOrderedPoly& other);
  NormalOrderedPoly& operator-=(const NormalOrderedPoly& other);
  NormalOrderedPoly& operator*=(const Rational& scalar);

  NormalOrderedPoly pow(std::uint32_t exponent) const;

  friend bool operator==(const NormalOrderedPoly& a, const NormalOrderedPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  void add_term(const OperatorWord& word, const Rational& coefficient);

 private:
  std::size_t arity_;
  std::map<OperatorWord, Rational> terms_;
};

NormalOrderedPoly operator+(NormalOrderedPoly a, const NormalOrderedPoly& b);
NormalOrderedPoly operator-(NormalOrderedPoly a, const NormalOrderedPoly& b);
NormalOrderedPoly operator*(const Rational& scalar, NormalOrderedPoly p);

/// Normal-ordered product. Within one species the reordering uses
/// a^d pi^c = sum_k k! C(d,k) C(c,k) pi^(c-k) a^(d-k); different species
/// commute. Exact; throws DomainError on arity mismatch.
NormalOrderedPoly multiply(const NormalOrderedPoly& p, const NormalOrderedPoly& q);
NormalOrderedPoly operator*(const NormalOrderedPoly& p, const NormalOrderedPoly& q);

/// multiply(p, q) - multiply(q, p).
NormalOrderedPoly commutator(const NormalOrderedPoly& p, const NormalOrderedPoly& q);

/// Applies p term by term with a|n> = n|n-1> (zero at n = 0) and
/// pi|n> = |n+1>. The result drops cancelled amplitudes.
StateExpansion apply_to_basis(const NormalOrderedPoly& p, const BasisState& state);

/// Linear extension of apply_to_basis over a ket expansion.
StateExpansion apply_to_expansion(const NormalOrderedPoly& p, const StateExpansion& ket);

/// <n|m> = prod_i n_i! delta, extended linearly over the ket.
Rational inner_product(const BasisState& bra, const StateExpansion& ket);

/// Dense exact matrix over the tensor basis |0..cap> per species, column
/// index = source state.
struct RationalMatrix {
  std::size_t dim = 0;
  std::vector<Rational> entries;

  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t d) : dim(d), entries(d * d) {}

  Rational& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
  const Rational& at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
};

RationalMatrix matrix_multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Entry (m, n) = coefficient of |m> in p|n>; dimension (cap+1)^arity with
/// the same mixed-radix state enumeration as TruncatedLattice.
RationalMatrix matrix_representation(const NormalOrderedPoly& p, std::int64_t cap);

/// Renders terms in descending canonical order, e.g. "2·π^2·a - π·a".
/// Species subscripts appear only for arity > 1, taken from `names` when
/// provided (1-based indices otherwise).
std::string pretty(const NormalOrderedPoly& p, const std::vector<std::string>& names = {});

/// JSON object {"arity": n, "terms": [{"creation": [...], "annihilation":
/// [...], "coefficient": "p/q"}, ...]} in the same deterministic term order
/// as pretty().
std::string to_json_text(const NormalOrderedPoly& p);
NormalOrderedPoly poly_from_json_text(std::string_view text);

}  // namespace onestep
