#include "onestep/fock.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "onestep/errors.hpp"
#include "onestep/lattice.hpp"

namespace onestep {

namespace {

void check_arity(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("operator arity mismatch");
}

}  // namespace

bool OperatorWord::identity() const {
  const auto is_zero = [](std::uint32_t p) { return p == 0; };
  return std::all_of(creation.begin(), creation.end(), is_zero) &&
         std::all_of(annihilation.begin(), annihilation.end(), is_zero);
}

NormalOrderedPoly NormalOrderedPoly::zero(std::size_t arity) { return NormalOrderedPoly(arity); }

NormalOrderedPoly NormalOrderedPoly::constant(std::size_t arity, const Rational& value) {
  NormalOrderedPoly poly(arity);
  OperatorWord word{std::vector<std::uint32_t>(arity, 0), std::vector<std::uint32_t>(arity, 0)};
  poly.add_term(word, value);
  return poly;
}

NormalOrderedPoly NormalOrderedPoly::creation_op(std::size_t arity, std::size_t species,
                                                 std::uint32_t power) {
  if (species >= arity) throw DomainError("species index out of range");
  OperatorWord word{std::vector<std::uint32_t>(arity, 0), std::vector<std::uint32_t>(arity, 0)};
  word.creation[species] = power;
  return monomial(std::move(word), Rational(1));
}

NormalOrderedPoly NormalOrderedPoly::annihilation_op(std::size_t arity, std::size_t species,
                                                     std::uint32_t power) {
  if (species >= arity) throw DomainError("species index out of range");
  OperatorWord word{std::vector<std::uint32_t>(arity, 0), std::vector<std::uint32_t>(arity, 0)};
  word.annihilation[species] = power;
  return monomial(std::move(word), Rational(1));
}

NormalOrderedPoly NormalOrderedPoly::monomial(OperatorWord word, const Rational& coefficient) {
  if (word.creation.size() != word.annihilation.size() || word.creation.empty()) {
    throw DomainError("malformed operator word");
  }
  NormalOrderedPoly poly(word.creation.size());
  poly.add_term(word, coefficient);
  return poly;
}

void NormalOrderedPoly::add_term(const OperatorWord& word, const Rational& coefficient) {
  if (word.creation.size() != arity_ || word.annihilation.size() != arity_) {
    throw DomainError("operator arity mismatch");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

NormalOrderedPoly& NormalOrderedPoly::operator+=(const NormalOrderedPoly& other) {
  check_arity(arity_, other.arity_);
  for (const auto& [word, coefficient] : other.terms_) add_term(word, coefficient);
  return *this;
}

NormalOrderedPoly& NormalOrderedPoly::operator-=(const NormalOrderedPoly& other) {
  check_arity(arity_, other.arity_);
  for (const auto& [word, coefficient] : other.terms_) add_term(word, -coefficient);
  return *this;
}

NormalOrderedPoly& NormalOrderedPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [word, coefficient] : terms_) coefficient *= scalar;
  return *this;
}

NormalOrderedPoly NormalOrderedPoly::pow(std::uint32_t exponent) const {
  NormalOrderedPoly result = constant(arity_, Rational(1));
  for (std::uint32_t k = 0; k < exponent; ++k) result = multiply(result, *this);
  return result;
}

NormalOrderedPoly operator+(NormalOrderedPoly a, const NormalOrderedPoly& b) {
  a += b;
  return a;
}

NormalOrderedPoly operator-(NormalOrderedPoly a, const NormalOrderedPoly& b) {
  a -= b;
  return a;
}

NormalOrderedPoly operator*(const Rational& scalar, NormalOrderedPoly p) {
  p *= scalar;
  return p;
}

NormalOrderedPoly multiply(const NormalOrderedPoly& p, const NormalOrderedPoly& q) {
  check_arity(p.arity(), q.arity());
  const std::size_t arity = p.arity();
  NormalOrderedPoly result(arity);
  struct Partial {
    Rational weight;
    OperatorWord word;
  };
  for (const auto& [w1, c1] : p.terms()) {
    for (const auto& [w2, c2] : q.terms()) {
      // (pi^c1 a^d1)(pi^c2 a^d2): reorder a^d1 pi^c2 species by species.
      std::vector<Partial> partials;
      partials.push_back({c1 * c2,
                          OperatorWord{std::vector<std::uint32_t>(arity, 0),
                                       std::vector<std::uint32_t>(arity, 0)}});
      for (std::size_t s = 0; s < arity; ++s) {
        const std::uint32_t d1 = w1.annihilation[s];
        const std::uint32_t c2p = w2.creation[s];
        const std::uint32_t kmax = std::min(d1, c2p);
        std::vector<Partial> next;
        next.reserve(partials.size() * (kmax + 1));
        for (const Partial& partial : partials) {
          for (std::uint32_t k = 0; k <= kmax; ++k) {
            const Integer weight = factorial(k) * binomial(d1, k) * binomial(c2p, k);
            Partial expanded = partial;
            expanded.weight *= Rational(weight);
            expanded.word.creation[s] = w1.creation[s] + (c2p - k);
            expanded.word.annihilation[s] = (d1 - k) + w2.annihilation[s];
            next.push_back(std::move(expanded));
          }
        }
        partials = std::move(next);
      }
      for (const Partial& partial : partials) {
        result.add_term(partial.word, partial.weight);
      }
    }
  }
  return result;
}

NormalOrderedPoly operator*(const NormalOrderedPoly& p, const NormalOrderedPoly& q) {
  return multiply(p, q);
}

NormalOrderedPoly commutator(const NormalOrderedPoly& p, const NormalOrderedPoly& q) {
  return multiply(p, q) - multiply(q, p);
}

StateExpansion apply_to_basis(const NormalOrderedPoly& p, const BasisState& state) {
  if (state.occupation.size() != p.arity()) throw DomainError("state arity mismatch");
  for (const auto n : state.occupation) {
    if (n < 0) throw DomainError("occupation numbers must be non-negative");
  }
  StateExpansion result;
  for (const auto& [word, coefficient] : p.terms()) {
    Rational amplitude = coefficient;
    BasisState target = state;
    bool vanished = false;
    for (std::size_t s = 0; s < p.arity(); ++s) {
      const std::uint32_t d = word.annihilation[s];
      const Integer factor = falling_factorial(Integer(state.occupation[s]), d);
      if (factor == 0 && d > 0) {
        vanished = true;
        break;
      }
      amplitude *= Rational(factor);
      target.occupation[s] =
          state.occupation[s] - static_cast<std::int64_t>(d) + static_cast<std::int64_t>(word.creation[s]);
    }
    if (vanished) continue;
    auto [it, inserted] = result.emplace(target, amplitude);
    if (!inserted) {
      it->second += amplitude;
      if (it->second == 0) result.erase(it);
    }
  }
  return result;
}

StateExpansion apply_to_expansion(const NormalOrderedPoly& p, const StateExpansion& ket) {
  StateExpansion result;
  for (const auto& [state, amplitude] : ket) {
    const StateExpansion image = apply_to_basis(p, state);
    for (const auto& [target, value] : image) {
      auto [it, inserted] = result.emplace(target, amplitude * value);
      if (!inserted) {
        it->second += amplitude * value;
        if (it->second == 0) result.erase(it);
      }
    }
  }
  return result;
}

Rational inner_product(const BasisState& bra, const StateExpansion& ket) {
  for (const auto n : bra.occupation) {
    if (n < 0) throw DomainError("occupation numbers must be non-negative");
  }
  auto it = ket.find(bra);
  if (it == ket.end()) return Rational(0);
  if (it->first.occupation.size() != bra.occupation.size()) throw DomainError("state arity mismatch");
  Rational value = it->second;
  for (const auto n : bra.occupation) {
    value *= Rational(factorial(static_cast<std::uint64_t>(n)));
  }
  return value;
}

RationalMatrix matrix_multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim != b.dim) throw DomainError("matrix dimension mismatch");
  RationalMatrix result(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Rational& left = a.at(i, k);
      if (left == 0) continue;
      for (std::size_t j = 0; j < a.dim; ++j) {
        const Rational& right = b.at(k, j);
        if (right == 0) continue;
        result.at(i, j) += left * right;
      }
    }
  }
  return result;
}

RationalMatrix matrix_representation(const NormalOrderedPoly& p, std::int64_t cap) {
  if (cap < 1) throw DomainError("cap must be at least 1");
  const TruncatedLattice lattice(std::vector<std::int64_t>(p.arity(), cap));
  RationalMatrix matrix(lattice.size());
  for (std::size_t col = 0; col < lattice.size(); ++col) {
    const BasisState source{lattice.state_of(col)};
    const StateExpansion image = apply_to_basis(p, source);
    for (const auto& [target, amplitude] : image) {
      if (!lattice.contains(target.occupation)) continue;
      matrix.at(lattice.index_of(target.occupation), col) = amplitude;
    }
  }
  return matrix;
}

namespace {

void append_power(std::ostream& out, const char* symbol, std::size_t species, std::uint32_t power,
                  bool subscripted, const std::vector<std::string>& names, bool& first_factor) {
  if (power == 0) return;
  if (!first_factor) out << "·";
  first_factor = false;
  out << symbol;
  if (subscripted) {
    out << '_';
    if (species < names.size() && !names[species].empty()) {
      out << names[species];
    } else {
      out << (species + 1);
    }
  }
  if (power > 1) out << '^' << power;
}

}  // namespace

std::string pretty(const NormalOrderedPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  const bool subscripted = p.arity() > 1;
  std::ostringstream out;
  bool first_term = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [word, coefficient] = *it;
    const bool negative = coefficient < 0;
    const Rational magnitude = negative ? Rational(-coefficient) : coefficient;
    if (first_term) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first_term = false;

    bool first_factor = true;
    if (magnitude != 1 || word.identity()) {
      out << to_string(magnitude);
      first_factor = false;
    }
    for (std::size_t s = 0; s < p.arity(); ++s) {
      append_power(out, "π", s, word.creation[s], subscripted, names, first_factor);
    }
    for (std::size_t s = 0; s < p.arity(); ++s) {
      append_power(out, "a", s, word.annihilation[s], subscripted, names, first_factor);
    }
  }
  return out.str();
}

std::string to_json_text(const NormalOrderedPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [word, coefficient] = *it;
    nlohmann::json term;
    term["creation"] = word.creation;
    term["annihilation"] = word.annihilation;
    term["coefficient"] = to_string(coefficient);
    terms.push_back(std::move(term));
  }
  nlohmann::json root;
  root["arity"] = p.arity();
  root["terms"] = std::move(terms);
  return root.dump(2);
}

NormalOrderedPoly poly_from_json_text(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw DomainError(std::string("invalid operator JSON: ") + error.what());
  }
  if (!root.is_object() || !root.contains("arity") || !root.contains("terms") ||
      !root["terms"].is_array()) {
    throw DomainError("invalid operator JSON: expected {arity, terms}");
  }
  const auto arity = root["arity"].get<std::size_t>();
  if (arity == 0) throw DomainError("invalid operator JSON: arity must be positive");
  NormalOrderedPoly poly(arity);
  for (const auto& term : root["terms"]) {
    if (!term.contains("creation") || !term.contains("annihilation") ||
        !term.contains("coefficient")) {
      throw DomainError("invalid operator JSON: malformed term");
    }
    OperatorWord word;
    word.creation = term["creation"].get<std::vector<std::uint32_t>>();
    word.annihilation = term["annihilation"].get<std::vector<std::uint32_t>>();
    if (word.creation.size() != arity || word.annihilation.size() != arity) {
      throw DomainError("invalid operator JSON: term arity mismatch");
    }
    poly.add_term(word, rational_from_string(term["coefficient"].get<std::string>()));
  }
  return poly;
}

}  // namespace onestep
