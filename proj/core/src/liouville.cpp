#include "onestep/liouville.hpp"

#include <nlohmann/json.hpp>

#include "onestep/errors.hpp"

namespace onestep {

namespace {

NormalOrderedPoly side_word(std::size_t arity, const std::vector<int>& powers, bool creation) {
  OperatorWord word{std::vector<std::uint32_t>(arity, 0), std::vector<std::uint32_t>(arity, 0)};
  auto& slot = creation ? word.creation : word.annihilation;
  for (std::size_t i = 0; i < arity; ++i) slot[i] = static_cast<std::uint32_t>(powers[i]);
  return NormalOrderedPoly::monomial(std::move(word), Rational(1));
}

}  // namespace

LiouvilleOperator build_liouville(const InteractionScheme& scheme) {
  validate_scheme(scheme, /*require_active_rates=*/false);
  const std::size_t arity = scheme.species.size();
  NormalOrderedPoly poly(arity);
  for (const Interaction& interaction : scheme.interactions) {
    const NormalOrderedPoly pi_reactants = side_word(arity, interaction.reactants, true);
    const NormalOrderedPoly pi_products = side_word(arity, interaction.products, true);
    const NormalOrderedPoly a_reactants = side_word(arity, interaction.reactants, false);
    const NormalOrderedPoly a_products = side_word(arity, interaction.products, false);
    if (interaction.rate_forward != 0) {
      poly += interaction.rate_forward *
              multiply(pi_products - pi_reactants, a_reactants);
    }
    if (interaction.rate_backward != 0) {
      poly += interaction.rate_backward *
              multiply(pi_reactants - pi_products, a_products);
    }
  }
  return LiouvilleOperator{std::move(poly), scheme.species.names()};
}

RationalGenerator generator_from_liouville(const NormalOrderedPoly& poly,
                                           const TruncatedLattice& lattice) {
  if (poly.arity() != lattice.arity()) throw DomainError("lattice arity mismatch");
  RationalGenerator generator(lattice.size());
  for (std::size_t col = 0; col < lattice.size(); ++col) {
    const BasisState source{lattice.state_of(col)};
    const StateExpansion image = apply_to_basis(poly, source);
    for (const auto& [target, amplitude] : image) {
      if (!lattice.contains(target.occupation)) continue;
      Rational scale(1);
      for (const auto n : target.occupation) {
        scale *= Rational(factorial(static_cast<std::uint64_t>(n)));
      }
      const Rational entry = inner_product(target, image) / scale;
      if (entry != 0) generator.set(lattice.index_of(target.occupation), col, entry);
    }
  }
  return generator;
}

EquivalenceReport compare_generators(const RationalGenerator& combinatorial,
                                     const RationalGenerator& operator_based,
                                     const TruncatedLattice& lattice,
                                     const std::vector<int>& max_step) {
  if (combinatorial.dimension() != lattice.size() || operator_based.dimension() != lattice.size()) {
    throw DomainError("generator dimension mismatch");
  }
  EquivalenceReport report;
  report.caps = lattice.caps();
  const auto box = interior_box(lattice, max_step);
  if (!box) throw DomainError("no interior states at this truncation");
  for (std::size_t i = 0; i < lattice.arity(); ++i) {
    report.interior_range.emplace_back(box->first[i], box->second[i]);
  }

  for (std::size_t col = 0; col < lattice.size(); ++col) {
    if (!is_interior(lattice, lattice.state_of(col), max_step)) continue;
    ++report.interior_count;
    const auto& lhs = combinatorial.column(col);
    const auto& rhs = operator_based.column(col);
    auto li = lhs.begin();
    auto ri = rhs.begin();
    while (li != lhs.end() || ri != rhs.end()) {
      std::size_t row;
      Rational a(0), b(0);
      if (ri == rhs.end() || (li != lhs.end() && li->first < ri->first)) {
        row = li->first;
        a = li->second;
        ++li;
      } else if (li == lhs.end() || ri->first < li->first) {
        row = ri->first;
        b = ri->second;
        ++ri;
      } else {
        row = li->first;
        a = li->second;
        b = ri->second;
        ++li;
        ++ri;
      }
      if (a == b) continue;
      report.equal = false;
      const Rational gap = a > b ? Rational(a - b) : Rational(b - a);
      if (gap > report.max_discrepancy) report.max_discrepancy = gap;
      GeneratorMismatch mismatch{row, col, a, b};
      if (!report.first_mismatch) report.first_mismatch = mismatch;
      report.mismatches.push_back(std::move(mismatch));
    }
  }
  return report;
}

EquivalenceReport verify_equivalence(const InteractionScheme& scheme,
                                     const TruncatedLattice& lattice) {
  const RationalGenerator combinatorial = build_generator_rational(scheme, lattice);
  const LiouvilleOperator liouville = build_liouville(scheme);
  const RationalGenerator operator_based = generator_from_liouville(liouville.poly, lattice);
  return compare_generators(combinatorial, operator_based, lattice,
                            max_step_magnitude(scheme));
}

std::string to_json_text(const EquivalenceReport& report) {
  nlohmann::json root;
  root["equal"] = report.equal;
  root["cap"] = report.caps;
  nlohmann::json ranges = nlohmann::json::array();
  for (const auto& [lo, hi] : report.interior_range) ranges.push_back({lo, hi});
  root["interior_range"] = std::move(ranges);
  root["interior_states"] = report.interior_count;
  root["max_discrepancy"] = to_string(report.max_discrepancy);
  nlohmann::json mismatches = nlohmann::json::array();
  for (const GeneratorMismatch& mismatch : report.mismatches) {
    mismatches.push_back({{"row", mismatch.row},
                          {"col", mismatch.col},
                          {"combinatorial", to_string(mismatch.combinatorial)},
                          {"operator", to_string(mismatch.operator_based)}});
  }
  root["mismatches"] = std::move(mismatches);
  return root.dump(2);
}

}  // namespace onestep
