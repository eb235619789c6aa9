#include "onestep/scheme.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "onestep/errors.hpp"

namespace onestep {

SpeciesTable::SpeciesTable(std::vector<std::string> names) {
  for (auto& n : names) add(n);
}

std::size_t SpeciesTable::add(const std::string& name) {
  auto [it, inserted] = index_.emplace(name, names_.size());
  if (!inserted) throw std::invalid_argument("duplicate species '" + name + "'");
  names_.push_back(name);
  return it->second;
}

std::optional<std::size_t> SpeciesTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Interaction::step() const {
  std::vector<int> r(reactants.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = products[i] - reactants[i];
  return r;
}

StepMatrix step_operator(const InteractionScheme& scheme) {
  StepMatrix r;
  r.reserve(scheme.interactions.size());
  for (const auto& inter : scheme.interactions) r.push_back(inter.step());
  return r;
}

void validate_scheme(const InteractionScheme& scheme, bool require_active_rates) {
  const std::size_t n = scheme.order();
  if (n == 0) throw DomainError("scheme has no species");
  if (scheme.interactions.empty()) throw DomainError("scheme has no interactions");
  for (std::size_t a = 0; a < scheme.interactions.size(); ++a) {
    const auto& inter = scheme.interactions[a];
    const std::string where = "interaction " + std::to_string(a + 1);
    if (inter.reactants.size() != n || inter.products.size() != n) {
      throw DomainError(where + ": stoichiometry vectors must have length " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (inter.reactants[i] < 0 || inter.products[i] < 0) {
        throw DomainError(where + ": negative stoichiometry");
      }
      if (inter.reactants[i] > kMaxStoichiometry || inter.products[i] > kMaxStoichiometry) {
        throw DomainError(where + ": stoichiometry exceeds " + std::to_string(kMaxStoichiometry));
      }
    }
    if (inter.reactants == inter.products) {
      throw DomainError(where + ": no-op interaction (reactants equal products)");
    }
    if (inter.rate_forward < 0 || inter.rate_backward < 0) {
      throw DomainError(where + ": negative rate");
    }
    if (require_active_rates && inter.rate_forward == 0 && inter.rate_backward == 0) {
      throw DomainError(where + ": both rates are zero");
    }
  }
}

std::vector<int> max_step_magnitude(const InteractionScheme& scheme) {
  std::vector<int> out(scheme.order(), 0);
  for (const auto& inter : scheme.interactions) {
    const auto r = inter.step();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], std::abs(r[i]));
  }
  return out;
}

namespace {

void render_side(std::ostringstream& out, const std::vector<int>& stoich,
                 const SpeciesTable& species) {
  bool any = false;
  for (std::size_t i = 0; i < stoich.size(); ++i) {
    if (stoich[i] == 0) continue;
    if (any) out << " + ";
    if (stoich[i] != 1) out << stoich[i];
    out << species.name(i);
    any = true;
  }
  if (!any) out << "0";
}

}  // namespace

std::string serialize_scheme(const InteractionScheme& scheme) {
  std::ostringstream out;
  out << "species ";
  for (std::size_t i = 0; i < scheme.species.size(); ++i) {
    if (i) out << ", ";
    out << scheme.species.name(i);
  }
  out << "\n";
  for (const auto& inter : scheme.interactions) {
    render_side(out, inter.reactants, scheme.species);
    out << " -> ";
    render_side(out, inter.products, scheme.species);
    out << " @ " << to_decimal_string(inter.rate_forward);
    if (inter.rate_backward != 0) out << " ~ " << to_decimal_string(inter.rate_backward);
    out << "\n";
  }
  return out.str();
}

std::string scheme_hash(const InteractionScheme& scheme) {
  const std::string text = serialize_scheme(scheme);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return "fnv1a64:" + hex;
}

}  // namespace onestep
