#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <vector>

#include "onestep/errors.hpp"
#include "onestep/lattice.hpp"
#include "onestep/rational.hpp"
#include "onestep/scheme.hpp"

namespace onestep {

/// Column-sparse square matrix for master-equation generators. Column m
/// holds the rates out of state m: entry (n, m) is the rate of the jump
/// m -> n, the diagonal is minus the total outflow (including jumps that
/// leave the lattice, which makes truncation absorbing).
template <class Scalar>
class SparseGenerator {
 public:
  explicit SparseGenerator(std::size_t dimension) : cols_(dimension) {}

  std::size_t dimension() const { return cols_.size(); }

  void add(std::size_t row, std::size_t col, const Scalar& value) {
    check(row, col);
    auto [it, inserted] = cols_[col].emplace(row, value);
    if (!inserted) it->second += value;
  }

  void set(std::size_t row, std::size_t col, const Scalar& value) {
    check(row, col);
    cols_[col][row] = value;
  }

  Scalar entry(std::size_t row, std::size_t col) const {
    check(row, col);
    auto it = cols_[col].find(row);
    return it == cols_[col].end() ? Scalar{0} : it->second;
  }

  const std::map<std::size_t, Scalar>& column(std::size_t col) const {
    check(col, col);
    return cols_[col];
  }

  /// Off-diagonal entries are summed in ascending row order, the diagonal is
  /// added last. build_generator writes the diagonal as minus that same
  /// ordered sum (plus absorbed boundary outflow), so interior column sums
  /// cancel exactly even in floating point.
  Scalar column_sum(std::size_t col) const {
    Scalar off{0};
    Scalar diag{0};
    for (const auto& [row, value] : column(col)) {
      if (row == col) {
        diag = value;
      } else {
        off += value;
      }
    }
    return off + diag;
  }

  std::size_t entry_count() const {
    std::size_t count = 0;
    for (const auto& col : cols_) count += col.size();
    return count;
  }

 private:
  void check(std::size_t row, std::size_t col) const {
    if (row >= cols_.size() || col >= cols_.size()) throw DomainError("generator index out of range");
  }

  std::vector<std::map<std::size_t, Scalar>> cols_;
};

using GeneratorMatrix = SparseGenerator<double>;
using RationalGenerator = SparseGenerator<Rational>;

/// Assembles the truncated master-equation generator from exact propensities.
/// Throws DomainError when no interaction's step fits inside the lattice.
GeneratorMatrix build_generator(const InteractionScheme& scheme, const TruncatedLattice& lattice);

/// Same assembly in exact rational arithmetic.
RationalGenerator build_generator_rational(const InteractionScheme& scheme,
                                           const TruncatedLattice& lattice);

double max_abs_diagonal(const GeneratorMatrix& generator);

/// out = G p. out is resized and overwritten.
void apply_generator(const GeneratorMatrix& generator, const std::vector<double>& p,
                     std::vector<double>& out);

}  // namespace onestep
