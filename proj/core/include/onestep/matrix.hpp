#pragma once

#include <cstddef>
#include <vector>

namespace onestep {

/// Minimal dense row-major matrix of doubles. Kept deliberately small: the
/// matrices in this library are n-by-n for a handful of species.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool empty() const { return rows == 0 || cols == 0; }
};

inline bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

}  // namespace onestep
