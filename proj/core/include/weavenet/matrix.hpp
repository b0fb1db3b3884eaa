#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace weavenet {

/// Dense row-major matrix of doubles. Plain storage shared by score
/// matrices, solver costs, and binarization inputs; the autodiff engine
/// has its own tensor type.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) {
    assert(r < rows && c < cols);
    return data[r * cols + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    assert(r < rows && c < cols);
    return data[r * cols + c];
  }

  DenseMatrix transposed() const {
    DenseMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const DenseMatrix&) const = default;
};

}  // namespace weavenet
