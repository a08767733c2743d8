#pragma once

#include <cstddef>
#include <vector>

#include "toda_rpp/algebra/scalar.hpp"

namespace toda_rpp {

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  Matrix minor(std::size_t row, std::size_t col) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact determinant. The 0x0 determinant is 1. Uses cofactor expansion up
/// to 4x4 and fraction-free (Bareiss) elimination above.
/// Throws ShapeError for a non-square matrix.
Scalar det_exact(const Matrix& m);

Scalar det_cofactor(const Matrix& m);
Scalar det_bareiss(const Matrix& m);

}  // namespace toda_rpp
