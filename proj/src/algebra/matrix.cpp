#include "toda_rpp/algebra/matrix.hpp"

#include <string>
#include <utility>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

Matrix Matrix::minor(std::size_t row, std::size_t col) const {
  Matrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

namespace {

void require_square(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " matrix");
  }
}

}  // namespace

Scalar det_cofactor(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  std::vector<Scalar> terms;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Scalar t = m(0, j) * det_cofactor(m.minor(0, j));
    terms.push_back(j % 2 == 0 ? t : -t);
  }
  return sum(terms);
}

Scalar det_bareiss(const Matrix& input) {
  require_square(input);
  const std::size_t n = input.rows();
  if (n == 0) return Scalar(1);
  Matrix m = input;
  bool negate = false;
  Scalar prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Scalar();
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity makes this division exact.
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

Scalar det_exact(const Matrix& m) {
  require_square(m);
  return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

}  // namespace toda_rpp
