#pragma once

#include <cstddef>
#include <vector>

#include "artinres/scalar.hpp"

namespace artinres::linalg {

/// Row-major dense matrix over a Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Scalar>& row);
  std::vector<Scalar> row(std::size_t r) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns the pivot columns. Zero rows
/// are dropped.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}.
std::vector<std::vector<Scalar>> kernel(Matrix m);

}  // namespace artinres::linalg
