#pragma once

// Dense exact linear algebra over a Field.

#include <cstddef>
#include <optional>
#include <vector>

#include "fatpoints/coeff.hpp"

namespace fatpoints {

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::vector<Scalar>> to_rows() const;

  /// Brings the matrix to reduced row echelon form in place and returns the
  /// pivot column of each nonzero row.
  std::vector<std::size_t> row_reduce();

  std::size_t rank() const;
  /// Basis of {v : M v = 0}.
  std::vector<std::vector<Scalar>> kernel() const;
  /// nullopt when singular or not square.
  std::optional<Matrix> inverse() const;

  Matrix operator*(const Matrix& o) const;
  static Matrix identity(Field field, std::size_t n);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

}  // namespace fatpoints
