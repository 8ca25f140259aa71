#include "fatpoints/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fatpoints {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix::Matrix(Field field, const std::vector<std::vector<Scalar>>& rows)
    : Matrix(field, rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = rows[r][c];
  }
}

std::vector<std::vector<Scalar>> Matrix::to_rows() const {
  std::vector<std::vector<Scalar>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  return out;
}

std::vector<std::size_t> Matrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pr = row;
    while (pr < rows_ && field_.is_zero(at(pr, col))) ++pr;
    if (pr == rows_) continue;
    if (pr != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(pr, c), at(row, c));
    Scalar inv = field_.inv(at(row, col));
    for (std::size_t c = col; c < cols_; ++c) at(row, c) = field_.mul(at(row, c), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || field_.is_zero(at(r, col))) continue;
      Scalar factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) {
        if (field_.is_zero(at(row, c))) continue;
        at(r, c) = field_.sub(at(r, c), field_.mul(factor, at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.row_reduce().size();
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
  Matrix rref = *this;
  auto pivots = rref.row_reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, field_.zero());
    v[free] = field_.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field_.neg(rref.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, n + r) = field_.one();
  }
  auto pivots = aug.row_reduce();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(field_, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (field_.is_zero(at(r, k))) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        out.at(r, c) = field_.add(out.at(r, c), field_.mul(at(r, k), o.at(k, c)));
    }
  return out;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix id(field, n, n);
  for (std::size_t i = 0; i < n; ++i) id.at(i, i) = field.one();
  return id;
}

}  // namespace fatpoints
