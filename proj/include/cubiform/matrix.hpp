#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubiform/field.hpp"

namespace cubiform {

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldTag tag = FieldTag::Q);

  static Matrix identity(std::size_t n, FieldTag tag = FieldTag::Q);
  /// Builds a matrix from nested rows; all rows must have equal length and
  /// share a field tag.
  static Matrix from_rows(const std::vector<std::vector<FieldElem>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldTag tag() const { return tag_; }

  const FieldElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix widen(FieldTag target) const;
  std::vector<FieldElem> apply(std::span<const FieldElem> v) const;

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldTag tag_ = FieldTag::Q;
  std::vector<FieldElem> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination with row pivoting.
std::size_t rank(Matrix m);

/// Determinant of a square matrix (Bareiss).
FieldElem determinant(Matrix m);

}  // namespace cubiform
