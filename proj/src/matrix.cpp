#include "cubiform/matrix.hpp"

#include <utility>

namespace cubiform {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldTag tag)
    : rows_(rows), cols_(cols), tag_(tag), data_(rows * cols, FieldElem::zero(tag)) {}

Matrix Matrix::identity(std::size_t n, FieldTag tag) {
  Matrix m(n, n, tag);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem::one(tag);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<FieldElem>>& rows) {
  if (rows.empty()) return {};
  FieldTag tag = rows.front().empty() ? FieldTag::Q : rows.front().front().tag();
  Matrix m(rows.size(), rows.front().size(), tag);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (rows[r][c].tag() != tag) throw FieldError("matrix entries over different fields");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, tag_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::widen(FieldTag target) const {
  Matrix w(rows_, cols_, target);
  for (std::size_t k = 0; k < data_.size(); ++k) w.data_[k] = data_[k].widen(target);
  return w;
}

std::vector<FieldElem> Matrix::apply(std::span<const FieldElem> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  std::vector<FieldElem> out(rows_, FieldElem::zero(tag_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DimensionError("matrix product size mismatch");
  if (lhs.tag_ != rhs.tag_) throw FieldError("matrix product over different fields");
  Matrix out(lhs.rows_, rhs.cols_, lhs.tag_);
  for (std::size_t r = 0; r < lhs.rows_; ++r)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const FieldElem& x = lhs(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (!rhs(k, c).is_zero()) out(r, c) += x * rhs(k, c);
      }
    }
  return out;
}

namespace {

// Bareiss elimination in place. Returns the rank and, via `sign`, the parity of
// the row swaps performed. The division by the previous pivot is exact.
std::size_t bareiss(Matrix& m, int& sign) {
  sign = 1;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  FieldElem prev = FieldElem::one(m.tag());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(rank, c));
      sign = -sign;
    }
    const FieldElem p = m(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const FieldElem lead = m(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        m(r, c) = (p * m(r, c) - lead * m(rank, c)) / prev;
      }
      m(r, col) = FieldElem::zero(m.tag());
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(Matrix m) {
  int sign = 1;
  return bareiss(m, sign);
}

FieldElem determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return FieldElem::one(m.tag());
  int sign = 1;
  std::size_t r = bareiss(m, sign);
  if (r < m.rows()) return FieldElem::zero(m.tag());
  FieldElem d = m(m.rows() - 1, m.cols() - 1);
  return sign < 0 ? -d : d;
}

}  // namespace cubiform
