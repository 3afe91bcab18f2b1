#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cubiform/field.hpp"
#include "cubiform/matrix.hpp"

namespace cubiform {

using Point = std::vector<FieldElem>;

/// Sorted (a <= b <= c), 0-based index triple.
using TripleKey = std::array<int, 3>;

TripleKey sorted_key(int a, int b, int c);

/// Number of distinct orderings of a sorted key: 1, 3 or 6.
int multiplicity(const TripleKey& key);

/// Coefficients of x -> sum_c coeffs[c] * x_c.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(std::size_t m, FieldTag tag) : coeffs_(m, FieldElem::zero(tag)) {}
  explicit LinearForm(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const { return coeffs_.size(); }
  const FieldElem& operator[](std::size_t c) const { return coeffs_[c]; }
  FieldElem& operator[](std::size_t c) { return coeffs_[c]; }
  const std::vector<FieldElem>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  FieldElem evaluate(std::span<const FieldElem> p) const;
  /// e.g. "6*x3 - 6*x12"; variables are named x1..xm.
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<FieldElem> coeffs_;
};

/// Symmetric m x m matrix of linear forms, entry (j, k) = d^2 F / dx_j dx_k.
class HessianForm {
 public:
  HessianForm(std::size_t m, FieldTag tag);

  std::size_t size() const { return m_; }
  FieldTag tag() const { return tag_; }
  const LinearForm& operator()(std::size_t j, std::size_t k) const { return entries_[j * m_ + k]; }
  LinearForm& operator()(std::size_t j, std::size_t k) { return entries_[j * m_ + k]; }

  Matrix evaluate(std::span<const FieldElem> p) const;

 private:
  std::size_t m_;
  FieldTag tag_;
  std::vector<LinearForm> entries_;
};

/// Homogeneous cubic sum_{a,b,c} T_abc x_a x_b x_c given by its symmetric
/// coefficient tensor T.
///
/// Only sorted keys are stored, each with the full tensor value T_abc (not
/// divided by the number of orderings). So x^3 is T_000 = 1, and
/// 3 x_0^2 x_1 is T_001 = 1. Zero coefficients are never stored.
class CubicForm {
 public:
  CubicForm() = default;
  explicit CubicForm(std::size_t m, FieldTag tag = FieldTag::Q) : m_(m), tag_(tag) {}

  std::size_t size() const { return m_; }
  FieldTag tag() const { return tag_; }
  const std::map<TripleKey, FieldElem>& entries() const { return entries_; }

  /// T_abc for any ordering of the indices.
  FieldElem coefficient(int a, int b, int c) const;
  /// Sets T_abc (and all its permutations). Setting zero erases the entry.
  void set(int a, int b, int c, const FieldElem& value);

  FieldElem evaluate(std::span<const FieldElem> p) const;
  /// dF/dx_j = 3 sum_{b,c} T_jbc p_b p_c.
  std::vector<FieldElem> gradient(std::span<const FieldElem> p) const;

  CubicForm widen(FieldTag target) const;
  CubicForm scaled(const FieldElem& s) const;

  friend bool operator==(const CubicForm&, const CubicForm&) = default;

 private:
  std::size_t m_ = 0;
  FieldTag tag_ = FieldTag::Q;
  std::map<TripleKey, FieldElem> entries_;
};

/// Entry (j, k) is the linear form x -> 6 sum_c T_jkc x_c.
HessianForm hessian_form(const CubicForm& f);

/// Hessian of `f` evaluated at `p`, computed directly from the tensor.
Matrix hessian_at(const CubicForm& f, std::span<const FieldElem> p);

std::size_t hessian_rank_at(const CubicForm& f, std::span<const FieldElem> p);

/// F o L: T'_abc = sum T_def L_da L_eb L_fc. Throws DimensionError when L is not
/// m x m and Error when L is singular.
CubicForm base_change(const CubicForm& f, const Matrix& l);

class DomainError : public Error {
 public:
  using Error::Error;
};

/// a x_0^3 + F(x_1..x_m): the cubic after blowing up a point, the exceptional
/// class being the new first coordinate. Requires a != 0.
CubicForm blowup_point(const CubicForm& f, const FieldElem& a);

/// a x_0^3 + 3 sum_i b_i x_0^2 x_i + F(x_1..x_m): the cubic after blowing up a
/// curve, with a = E^3 and b_i = E^2 . f*gamma_i.
CubicForm blowup_curve(const CubicForm& f, const FieldElem& a, std::span<const FieldElem> b);

/// F_Z(x) + sum_i a_i y_i^3 in m + k variables. Every a_i must be nonzero.
CubicForm direct_sum_with_cubes(const CubicForm& fz, std::span<const long> a);

/// Widens every coordinate of a point to `tag`.
Point widen(std::span<const FieldElem> p, FieldTag tag);

}  // namespace cubiform
