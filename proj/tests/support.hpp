// Shared generators and independent oracles for the test suites. Nothing in
// here calls the library's elimination, wedge or Hessian code paths.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cubiform/cubic.hpp"
#include "cubiform/exterior.hpp"
#include "cubiform/field.hpp"
#include "cubiform/matrix.hpp"

namespace testing {

using namespace cubiform;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0xC0B1F0);
  return engine;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rational(long range = 9) {
  long den = rand_int(1, 4);
  return Rational(rand_int(-range, range), den);
}

inline FieldElem rand_elem(FieldTag tag, long range = 9) {
  if (tag == FieldTag::Q) return FieldElem(rand_rational(range));
  return FieldElem(tag, rand_rational(range), rand_rational(range));
}

inline FieldElem rand_int_elem(FieldTag tag, long lo, long hi) {
  if (tag == FieldTag::Q) return FieldElem(rand_int(lo, hi));
  return FieldElem(tag, rand_int(lo, hi), rand_int(lo, hi));
}

inline Point rand_point(std::size_t m, FieldTag tag, long lo = -5, long hi = 5) {
  Point p;
  for (std::size_t i = 0; i < m; ++i) p.push_back(rand_int_elem(tag, lo, hi));
  return p;
}

inline Point rand_nonzero_point(std::size_t m, FieldTag tag, long lo = -5, long hi = 5) {
  for (;;) {
    Point p = rand_point(m, tag, lo, hi);
    if (std::any_of(p.begin(), p.end(), [](const FieldElem& x) { return !x.is_zero(); })) return p;
  }
}

/// Random cubic with small integer tensor entries; roughly `density` of the
/// sorted keys are populated.
inline CubicForm rand_cubic(std::size_t m, FieldTag tag = FieldTag::Q, double density = 0.5, long range = 3) {
  CubicForm f(m, tag);
  std::bernoulli_distribution keep(density);
  for (int a = 0; a < static_cast<int>(m); ++a)
    for (int b = a; b < static_cast<int>(m); ++b)
      for (int c = b; c < static_cast<int>(m); ++c)
        if (keep(rng())) f.set(a, b, c, rand_int_elem(tag, -range, range));
  return f;
}

// --- oracles -------------------------------------------------------------

/// Plain Gauss-Jordan rank with field division, independent of the Bareiss code.
inline std::size_t oracle_rank(std::vector<std::vector<FieldElem>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      FieldElem factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<FieldElem>> rows_of(const Matrix& m) {
  std::vector<std::vector<FieldElem>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
  return out;
}

/// Sum over all m^3 ordered triples of T_abc p_a p_b p_c.
inline FieldElem oracle_evaluate(const CubicForm& f, const Point& p) {
  FieldElem sum = FieldElem::zero(f.tag());
  const int m = static_cast<int>(f.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) sum += f.coefficient(a, b, c) * p[a] * p[b] * p[c];
  return sum;
}

/// dF/dx_j by differentiating each ordered monomial x_a x_b x_c.
inline std::vector<FieldElem> oracle_gradient(const CubicForm& f, const Point& p) {
  const int m = static_cast<int>(f.size());
  std::vector<FieldElem> g(m, FieldElem::zero(f.tag()));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        FieldElem t = f.coefficient(a, b, c);
        if (t.is_zero()) continue;
        g[a] += t * p[b] * p[c];
        g[b] += t * p[a] * p[c];
        g[c] += t * p[a] * p[b];
      }
  return g;
}

/// Second partials by differentiating each ordered monomial twice.
inline std::vector<std::vector<FieldElem>> oracle_hessian(const CubicForm& f, const Point& p) {
  const int m = static_cast<int>(f.size());
  std::vector<std::vector<FieldElem>> h(m, std::vector<FieldElem>(m, FieldElem::zero(f.tag())));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        FieldElem t = f.coefficient(a, b, c);
        if (t.is_zero()) continue;
        const int idx[3] = {a, b, c};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int k = 3 - i - j;
            h[idx[i]][idx[j]] += t * p[idx[k]];
          }
      }
  return h;
}

/// Sign of dz-ordinal sequence against the reference order by counting
/// inversions; 0 if any ordinal repeats.
inline int oracle_parity(const std::vector<int>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] == seq[j]) return 0;
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

/// Ordinal pair of basis element `index` (0..14) written out from the basis
/// definition, without the library tables.
inline std::vector<int> oracle_pair(int index) {
  // ordinals: dz_i -> i-1, dzb_i -> 3+i-1
  static const int pairs[15][2] = {{0, 1}, {0, 2}, {1, 2},                                  // z12 z13 z23
                                   {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                   {3, 4}, {3, 5}, {4, 5}};                                 // zb1b2 zb1b3 zb2b3
  return {pairs[index][0], pairs[index][1]};
}

inline int oracle_triple(int a, int b, int c) {
  std::vector<int> seq;
  for (int x : {a, b, c}) {
    auto p = oracle_pair(x);
    seq.insert(seq.end(), p.begin(), p.end());
  }
  return oracle_parity(seq);
}

/// Leibniz expansion of a 3 x 3 determinant.
template <typename T>
T leibniz3(const T (&m)[3][3]) {
  int perm[3] = {0, 1, 2};
  T sum = m[0][0] - m[0][0];
  do {
    int sign = oracle_parity({perm[0], perm[1], perm[2]});
    T term = m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]];
    sum = sign > 0 ? sum + term : sum - term;
  } while (std::next_permutation(perm, perm + 3));
  return sum;
}

inline Matrix rand_invertible(std::size_t m, FieldTag tag = FieldTag::Q) {
  for (;;) {
    Matrix l(m, m, tag);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) l(r, c) = rand_int_elem(tag, -2, 2);
    if (oracle_rank(rows_of(l)) == m) return l;
  }
}

}  // namespace testing
