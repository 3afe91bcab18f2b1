#include "doctest.h"
#include "support.hpp"

using namespace cubiform;
using testing::oracle_rank;
using testing::rows_of;

namespace {

CubicForm cube(long coeff = 1) {
  CubicForm f(1);
  f.set(0, 0, 0, FieldElem(coeff));
  return f;
}

CubicForm sum_of_cubes() {
  CubicForm f(2);
  f.set(0, 0, 0, 1);
  f.set(1, 1, 1, 1);
  return f;
}

// Coordinates x_{r c} of a 3 x 3 matrix at index 3r + c. T = sgn(sigma) on the
// triple {x_{0 s0}, x_{1 s1}, x_{2 s2}}, so F = 6 det.
CubicForm six_det() {
  CubicForm f(9);
  int perm[3] = {0, 1, 2};
  do {
    f.set(perm[0], 3 + perm[1], 6 + perm[2], FieldElem(testing::oracle_parity({perm[0], perm[1], perm[2]})));
  } while (std::next_permutation(perm, perm + 3));
  return f;
}

Point ints(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("tensor storage is symmetric and sparse") {
  CubicForm f(3);
  f.set(2, 0, 1, 5);
  CHECK(f.coefficient(0, 1, 2) == FieldElem(5));
  CHECK(f.coefficient(1, 2, 0) == FieldElem(5));
  CHECK(f.entries().size() == 1);
  f.set(1, 0, 2, 0);
  CHECK(f.entries().empty());
  CHECK_THROWS_AS(f.set(0, 0, 3, 1), DimensionError);
  CHECK_THROWS_AS(f.set(0, 0, 0, FieldElem::i()), FieldError);
  CHECK(multiplicity({0, 0, 0}) == 1);
  CHECK(multiplicity({0, 0, 2}) == 3);
  CHECK(multiplicity({0, 1, 2}) == 6);
}

TEST_CASE("evaluate") {
  CHECK(cube().evaluate(ints({2})) == FieldElem(8));
  CubicForm f = testing::rand_cubic(4);
  CHECK(f.evaluate(ints({0, 0, 0, 0})).is_zero());
  CHECK_THROWS_AS(f.evaluate(ints({1, 2})), DimensionError);
  CHECK_THROWS_AS(f.evaluate(Point(4, FieldElem::zero(FieldTag::QI))), FieldError);

  Point p(15, FieldElem(0));
  p[h2::holomorphic(1, 2)] = 1;
  p[h2::mixed(3, 1)] = 1;
  p[h2::antiholomorphic(2, 3)] = 1;
  CHECK(abelian_cubic().evaluate(p) == FieldElem(6));

  for (int trial = 0; trial < 50; ++trial) {
    CubicForm g = testing::rand_cubic(5, FieldTag::QOmega);
    Point q = testing::rand_point(5, FieldTag::QOmega);
    CHECK(g.evaluate(q) == testing::oracle_evaluate(g, q));
  }
}

TEST_CASE("hessian_form") {
  HessianForm h1 = hessian_form(cube());
  CHECK(h1(0, 0)[0] == FieldElem(6));

  HessianForm h2 = hessian_form(sum_of_cubes());
  CHECK(h2(0, 0).to_string() == "6*x1");
  CHECK(h2(1, 1).to_string() == "6*x2");
  CHECK(h2(0, 1).is_zero());

  // Rows (z12, z13), columns (z2b1, z3b1) of the abelian Hessian. Under the
  // basis z_ij = dz_i^dz_j, z_{i jbar} = dz_i^dzb_j the lower-left entry is
  // dz1 dz3 dz2 dzb1 dzb2 dzb3 = -(reference order), so the block is
  // [[0, 6x], [-6x, 0]] with x the zb2b3 coordinate.
  HessianForm ha = hessian_form(abelian_cubic());
  const int zb2b3 = h2::antiholomorphic(2, 3);
  LinearForm six_x(15, FieldTag::Q);
  six_x[zb2b3] = 6;
  LinearForm minus_six_x(15, FieldTag::Q);
  minus_six_x[zb2b3] = -6;
  CHECK(ha(h2::holomorphic(1, 2), h2::mixed(2, 1)).is_zero());
  CHECK(ha(h2::holomorphic(1, 2), h2::mixed(3, 1)) == six_x);
  CHECK(ha(h2::holomorphic(1, 3), h2::mixed(2, 1)) == minus_six_x);
  CHECK(ha(h2::holomorphic(1, 3), h2::mixed(3, 1)).is_zero());
  CHECK(ha(h2::holomorphic(1, 3), h2::mixed(2, 1)).to_string() == "-6*x15");
}

TEST_CASE("hessian_form is symmetric and matches second partials") {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = static_cast<std::size_t>(testing::rand_int(1, 6));
    CubicForm f = testing::rand_cubic(m, FieldTag::QI);
    HessianForm h = hessian_form(f);
    Point p = testing::rand_point(m, FieldTag::QI);
    auto oracle = testing::oracle_hessian(f, p);
    Matrix direct = hessian_at(f, p);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        CHECK(h(j, k) == h(k, j));
        CHECK(h(j, k).evaluate(p) == oracle[j][k]);
        CHECK(direct(j, k) == oracle[j][k]);
      }
  }
}

TEST_CASE("hessian_rank_at") {
  CHECK(hessian_rank_at(cube(), ints({1})) == 1);
  CHECK(hessian_rank_at(cube(), ints({0})) == 0);

  Point zb2b3(15, FieldElem(0));
  zb2b3[h2::antiholomorphic(2, 3)] = 1;
  const std::size_t r = hessian_rank_at(abelian_cubic(), zb2b3);
  CHECK(r == testing::oracle_rank(rows_of(hessian_at(abelian_cubic(), zb2b3))));
  CHECK(r == 6);

  // 6 det at the identity: hand-built Hessian is 6 times a diagonal-class
  // block [[0,1,1],[1,0,1],[1,1,0]] plus three [[0,-1],[-1,0]] blocks.
  CubicForm d = six_det();
  Point id = ints({1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(d.evaluate(id) == FieldElem(6));
  Matrix expected(9, 9);
  const int diag[3] = {0, 4, 8};
  for (int a : diag)
    for (int b : diag)
      if (a != b) expected(a, b) = 6;
  for (auto [a, b] : {std::pair{1, 3}, std::pair{2, 6}, std::pair{5, 7}}) {
    expected(a, b) = -6;
    expected(b, a) = -6;
  }
  CHECK(hessian_at(d, id) == expected);
  CHECK(oracle_rank(rows_of(expected)) == 9);
  CHECK(hessian_rank_at(d, id) == 9);
}

TEST_CASE("rank agrees with an independent elimination") {
  for (FieldTag tag : {FieldTag::Q, FieldTag::QI, FieldTag::QOmega}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t m = static_cast<std::size_t>(testing::rand_int(0, 7));
      CubicForm f = testing::rand_cubic(m, tag, 0.3);
      Point p = testing::rand_point(m, tag, -2, 2);
      Matrix h = hessian_at(f, p);
      CHECK(hessian_rank_at(f, p) == oracle_rank(rows_of(h)));
    }
  }
}

TEST_CASE("determinant via Bareiss") {
  CHECK(determinant(Matrix::identity(4)) == FieldElem(1));
  CHECK(determinant(Matrix()) == FieldElem(1));
  for (int trial = 0; trial < 100; ++trial) {
    FieldElem m[3][3];
    Matrix mm(3, 3, FieldTag::QI);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) mm(r, c) = m[r][c] = testing::rand_int_elem(FieldTag::QI, -3, 3);
    CHECK(determinant(mm) == testing::leibniz3(m));
  }
}

TEST_CASE("base_change") {
  CubicForm f = testing::rand_cubic(4);
  CHECK(base_change(f, Matrix::identity(4)) == f);
  Matrix two(1, 1);
  two(0, 0) = 2;
  CHECK(base_change(cube(), two) == cube(8));
  CHECK_THROWS_AS(base_change(f, Matrix(4, 4)), Error);
  CHECK_THROWS_AS(base_change(f, Matrix::identity(3)), DimensionError);

  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = static_cast<std::size_t>(testing::rand_int(1, 5));
    CubicForm g = testing::rand_cubic(m);
    Matrix l = testing::rand_invertible(m);
    Point p = testing::rand_point(m, FieldTag::Q);
    CubicForm gl = base_change(g, l);
    Point lp = l.apply(p);
    // (F o L)(p) = F(Lp), and H_{F o L}(p) = L^T H_F(Lp) L
    CHECK(gl.evaluate(p) == g.evaluate(lp));
    CHECK(hessian_at(gl, p) == l.transpose() * hessian_at(g, lp) * l);
    CHECK(hessian_rank_at(gl, p) == hessian_rank_at(g, lp));
  }
}

TEST_CASE("Euler identities") {
  for (FieldTag tag : {FieldTag::Q, FieldTag::QI}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t m = static_cast<std::size_t>(testing::rand_int(0, 6));
      CubicForm f = testing::rand_cubic(m, tag);
      Point p = testing::rand_point(m, tag);
      auto grad = f.gradient(p);
      auto oracle = testing::oracle_gradient(f, p);
      CHECK(grad == oracle);
      auto hp = hessian_at(f, p).apply(p);
      FieldElem dot = FieldElem::zero(tag);
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(hp[j] == oracle[j].scaled(2));
        dot += oracle[j] * p[j];
      }
      CHECK(dot == f.evaluate(p).scaled(3));
    }
  }
}

TEST_CASE("blowup_point") {
  CubicForm y3 = cube();
  CubicForm expected(2);
  expected.set(0, 0, 0, 1);
  expected.set(1, 1, 1, 1);
  CHECK(blowup_point(y3, 1) == expected);
  CHECK_THROWS_AS(blowup_point(y3, 0), DomainError);

  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = static_cast<std::size_t>(testing::rand_int(0, 6));
    CubicForm f = testing::rand_cubic(m);
    long a = 0;
    while (a == 0) a = testing::rand_int(-5, 5);
    CubicForm g = blowup_point(f, a);
    Point e(m + 1, FieldElem(0));
    e[0] = 1;
    CHECK(hessian_rank_at(g, e) == 1);
    // pullback points see only the F block
    Point p = testing::rand_point(m, FieldTag::Q);
    Point q = p;
    q.insert(q.begin(), FieldElem(0));
    CHECK(hessian_rank_at(g, q) == hessian_rank_at(f, p));
  }
}

TEST_CASE("blowup_curve") {
  CubicForm f = testing::rand_cubic(3);
  CHECK(blowup_curve(f, 2, Point(3, FieldElem(0))) == blowup_point(f, 2));
  CHECK_THROWS_AS(blowup_curve(f, 2, Point(2, FieldElem(0))), DimensionError);

  CubicForm g = blowup_curve(f, 2, ints({1, 0, -1}));
  CHECK(g.coefficient(0, 0, 0) == FieldElem(2));
  CHECK(g.coefficient(0, 1, 0) == FieldElem(1));
  CHECK(g.coefficient(3, 0, 0) == FieldElem(-1));
  // a x0^3 + 3 sum b_i x0^2 x_i + F at (1, 1, 0, 0): 2 + 3*1 + F(1,0,0)
  CHECK(g.evaluate(ints({1, 1, 0, 0})) == FieldElem(5) + f.evaluate(ints({1, 0, 0})));

  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = static_cast<std::size_t>(testing::rand_int(1, 6));
    CubicForm h = testing::rand_cubic(m);
    Point b = testing::rand_point(m, FieldTag::Q, -2, 2);
    long a = testing::rand_int(-3, 3);
    CubicForm c = blowup_curve(h, a, b);
    Point e(m + 1, FieldElem(0));
    e[0] = 1;
    Matrix he = hessian_at(c, e);
    CHECK(he(0, 0) == FieldElem(6 * a));
    for (std::size_t i = 0; i < m; ++i) CHECK(he(0, i + 1) == b[i].scaled(6));
    bool b_nonzero = std::any_of(b.begin(), b.end(), [](const FieldElem& x) { return !x.is_zero(); });
    std::size_t r = hessian_rank_at(c, e);
    CHECK(r <= 2);
    CHECK((r == 2) == b_nonzero);
  }
}

TEST_CASE("direct_sum_with_cubes") {
  CubicForm f = testing::rand_cubic(3);
  CHECK(direct_sum_with_cubes(f, std::vector<long>{}) == f);
  std::vector<long> bad{1, 0};
  CHECK_THROWS_AS(direct_sum_with_cubes(f, bad), DomainError);

  std::vector<long> a{2, -1, 3};
  CubicForm g = direct_sum_with_cubes(f, a);
  CHECK(g.size() == 6);
  CHECK(hessian_rank_at(g, ints({0, 0, 0, 1, 0, 0})) == 1);
  for (int trial = 0; trial < 100; ++trial) {
    Point p0 = testing::rand_point(3, FieldTag::Q, -2, 2);
    Point p1 = testing::rand_point(3, FieldTag::Q, -1, 1);
    Point p = p0;
    p.insert(p.end(), p1.begin(), p1.end());
    std::size_t nonzero = std::count_if(p1.begin(), p1.end(), [](const FieldElem& x) { return !x.is_zero(); });
    CHECK(hessian_rank_at(g, p) == hessian_rank_at(f, p0) + nonzero);
  }
}

TEST_CASE("zero-variable form") {
  CubicForm z(0);
  Point empty;
  CHECK(z.evaluate(empty).is_zero());
  CHECK(hessian_rank_at(z, empty) == 0);
  CHECK(hessian_form(z).size() == 0);
  CHECK(base_change(z, Matrix()) == z);
  CHECK(blowup_point(z, 3).size() == 1);
}

TEST_CASE("linear form printing") {
  LinearForm l(std::vector<FieldElem>{FieldElem(0), FieldElem(6), FieldElem(-1), FieldElem(Rational(1, 2))});
  CHECK(l.to_string() == "6*x2 - x3 + 1/2*x4");
  CHECK(LinearForm(3, FieldTag::Q).to_string() == "0");
  LinearForm li(std::vector<FieldElem>{FieldElem(FieldTag::QI, 1, 2)});
  CHECK(li.to_string() == "(1 + 2*i)*x1");
}
