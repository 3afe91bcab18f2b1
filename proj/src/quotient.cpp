#include "cubiform/quotient.hpp"

#include "cubiform/exterior.hpp"

namespace cubiform {

namespace {

constexpr int kMaxOrder = 12;

enum class H2Type { Holomorphic, Mixed, Antiholomorphic };

H2Type type_of(int index) {
  if (index < 3) return H2Type::Holomorphic;
  if (index < 12) return H2Type::Mixed;
  return H2Type::Antiholomorphic;
}

}  // namespace

int root_of_unity_order(const FieldElem& x) {
  const FieldElem one = FieldElem::one(x.tag());
  FieldElem power = x;
  for (int k = 1; k <= kMaxOrder; ++k) {
    if (power == one) return k;
    power *= x;
  }
  return 0;
}

DiagonalAction::DiagonalAction(FieldElem zeta) : zeta_(std::move(zeta)), order_(root_of_unity_order(zeta_)) {
  if (order_ == 0) throw DomainError("zeta = " + zeta_.to_string() + " is not a root of unity");
}

DiagonalAction::DiagonalAction(FieldElem zeta, int order) : DiagonalAction(std::move(zeta)) {
  if (order != order_) {
    throw DomainError("zeta = " + zeta_.to_string() + " has order " + std::to_string(order_) + ", not " +
                      std::to_string(order));
  }
}

Matrix induced_action_on_h2(const DiagonalAction& act) {
  const FieldElem& z = act.zeta();
  const FieldElem zb = z.conjugate();
  Matrix m(h2::kSize, h2::kSize, z.tag());
  for (int a = 0; a < h2::kSize; ++a) {
    switch (type_of(a)) {
      case H2Type::Holomorphic: m(a, a) = z * z; break;
      case H2Type::Mixed: m(a, a) = z * zb; break;
      case H2Type::Antiholomorphic: m(a, a) = zb * zb; break;
    }
  }
  return m;
}

InvariantInclusion invariant_subspace(const DiagonalAction& act) {
  const Matrix action = induced_action_on_h2(act);
  const FieldElem one = FieldElem::one(action.tag());
  InvariantInclusion inc;
  for (int a = 0; a < h2::kSize; ++a) {
    if (action(a, a) == one) inc.basis_indices.push_back(a);
  }
  inc.sub_dim = inc.basis_indices.size();
  inc.matrix = Matrix(h2::kSize, inc.sub_dim);
  for (std::size_t col = 0; col < inc.sub_dim; ++col) inc.matrix(inc.basis_indices[col], col) = 1;
  return inc;
}

CubicForm quotient_cubic(const DiagonalAction& act) {
  const InvariantInclusion inc = invariant_subspace(act);
  const CubicForm fa = abelian_cubic();
  const int n = static_cast<int>(inc.sub_dim);
  const FieldElem d(act.order());
  CubicForm fz(inc.sub_dim, FieldTag::Q);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) {
        FieldElem t = fa.coefficient(inc.basis_indices[a], inc.basis_indices[b], inc.basis_indices[c]);
        if (!t.is_zero()) fz.set(a, b, c, d * t);
      }
  return fz;
}

}  // namespace cubiform
