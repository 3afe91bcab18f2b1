#pragma once

#include <vector>

#include "cubiform/cubic.hpp"
#include "cubiform/field.hpp"
#include "cubiform/matrix.hpp"

namespace cubiform {

/// Cyclic group acting on a complex 3-torus by z -> zeta * z on every
/// coordinate.
class DiagonalAction {
 public:
  /// Derives the order of `zeta`. Throws DomainError when zeta is not a root
  /// of unity (the only ones in Q(i) and Q(w) have order 1, 2, 3, 4 or 6).
  explicit DiagonalAction(FieldElem zeta);
  /// Checks that `order` is exactly the multiplicative order of `zeta`.
  DiagonalAction(FieldElem zeta, int order);

  const FieldElem& zeta() const { return zeta_; }
  int order() const { return order_; }

 private:
  FieldElem zeta_;
  int order_ = 1;
};

/// Multiplicative order of `x`, or 0 when x is not a root of unity.
int root_of_unity_order(const FieldElem& x);

/// 15 x 15 diagonal matrix of the pullback action on H^2: zeta^2 on z_ij,
/// zeta * conj(zeta) on z_{i jbar}, conj(zeta)^2 on z_{ibar jbar}.
Matrix induced_action_on_h2(const DiagonalAction& act);

struct InvariantInclusion {
  std::size_t sub_dim = 0;
  std::vector<int> basis_indices;  // h2 indices spanning the invariant subspace
  Matrix matrix;                   // 15 x sub_dim, over Q
};

/// Eigenvalue-1 subspace of the induced action, spanned by distinguished basis
/// vectors.
InvariantInclusion invariant_subspace(const DiagonalAction& act);

/// F_Z(x) = d * F_A(inclusion(x)) with d the group order.
CubicForm quotient_cubic(const DiagonalAction& act);

}  // namespace cubiform
