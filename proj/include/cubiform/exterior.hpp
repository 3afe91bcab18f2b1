#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubiform {

class CubicForm;

/// dz_index or d(bar z)_index on a complex torus of dimension `dim`.
struct Generator {
  int index = 1;  // 1-based
  bool barred = false;

  /// Position in the reference order dz_1 < ... < dz_dim < dzb_1 < ... < dzb_dim.
  int ordinal(int dim = 3) const { return (barred ? dim : 0) + index - 1; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Signed wedge product of distinct generators, stored by ordinal in strictly
/// increasing order. The engine works for any number of generators; the
/// ordinals only need to be totally ordered.
class WedgeMonomial {
 public:
  /// The empty product (scalar 1).
  WedgeMonomial() = default;

  /// Sorts `ordinals` into canonical order and records the sign of the sorting
  /// permutation. A repeated ordinal yields the zero monomial.
  static WedgeMonomial from_factors(std::vector<int> ordinals);
  static WedgeMonomial of(std::initializer_list<Generator> gens, int dim = 3);
  static WedgeMonomial zero();

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  int degree() const { return static_cast<int>(factors_.size()); }
  const std::vector<int>& factors() const { return factors_; }

  WedgeMonomial negated() const;

  friend bool operator==(const WedgeMonomial&, const WedgeMonomial&) = default;

 private:
  std::vector<int> factors_;
  int sign_ = 1;
};

WedgeMonomial wedge(const WedgeMonomial& lhs, const WedgeMonomial& rhs);

/// Distinguished basis of H^2 of a complex 3-torus. The index order is a public
/// coordinate convention:
///
///   0..2   z12, z13, z23
///   3..11  z1b1, z1b2, z1b3, z2b1, ..., z3b3   (z_{i jbar}, row-major)
///   12..14 zb1b2, zb1b3, zb2b3
namespace h2 {

inline constexpr int kDim = 3;
inline constexpr int kSize = 15;

/// The degree-2 monomial of basis element `index`, with sign +1.
const WedgeMonomial& basis(int index);

/// Names as used on the command line, e.g. "z12", "z3b1", "zb2b3".
std::string_view name(int index);
std::optional<int> index_of(std::string_view name);

inline constexpr int holomorphic(int i, int j) { return i == 1 ? j - 2 : 2; }  // i < j
inline constexpr int mixed(int i, int j) { return 3 + 3 * (i - 1) + (j - 1); }
inline constexpr int antiholomorphic(int i, int j) { return i == 1 ? 10 + j : 14; }  // i < j

/// s with basis(a) ^ basis(b) ^ basis(c) = s * dz1^dz2^dz3^dzb1^dzb2^dzb3,
/// the top form being normalised to integrate to 1.
int triple_product(int a, int b, int c);

}  // namespace h2

/// Cubic form F_A(x) = (sum_a x_a z_a)^3 in the 15 coordinates of the
/// distinguished H^2 basis, over Q.
CubicForm abelian_cubic();

}  // namespace cubiform
