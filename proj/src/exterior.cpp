#include "cubiform/exterior.hpp"

#include <algorithm>
#include <utility>

#include "cubiform/cubic.hpp"

namespace cubiform {

WedgeMonomial WedgeMonomial::from_factors(std::vector<int> ordinals) {
  // Insertion sort, counting transpositions.
  int sign = 1;
  for (std::size_t k = 1; k < ordinals.size(); ++k) {
    for (std::size_t j = k; j > 0 && ordinals[j - 1] > ordinals[j]; --j) {
      std::swap(ordinals[j - 1], ordinals[j]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(ordinals.begin(), ordinals.end()) != ordinals.end()) return zero();
  WedgeMonomial m;
  m.factors_ = std::move(ordinals);
  m.sign_ = sign;
  return m;
}

WedgeMonomial WedgeMonomial::of(std::initializer_list<Generator> gens, int dim) {
  std::vector<int> ordinals;
  ordinals.reserve(gens.size());
  for (const Generator& g : gens) ordinals.push_back(g.ordinal(dim));
  return from_factors(std::move(ordinals));
}

WedgeMonomial WedgeMonomial::zero() {
  WedgeMonomial m;
  m.sign_ = 0;
  return m;
}

WedgeMonomial WedgeMonomial::negated() const {
  WedgeMonomial m = *this;
  m.sign_ = -m.sign_;
  return m;
}

WedgeMonomial wedge(const WedgeMonomial& lhs, const WedgeMonomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return WedgeMonomial::zero();
  std::vector<int> all = lhs.factors();
  all.insert(all.end(), rhs.factors().begin(), rhs.factors().end());
  WedgeMonomial m = WedgeMonomial::from_factors(std::move(all));
  return lhs.sign() * rhs.sign() < 0 ? m.negated() : m;
}

namespace h2 {

namespace {

struct Table {
  std::array<WedgeMonomial, kSize> basis;
  std::array<std::string, kSize> names;
};

const Table& table() {
  static const Table t = [] {
    Table t;
    auto dz = [](int i) { return Generator{i, false}; };
    auto dzb = [](int i) { return Generator{i, true}; };
    for (int i = 1; i <= kDim; ++i) {
      for (int j = i + 1; j <= kDim; ++j) {
        t.basis[holomorphic(i, j)] = WedgeMonomial::of({dz(i), dz(j)});
        t.names[holomorphic(i, j)] = "z" + std::to_string(i) + std::to_string(j);
        t.basis[antiholomorphic(i, j)] = WedgeMonomial::of({dzb(i), dzb(j)});
        t.names[antiholomorphic(i, j)] = "zb" + std::to_string(i) + "b" + std::to_string(j);
      }
      for (int j = 1; j <= kDim; ++j) {
        t.basis[mixed(i, j)] = WedgeMonomial::of({dz(i), dzb(j)});
        t.names[mixed(i, j)] = "z" + std::to_string(i) + "b" + std::to_string(j);
      }
    }
    return t;
  }();
  return t;
}

}  // namespace

const WedgeMonomial& basis(int index) { return table().basis.at(index); }

std::string_view name(int index) { return table().names.at(index); }

std::optional<int> index_of(std::string_view n) {
  const auto& names = table().names;
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) return std::nullopt;
  return static_cast<int>(it - names.begin());
}

int triple_product(int a, int b, int c) {
  WedgeMonomial top = wedge(wedge(basis(a), basis(b)), basis(c));
  return top.sign();
}

}  // namespace h2

CubicForm abelian_cubic() {
  CubicForm f(h2::kSize, FieldTag::Q);
  for (int a = 0; a < h2::kSize; ++a) {
    for (int b = a; b < h2::kSize; ++b) {
      for (int c = b; c < h2::kSize; ++c) {
        if (int s = h2::triple_product(a, b, c); s != 0) f.set(a, b, c, FieldElem(s));
      }
    }
  }
  return f;
}

}  // namespace cubiform
