#include "cubiform/cubic.hpp"

#include <algorithm>

namespace cubiform {

namespace {

// Distinct orderings of a sorted key.
std::vector<TripleKey> orderings(const TripleKey& key) {
  std::vector<TripleKey> out;
  TripleKey k = key;
  do {
    out.push_back(k);
  } while (std::next_permutation(k.begin(), k.end()));
  return out;
}

void check_point(const CubicForm& f, std::span<const FieldElem> p) {
  if (p.size() != f.size()) {
    throw DimensionError("point has " + std::to_string(p.size()) + " coordinates, form has " +
                         std::to_string(f.size()) + " variables");
  }
  for (const FieldElem& x : p) {
    if (x.tag() != f.tag()) {
      throw FieldError("point over " + std::string(field_name(x.tag())) + " for a form over " +
                       std::string(field_name(f.tag())));
    }
  }
}

}  // namespace

TripleKey sorted_key(int a, int b, int c) {
  TripleKey k{a, b, c};
  std::sort(k.begin(), k.end());
  return k;
}

int multiplicity(const TripleKey& key) {
  if (key[0] == key[2]) return 1;
  if (key[0] == key[1] || key[1] == key[2]) return 3;
  return 6;
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElem& c) { return c.is_zero(); });
}

FieldElem LinearForm::evaluate(std::span<const FieldElem> p) const {
  if (p.size() != coeffs_.size()) throw DimensionError("linear form size mismatch");
  if (coeffs_.empty()) return {};
  FieldElem sum = FieldElem::zero(coeffs_.front().tag());
  for (std::size_t c = 0; c < coeffs_.size(); ++c) {
    if (!coeffs_[c].is_zero()) sum += coeffs_[c] * p[c];
  }
  return sum;
}

std::string LinearForm::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < coeffs_.size(); ++c) {
    const FieldElem& k = coeffs_[c];
    if (k.is_zero()) continue;
    std::string var = "x" + std::to_string(c + 1);
    std::string coeff;
    bool negative = k.is_rational() && sgn(k.a()) < 0;
    FieldElem mag = negative ? -k : k;
    if (mag == FieldElem::one(mag.tag())) coeff = var;
    else if (mag.is_rational()) coeff = mag.to_string() + "*" + var;
    else coeff = "(" + mag.to_string() + ")*" + var;
    if (out.empty()) out = negative ? "-" + coeff : coeff;
    else out += (negative ? " - " : " + ") + coeff;
  }
  return out.empty() ? "0" : out;
}

HessianForm::HessianForm(std::size_t m, FieldTag tag) : m_(m), tag_(tag), entries_(m * m, LinearForm(m, tag)) {}

Matrix HessianForm::evaluate(std::span<const FieldElem> p) const {
  Matrix h(m_, m_, tag_);
  for (std::size_t j = 0; j < m_; ++j)
    for (std::size_t k = 0; k < m_; ++k) h(j, k) = (*this)(j, k).evaluate(p);
  return h;
}

FieldElem CubicForm::coefficient(int a, int b, int c) const {
  auto it = entries_.find(sorted_key(a, b, c));
  return it == entries_.end() ? FieldElem::zero(tag_) : it->second;
}

void CubicForm::set(int a, int b, int c, const FieldElem& value) {
  const int m = static_cast<int>(m_);
  if (a < 0 || b < 0 || c < 0 || a >= m || b >= m || c >= m) {
    throw DimensionError("tensor index out of range");
  }
  if (value.tag() != tag_) throw FieldError("coefficient field does not match form field");
  TripleKey key = sorted_key(a, b, c);
  if (value.is_zero()) entries_.erase(key);
  else entries_[key] = value;
}

FieldElem CubicForm::evaluate(std::span<const FieldElem> p) const {
  check_point(*this, p);
  FieldElem sum = FieldElem::zero(tag_);
  for (const auto& [key, t] : entries_) {
    FieldElem term = p[key[0]] * p[key[1]] * p[key[2]];
    if (!term.is_zero()) sum += (t * term).scaled(multiplicity(key));
  }
  return sum;
}

std::vector<FieldElem> CubicForm::gradient(std::span<const FieldElem> p) const {
  check_point(*this, p);
  std::vector<FieldElem> g(m_, FieldElem::zero(tag_));
  for (const auto& [key, t] : entries_) {
    for (const TripleKey& o : orderings(key)) g[o[0]] += (t * p[o[1]] * p[o[2]]).scaled(3);
  }
  return g;
}

CubicForm CubicForm::widen(FieldTag target) const {
  CubicForm out(m_, target);
  for (const auto& [key, t] : entries_) out.entries_[key] = t.widen(target);
  return out;
}

CubicForm CubicForm::scaled(const FieldElem& s) const {
  CubicForm out(m_, tag_);
  for (const auto& [key, t] : entries_) out.set(key[0], key[1], key[2], t * s);
  return out;
}

HessianForm hessian_form(const CubicForm& f) {
  HessianForm h(f.size(), f.tag());
  for (const auto& [key, t] : f.entries()) {
    FieldElem six = t.scaled(6);
    for (const TripleKey& o : orderings(key)) h(o[0], o[1])[o[2]] += six;
  }
  return h;
}

Matrix hessian_at(const CubicForm& f, std::span<const FieldElem> p) {
  check_point(f, p);
  Matrix h(f.size(), f.size(), f.tag());
  for (const auto& [key, t] : f.entries()) {
    for (const TripleKey& o : orderings(key)) {
      if (!p[o[2]].is_zero()) h(o[0], o[1]) += (t * p[o[2]]).scaled(6);
    }
  }
  return h;
}

std::size_t hessian_rank_at(const CubicForm& f, std::span<const FieldElem> p) { return rank(hessian_at(f, p)); }

CubicForm base_change(const CubicForm& f, const Matrix& l) {
  const std::size_t m = f.size();
  if (l.rows() != m || l.cols() != m) throw DimensionError("base change matrix must be m x m");
  if (m > 0 && l.tag() != f.tag()) throw FieldError("base change matrix field does not match form field");
  if (rank(l) != m) throw Error("base change matrix is singular");

  std::map<TripleKey, FieldElem> acc;
  for (const auto& [key, t] : f.entries()) {
    for (const TripleKey& o : orderings(key)) {
      for (std::size_t a = 0; a < m; ++a) {
        const FieldElem& la = l(o[0], a);
        if (la.is_zero()) continue;
        for (std::size_t b = a; b < m; ++b) {
          const FieldElem& lb = l(o[1], b);
          if (lb.is_zero()) continue;
          FieldElem tab = t * la * lb;
          for (std::size_t c = b; c < m; ++c) {
            const FieldElem& lc = l(o[2], c);
            if (lc.is_zero()) continue;
            TripleKey k{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
            auto [it, fresh] = acc.try_emplace(k, FieldElem::zero(f.tag()));
            it->second += tab * lc;
          }
        }
      }
    }
  }
  CubicForm out(m, f.tag());
  for (const auto& [k, v] : acc) out.set(k[0], k[1], k[2], v);
  return out;
}

namespace {

CubicForm shifted(const CubicForm& f, std::size_t new_size, int offset) {
  CubicForm out(new_size, f.tag());
  for (const auto& [k, t] : f.entries()) out.set(k[0] + offset, k[1] + offset, k[2] + offset, t);
  return out;
}

}  // namespace

CubicForm blowup_point(const CubicForm& f, const FieldElem& a) {
  if (a.is_zero()) throw DomainError("exceptional self-intersection E^3 must be nonzero");
  return blowup_curve(f, a, std::vector<FieldElem>(f.size(), FieldElem::zero(f.tag())));
}

CubicForm blowup_curve(const CubicForm& f, const FieldElem& a, std::span<const FieldElem> b) {
  if (b.size() != f.size()) throw DimensionError("curve blow-up needs one b_i per variable");
  CubicForm out = shifted(f, f.size() + 1, 1);
  out.set(0, 0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) out.set(0, 0, static_cast<int>(i) + 1, b[i]);
  return out;
}

CubicForm direct_sum_with_cubes(const CubicForm& fz, std::span<const long> a) {
  const std::size_t m = fz.size();
  CubicForm out = shifted(fz, m + a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) throw DomainError("exceptional self-intersection a_i = E_i^3 must be a nonzero integer");
    int v = static_cast<int>(m + i);
    out.set(v, v, v, FieldElem(a[i]).widen(fz.tag()));
  }
  return out;
}

Point widen(std::span<const FieldElem> p, FieldTag tag) {
  Point out;
  out.reserve(p.size());
  for (const FieldElem& x : p) out.push_back(x.widen(tag));
  return out;
}

}  // namespace cubiform
