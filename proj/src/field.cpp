#include "cubiform/field.hpp"

#include <cctype>

namespace cubiform {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void require_same(const FieldElem& x, const FieldElem& y) {
  if (x.tag() != y.tag()) {
    throw FieldError("field tag mismatch: " + std::string(field_name(x.tag())) + " vs " +
                     std::string(field_name(y.tag())));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw FieldError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string_view field_name(FieldTag tag) {
  switch (tag) {
    case FieldTag::Q: return "Q";
    case FieldTag::QI: return "Q_I";
    case FieldTag::QOmega: return "Q_OMEGA";
  }
  return "?";
}

FieldTag parse_field_name(std::string_view name) {
  if (name == "Q") return FieldTag::Q;
  if (name == "Q_I") return FieldTag::QI;
  if (name == "Q_OMEGA") return FieldTag::QOmega;
  throw FieldError("unknown field '" + std::string(name) + "'");
}

std::string_view zeta_name(FieldTag tag) {
  switch (tag) {
    case FieldTag::Q: return "one";
    case FieldTag::QI: return "i";
    case FieldTag::QOmega: return "omega";
  }
  return "?";
}

FieldTag parse_zeta_name(std::string_view name) {
  if (name == "one") return FieldTag::Q;
  if (name == "i") return FieldTag::QI;
  if (name == "omega") return FieldTag::QOmega;
  throw FieldError("unknown zeta '" + std::string(name) + "'");
}

FieldElem::FieldElem(Rational a) : a_(std::move(a)) { a_.canonicalize(); }

FieldElem::FieldElem(FieldTag tag, Rational a, Rational b) : tag_(tag), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (tag_ == FieldTag::Q && sgn(b_) != 0) {
    throw FieldError("rational element with nonzero zeta component");
  }
}

FieldElem FieldElem::widen(FieldTag target) const {
  if (tag_ == target) return *this;
  if (tag_ != FieldTag::Q) {
    throw FieldError("cannot widen " + std::string(field_name(tag_)) + " to " + std::string(field_name(target)));
  }
  return FieldElem(target, a_, 0);
}

FieldElem FieldElem::conjugate() const {
  switch (tag_) {
    case FieldTag::Q: return *this;
    case FieldTag::QI: return FieldElem(tag_, a_, -b_);
    // a + b*w^2 = a + b(-1 - w)
    case FieldTag::QOmega: return FieldElem(tag_, a_ - b_, -b_);
  }
  return *this;
}

Rational FieldElem::norm() const {
  switch (tag_) {
    case FieldTag::Q: return a_ * a_;
    case FieldTag::QI: return a_ * a_ + b_ * b_;
    case FieldTag::QOmega: return a_ * a_ - a_ * b_ + b_ * b_;
  }
  return 0;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Rational n = norm();
  return conjugate().scaled(1 / n);
}

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
  require_same(x, y);
  return FieldElem(x.tag_, x.a_ + y.a_, x.b_ + y.b_);
}

FieldElem operator-(const FieldElem& x, const FieldElem& y) {
  require_same(x, y);
  return FieldElem(x.tag_, x.a_ - y.a_, x.b_ - y.b_);
}

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  require_same(x, y);
  Rational ac = x.a_ * y.a_;
  Rational bd = x.b_ * y.b_;
  Rational cross = x.a_ * y.b_ + x.b_ * y.a_;
  switch (x.tag_) {
    case FieldTag::Q: return FieldElem(ac);
    case FieldTag::QI: return FieldElem(x.tag_, ac - bd, cross);
    case FieldTag::QOmega: return FieldElem(x.tag_, ac - bd, cross - bd);
  }
  return {};
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) {
  require_same(x, y);
  return x * y.inverse();
}

bool operator==(const FieldElem& x, const FieldElem& y) {
  return x.tag_ == y.tag_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string FieldElem::to_string() const {
  if (sgn(b_) == 0) return cubiform::to_string(a_);
  std::string z = tag_ == FieldTag::QI ? "i" : "w";
  std::string out;
  if (sgn(a_) != 0) out = cubiform::to_string(a_) + (sgn(b_) < 0 ? " - " : " + ");
  else if (sgn(b_) < 0) out = "-";
  Rational mag = abs(b_);
  if (mag != 1) out += cubiform::to_string(mag) + "*";
  return out + z;
}

FieldElem arith(const FieldElem& x, const FieldElem& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  return {};
}

}  // namespace cubiform
