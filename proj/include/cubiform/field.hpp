#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubiform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws FieldError on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Q, Q(i) with i^2 = -1, or Q(w) with w^2 = -1 - w.
enum class FieldTag { Q, QI, QOmega };

std::string_view field_name(FieldTag tag);  // "Q", "Q_I", "Q_OMEGA"
FieldTag parse_field_name(std::string_view name);

/// Name of the adjoined generator as used in the textual form: "one", "i",
/// "omega".
std::string_view zeta_name(FieldTag tag);
FieldTag parse_zeta_name(std::string_view name);

/// Exact element a + b*zeta of one of the three supported fields.
///
/// Values are immutable. Binary operations require both operands to carry the
/// same tag; Q elements are moved into an extension only through widen().
class FieldElem {
 public:
  FieldElem() = default;  // rational zero
  FieldElem(Rational a);   // NOLINT(google-explicit-constructor)
  FieldElem(long a) : FieldElem(Rational(a)) {}  // NOLINT
  FieldElem(int a) : FieldElem(Rational(a)) {}   // NOLINT
  FieldElem(FieldTag tag, Rational a, Rational b = 0);

  static FieldElem zero(FieldTag tag) { return FieldElem(tag, 0, 0); }
  static FieldElem one(FieldTag tag) { return FieldElem(tag, 1, 0); }
  static FieldElem i() { return FieldElem(FieldTag::QI, 0, 1); }
  static FieldElem omega() { return FieldElem(FieldTag::QOmega, 0, 1); }

  FieldTag tag() const { return tag_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Embeds a Q element into `target`. Identity when the tags already agree;
  /// widening between the two extensions is an error.
  FieldElem widen(FieldTag target) const;

  /// Complex conjugation: i -> -i, w -> w^2 = -1 - w, rationals fixed.
  FieldElem conjugate() const;

  /// Field norm x * conjugate(x), as a non-negative rational.
  Rational norm() const;

  FieldElem inverse() const;

  FieldElem operator-() const { return FieldElem(tag_, -a_, -b_); }
  friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y);

  FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
  FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
  FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }

  /// Scaling by a rational never changes the tag.
  FieldElem scaled(const Rational& r) const { return FieldElem(tag_, a_ * r, b_ * r); }

  /// Same tag and same components.
  friend bool operator==(const FieldElem& x, const FieldElem& y);

  /// Human-readable form such as "3/2", "-1 - w", "2*i".
  std::string to_string() const;

 private:
  FieldTag tag_ = FieldTag::Q;
  Rational a_ = 0;
  Rational b_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations.
FieldElem arith(const FieldElem& x, const FieldElem& y, ArithOp op);

}  // namespace cubiform
