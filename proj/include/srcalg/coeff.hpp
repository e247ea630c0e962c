#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <string>
#include <variant>

#include "srcalg/finite_field.hpp"

namespace srcalg::coeff {

using BigInt = mpz_class;
using Rational = mpq_class;  // every arithmetic result is canonical

/// Canonical rational num/den; throws DivisionByZero for den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// a + b*sqrt(-5) in Z[sqrt(-5)].
struct Quad {
  BigInt a;
  BigInt b;

  Quad() = default;
  Quad(long a_, long b_) : a(a_), b(b_) {}
  Quad(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  Quad conj() const { return {a, -b}; }
  BigInt norm() const { return a * a + 5 * b * b; }
  friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }
  friend Quad operator+(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b}; }
  friend Quad operator-(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b}; }
  friend Quad operator-(const Quad& x) { return {-x.a, -x.b}; }
  std::string to_string() const;
};

/// (a + b√−5)(c + d√−5) = (ac − 5bd) + (ad + bc)√−5.
Quad quad_mul(const Quad& x, const Quad& y);
inline Quad operator*(const Quad& x, const Quad& y) { return quad_mul(x, y); }
/// x / y when the quotient lies in Z[√−5]; throws InexactDivision otherwise.
Quad quad_div_exact(const Quad& x, const Quad& y);

/// Membership in I = (1 + √−5, 3). The ideal's Z-lattice has Hermite basis
/// {1 + √−5, 3}, so a + b√−5 lies in I exactly when a ≡ b (mod 3).
bool ideal_membership_I(const Quad& x);

enum class RingKind { Rational, Integer, Finite, Quad };

/// Descriptor of a coefficient ring. Finite fields carry their FieldPtr;
/// prime fields are the degree-1 case.
class CoeffRing {
 public:
  static CoeffRing rationals() { return CoeffRing(RingKind::Rational, nullptr); }
  static CoeffRing integers() { return CoeffRing(RingKind::Integer, nullptr); }
  static CoeffRing quadratic() { return CoeffRing(RingKind::Quad, nullptr); }
  static CoeffRing finite(FieldPtr field);

  RingKind kind() const { return kind_; }
  const FieldPtr& field() const { return field_; }
  bool is_field() const { return kind_ == RingKind::Rational || kind_ == RingKind::Finite; }
  std::string describe() const;

  friend bool operator==(const CoeffRing& x, const CoeffRing& y) {
    return x.kind_ == y.kind_ && (x.kind_ != RingKind::Finite || same_field(x.field_, y.field_));
  }

 private:
  CoeffRing(RingKind kind, FieldPtr field) : kind_(kind), field_(std::move(field)) {}
  RingKind kind_;
  FieldPtr field_;
};

/// An element of one of the supported coefficient rings. Values are
/// immutable; all operations return new values and check ring agreement.
class Coefficient {
 public:
  using Value = std::variant<Rational, BigInt, FiniteField::Elem, Quad>;

  static Coefficient zero(const CoeffRing& ring);
  static Coefficient one(const CoeffRing& ring);
  static Coefficient from_int(const CoeffRing& ring, long v);
  static Coefficient rational(const Rational& r);
  static Coefficient integer(const BigInt& v);
  static Coefficient finite(const FieldPtr& field, FiniteField::Elem e);
  static Coefficient quad(const Quad& q);

  const CoeffRing& ring() const { return ring_; }
  const Value& value() const { return value_; }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const BigInt& as_integer() const { return std::get<BigInt>(value_); }
  FiniteField::Elem as_finite() const { return std::get<FiniteField::Elem>(value_); }
  const Quad& as_quad() const { return std::get<Quad>(value_); }

  bool is_zero() const;
  bool is_one() const;
  /// Integer coefficients map into Q; every other ring returns itself.
  Rational to_rational() const;

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator-() const;
  /// Multiplicative inverse; DivisionByZero when not invertible.
  Coefficient inv() const;

  friend bool operator==(const Coefficient& x, const Coefficient& y);
  std::string to_string() const;

 private:
  Coefficient(CoeffRing ring, Value v) : ring_(std::move(ring)), value_(std::move(v)) {}
  void require_same(const Coefficient& o) const;
  CoeffRing ring_;
  Value value_;
};

enum class FieldOp { Add, Mul, Inv, Neg };

/// Dispatcher over the four basic operations; `y` is ignored for unary ops.
Coefficient field_ops(const Coefficient& x, const Coefficient& y, FieldOp op);

}  // namespace srcalg::coeff
