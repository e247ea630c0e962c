#include "srcalg/coeff.hpp"

#include <sstream>

#include "srcalg/error.hpp"

namespace srcalg::coeff {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::Parse, "not a rational: '" + text + "'");
  }
}

std::string Quad::to_string() const {
  std::ostringstream os;
  if (b == 0) {
    os << a;
  } else if (a == 0) {
    os << b << "√-5";
  } else {
    os << a << (b < 0 ? " - " : " + ") << abs(b) << "√-5";
  }
  return os.str();
}

Quad quad_mul(const Quad& x, const Quad& y) { return {x.a * y.a - 5 * x.b * y.b, x.a * y.b + x.b * y.a}; }

Quad quad_div_exact(const Quad& x, const Quad& y) {
  if (y.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in Z[√-5]");
  const BigInt n = y.norm();
  const Quad t = quad_mul(x, y.conj());
  if (t.a % n != 0 || t.b % n != 0) {
    fail(ErrorCode::InexactDivision, x.to_string() + " is not divisible by " + y.to_string());
  }
  return {t.a / n, t.b / n};
}

bool ideal_membership_I(const Quad& x) {
  // Write x = u*(1 + √−5) + v*3 over Z: the √−5 part forces u = b, and the
  // remaining a − b must be a multiple of 3.
  const BigInt u = x.b;
  const BigInt rest = x.a - u;
  return rest % 3 == 0;
}

CoeffRing CoeffRing::finite(FieldPtr field) {
  if (!field) fail(ErrorCode::InvalidArgument, "finite coefficient ring without a field");
  return CoeffRing(RingKind::Finite, std::move(field));
}

std::string CoeffRing::describe() const {
  switch (kind_) {
    case RingKind::Rational: return "Q";
    case RingKind::Integer: return "Z";
    case RingKind::Quad: return "Z[√-5]";
    case RingKind::Finite: return field_->describe();
  }
  return "?";
}

Coefficient Coefficient::zero(const CoeffRing& ring) { return from_int(ring, 0); }
Coefficient Coefficient::one(const CoeffRing& ring) { return from_int(ring, 1); }

Coefficient Coefficient::from_int(const CoeffRing& ring, long v) {
  switch (ring.kind()) {
    case RingKind::Rational: return Coefficient(ring, Rational(v));
    case RingKind::Integer: return Coefficient(ring, BigInt(v));
    case RingKind::Finite: return Coefficient(ring, ring.field()->from_int(v));
    case RingKind::Quad: return Coefficient(ring, Quad(v, 0));
  }
  fail(ErrorCode::LogicFault, "unknown ring kind");
}

Coefficient Coefficient::rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return Coefficient(CoeffRing::rationals(), c);
}

Coefficient Coefficient::integer(const BigInt& v) { return Coefficient(CoeffRing::integers(), v); }

Coefficient Coefficient::finite(const FieldPtr& field, FiniteField::Elem e) {
  if (!field->contains(e)) fail(ErrorCode::InvalidArgument, "element out of range for " + field->describe());
  return Coefficient(CoeffRing::finite(field), e);
}

Coefficient Coefficient::quad(const Quad& q) { return Coefficient(CoeffRing::quadratic(), q); }

bool Coefficient::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Quad>) return v.is_zero();
        else return v == 0;
      },
      value_);
}

bool Coefficient::is_one() const { return *this == one(ring_); }

Rational Coefficient::to_rational() const {
  switch (ring_.kind()) {
    case RingKind::Rational: return as_rational();
    case RingKind::Integer: return Rational(as_integer());
    default: fail(ErrorCode::MixedRings, "no rational image for " + ring_.describe());
  }
}

void Coefficient::require_same(const Coefficient& o) const {
  if (!(ring_ == o.ring_)) fail(ErrorCode::MixedRings, ring_.describe() + " vs " + o.ring_.describe());
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  require_same(o);
  switch (ring_.kind()) {
    case RingKind::Rational: return Coefficient(ring_, Rational(as_rational() + o.as_rational()));
    case RingKind::Integer: return Coefficient(ring_, BigInt(as_integer() + o.as_integer()));
    case RingKind::Finite: return Coefficient(ring_, ring_.field()->add(as_finite(), o.as_finite()));
    case RingKind::Quad: return Coefficient(ring_, as_quad() + o.as_quad());
  }
  fail(ErrorCode::LogicFault, "unknown ring kind");
}

Coefficient Coefficient::operator-() const {
  switch (ring_.kind()) {
    case RingKind::Rational: return Coefficient(ring_, Rational(-as_rational()));
    case RingKind::Integer: return Coefficient(ring_, BigInt(-as_integer()));
    case RingKind::Finite: return Coefficient(ring_, ring_.field()->neg(as_finite()));
    case RingKind::Quad: return Coefficient(ring_, -as_quad());
  }
  fail(ErrorCode::LogicFault, "unknown ring kind");
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
  require_same(o);
  switch (ring_.kind()) {
    case RingKind::Rational: return Coefficient(ring_, Rational(as_rational() * o.as_rational()));
    case RingKind::Integer: return Coefficient(ring_, BigInt(as_integer() * o.as_integer()));
    case RingKind::Finite: return Coefficient(ring_, ring_.field()->mul(as_finite(), o.as_finite()));
    case RingKind::Quad: return Coefficient(ring_, quad_mul(as_quad(), o.as_quad()));
  }
  fail(ErrorCode::LogicFault, "unknown ring kind");
}

Coefficient Coefficient::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in " + ring_.describe());
  switch (ring_.kind()) {
    case RingKind::Rational: return Coefficient(ring_, Rational(1 / as_rational()));
    case RingKind::Integer:
      if (abs(as_integer()) != 1) fail(ErrorCode::DivisionByZero, as_integer().get_str() + " is not a unit in Z");
      return *this;
    case RingKind::Finite: return Coefficient(ring_, ring_.field()->inv(as_finite()));
    case RingKind::Quad: return Coefficient(ring_, quad_div_exact(Quad(1, 0), as_quad()));
  }
  fail(ErrorCode::LogicFault, "unknown ring kind");
}

bool operator==(const Coefficient& x, const Coefficient& y) { return x.ring_ == y.ring_ && x.value_ == y.value_; }

std::string Coefficient::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Rational: return rational_to_string(as_rational());
    case RingKind::Integer: return as_integer().get_str();
    case RingKind::Finite: {
      const auto& F = *ring_.field();
      if (F.degree() == 1) return std::to_string(as_finite());
      return "[" + poly_to_string(F.digits(as_finite())) + "]";
    }
    case RingKind::Quad: return as_quad().to_string();
  }
  return "?";
}

Coefficient field_ops(const Coefficient& x, const Coefficient& y, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return x + y;
    case FieldOp::Mul: return x * y;
    case FieldOp::Inv: return x.inv();
    case FieldOp::Neg: return -x;
  }
  fail(ErrorCode::LogicFault, "unknown field op");
}

}  // namespace srcalg::coeff
