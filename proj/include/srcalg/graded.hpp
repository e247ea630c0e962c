#pragma once

#include <string>
#include <utility>
#include <vector>

#include "srcalg/coeff.hpp"
#include "srcalg/gring.hpp"

namespace srcalg::graded {

using coeff::Quad;
using gring::GRElement;
using gring::RingDescriptor;

/// (s, x) in S + I with S = Z[√-5], I = (1 + √-5, 3), graded by {±1}:
/// s is the degree +1 part and x the degree -1 part.
class SignGradedElement {
 public:
  /// Throws InvalidArgument unless x lies in I.
  SignGradedElement(Quad s, Quad x);
  static SignGradedElement one() { return {Quad(1, 0), Quad(0, 0)}; }

  const Quad& even() const { return s_; }
  const Quad& odd() const { return x_; }

  friend bool operator==(const SignGradedElement& u, const SignGradedElement& v) {
    return u.s_ == v.s_ && u.x_ == v.x_;
  }
  friend SignGradedElement operator+(const SignGradedElement& u, const SignGradedElement& v) {
    return {u.s_ + v.s_, u.x_ + v.x_};
  }
  std::string to_string() const;

 private:
  Quad s_;
  Quad x_;
};

/// The pairing I x I -> S sending (x, x') to x x' / (2 - √-5).
Quad odd_pairing(const Quad& x, const Quad& y);

/// (s,x)(s',x') = (ss' + pairing(x,x'), xs' + sx').
SignGradedElement sign_graded_mul(const SignGradedElement& u, const SignGradedElement& v);

/// Coordinates in the Z-basis (1,0), (√-5,0), (0,3), (0,1+√-5).
std::vector<coeff::BigInt> lattice_coordinates(const SignGradedElement& u);
SignGradedElement from_lattice_coordinates(const std::vector<coeff::BigInt>& c);

/// Determinant of left multiplication by u on the Z-lattice; u is a unit iff
/// this is ±1.
coeff::BigInt left_multiplication_det(const SignGradedElement& u);

struct UnitSearchReport {
  long bound = 0;
  bool homogeneous = false;
  std::size_t candidates = 0;  // nonzero elements tested
  std::vector<SignGradedElement> units;
};

/// Units among the nonzero homogeneous elements (q, 0) and (0, q) with
/// q = a + b√-5, |a|, |b| <= bound. Both degrees are searched, so an empty
/// degree -1 part shows the fixture is not a crossed product within the box.
UnitSearchReport unit_search(long bound);

/// Every (s, x) with s = a + b√-5, x = c + d√-5 in I and all four of
/// |a|, |b|, |c|, |d| <= bound. This does find inhomogeneous units such as
/// (3, 5 - √-5), whose inverse is (-3, 5 - √-5).
UnitSearchReport unit_search_full(long bound);

/// Which fixture a strong-grading check refers to.
enum class Fixture { GroupRing, SignGraded, IntConstPoly };

struct WitnessReport {
  Fixture fixture;
  std::string degree;  // grading-group element, printed
  bool found = false;
  bool verified = false;
  /// Printed pairs (u_i, v_i) with u_i of degree g and v_i of degree g^-1.
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string reason;  // why no witness exists, when found is false
};

/// Group rings: {(delta_g, delta_g^-1)}, verified by multiplication.
WitnessReport strongly_graded_check(const RingDescriptor& ring, const groups::GroupElement& g);
/// Sign-graded fixture at degree +1 or -1.
WitnessReport strongly_graded_check_sign(int g);
/// Integer-constant-term polynomial fixture at integer degree k.
WitnessReport strongly_graded_check_poly(long k);

struct NzdReport {
  unsigned radius = 0;
  bool injective = false;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::vector<GRElement> kernel;  // basis of elements x with r x = 0
};

/// Left multiplication by r on elements supported in ball(radius); exact
/// rank over the coefficient field (Z via Q). Only certifies up to radius.
NzdReport homog_nzd_check(const GRElement& r, unsigned radius);

/// Polynomial sum_k c_k x^k over a group ring whose constant term c_0 is an
/// integer multiple of the identity.
class IntConstPoly {
 public:
  /// Throws InvalidArgument if the constant term is not an integer constant.
  IntConstPoly(RingDescriptor base, std::vector<GRElement> coeffs);

  const RingDescriptor& base() const { return base_; }
  const std::vector<GRElement>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  IntConstPoly operator+(const IntConstPoly& o) const;
  IntConstPoly operator*(const IntConstPoly& o) const;
  friend bool operator==(const IntConstPoly& p, const IntConstPoly& q) { return p.coeffs_ == q.coeffs_; }

 private:
  RingDescriptor base_;
  std::vector<GRElement> coeffs_;  // trimmed
};

/// True iff c is k * 1 for an integer k.
bool is_integer_constant(const GRElement& c);

struct PolyKernelReport {
  unsigned max_degree = 0;
  unsigned radius = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  /// Kernel dimension in each degree block.
  std::vector<std::size_t> kernel_by_degree;
  bool trivial() const;
};

/// Truncated kernel of (a-1) x X_1 + (b-1) x X_2 = 0 over the integer
/// constant term polynomial ring with base Z F_2: unknown coefficients of
/// degree 0 are integers, those of degree 1..max_degree are supported in
/// ball(radius).
PolyKernelReport int_poly_system_kernel(unsigned max_degree, unsigned radius);

}  // namespace srcalg::graded
