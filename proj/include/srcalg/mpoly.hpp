#pragma once

#include <map>
#include <string>
#include <vector>

#include "srcalg/finite_field.hpp"
#include "srcalg/upoly.hpp"

namespace srcalg::embed {

using coeff::FieldPtr;
using coeff::FiniteField;

/// Exponent vector, one entry per variable.
using Monomial = std::vector<unsigned>;

/// Sparse multivariate polynomial over a finite field; zero coefficients are
/// never stored.
class MPoly {
 public:
  MPoly(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}
  static MPoly variable(FieldPtr field, std::size_t nvars, std::size_t i);
  static MPoly constant(FieldPtr field, std::size_t nvars, FiniteField::Elem c);

  const FieldPtr& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, FiniteField::Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  void add_term(const Monomial& m, FiniteField::Elem c);
  MPoly operator+(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;

  FiniteField::Elem eval(const std::vector<FiniteField::Elem>& point) const;
  /// Same polynomial with coefficients pushed through an embedding.
  MPoly mapped(const coeff::FieldEmbedding& e) const;
  /// Largest index of a variable that occurs, or -1.
  int highest_variable() const;
  unsigned degree_in(std::size_t var) const;
  /// Coefficient of var^k viewed as a polynomial in the other variables.
  MPoly coefficient_of(std::size_t var, unsigned k) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t nvars_;
  std::map<Monomial, FiniteField::Elem> terms_;
};

struct PointResult {
  FieldPtr field;                          // L, an extension of the input field
  std::vector<FiniteField::Elem> point;    // values in L
  std::vector<coeff::FieldEmbedding> tower;  // input field -> ... -> L
  FiniteField::Elem map_in(FiniteField::Elem e) const;  // input field element into L
};

/// Point a over an extension L with f(a) = b. Follows the induction on the
/// highest occurring variable: a leading coefficient is first made nonzero,
/// then the remaining univariate equation is solved in the smallest
/// extension holding a root. Unused variables are set to 0. The result is
/// verified; ConstantPolynomial for constant f.
PointResult find_point(const MPoly& f, FiniteField::Elem b);

}  // namespace srcalg::embed
