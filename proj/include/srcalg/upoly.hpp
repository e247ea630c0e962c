#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "srcalg/finite_field.hpp"

namespace srcalg::coeff {

/// Dense univariate polynomial over a FiniteField, coefficients from x^0
/// upward. The functions below keep results trimmed (no trailing zeros); the
/// zero polynomial is the empty vector.
using UPoly = std::vector<FiniteField::Elem>;

namespace upoly {

void trim(UPoly& f);
int degree(const UPoly& f);  // -1 for zero
UPoly add(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly sub(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly mul(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly scale(const FiniteField& F, const UPoly& a, FiniteField::Elem c);
/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly mod(const FiniteField& F, const UPoly& a, const UPoly& b);
UPoly monic(const FiniteField& F, const UPoly& a);
/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const FiniteField& F, UPoly a, UPoly b);
UPoly powmod(const FiniteField& F, const UPoly& base, std::uint64_t e, const UPoly& modulus);
FiniteField::Elem eval(const FiniteField& F, const UPoly& f, FiniteField::Elem x);
UPoly x_poly();

/// Product of the distinct linear factors of f over F, i.e. gcd(f, x^q - x).
UPoly linear_part(const FiniteField& F, const UPoly& f);
/// Smallest r >= 1 such that f has a root in the degree-r extension of F;
/// f must be nonconstant.
unsigned min_root_degree(const FiniteField& F, const UPoly& f);
/// Some root of f in F via equal-degree splitting, or nullopt if none.
std::optional<FiniteField::Elem> find_root(const FiniteField& F, const UPoly& f, std::mt19937_64& rng);

}  // namespace upoly

/// Embedding of a subfield `from` into `to` (same characteristic, degree of
/// `from` divides degree of `to`), realized by a root of from's modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr from, FieldPtr to);
  FiniteField::Elem operator()(FiniteField::Elem e) const;
  const FieldPtr& source() const { return from_; }
  const FieldPtr& target() const { return to_; }

 private:
  FieldPtr from_;
  FieldPtr to_;
  std::vector<FiniteField::Elem> powers_;  // images of x^i
};

}  // namespace srcalg::coeff
