#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace srcalg::coeff {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// The field F_p[x]/(f) for a monic irreducible f of degree k.
///
/// Elements are packed as the integer sum c_i p^i of their coefficient
/// digits (c_0 is the constant term), so every element is a plain
/// std::uint64_t in [0, p^k). p^k must stay below 2^62. Fields of order up
/// to 2^20 with k > 1 multiply through log/antilog tables built once on
/// construction; the object is immutable afterwards.
class FiniteField {
 public:
  using Elem = std::uint64_t;

  /// `modulus` lists coefficients from x^0 upward and must be monic and
  /// irreducible over F_p.
  static FieldPtr create(std::uint64_t p, std::vector<std::uint64_t> modulus);
  /// F_p presented as F_p[x]/(x).
  static FieldPtr prime_field(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;
  Elem from_digits(std::span<const std::uint64_t> digits) const;
  std::vector<std::uint64_t> digits(Elem e) const;
  /// Class of x; for prime fields this is the root of the linear modulus.
  Elem generator() const;
  bool contains(Elem e) const { return e < q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  bool same_as(const FiniteField& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }
  std::string describe() const;

 private:
  FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus);
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> pow_p_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// True iff the polynomial (coefficients from x^0 upward, nonzero leading
/// coefficient) is irreducible over F_p. Uses the Ben-Or gcd test.
bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly);

/// F_{p^k} with the lexicographically least monic irreducible polynomial of
/// degree k, comparing coefficient lists from x^(k-1) down to x^0.
FieldPtr ff_extend(std::uint64_t p, unsigned k);

/// Human form such as "x^3 + x + 1"; coefficients from x^0 upward.
std::string poly_to_string(const std::vector<std::uint64_t>& coeffs);

}  // namespace srcalg::coeff
