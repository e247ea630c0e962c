#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srcalg/coeff.hpp"

namespace srcalg::linalg {

using coeff::Coefficient;
using coeff::CoeffRing;
using Vector = std::vector<Coefficient>;

/// Column-major sparse matrix over Q, Z or a finite field.
class SparseMatrix {
 public:
  using Column = std::map<std::size_t, Coefficient>;

  SparseMatrix(CoeffRing ring, std::size_t rows, std::size_t cols);
  static SparseMatrix from_dense(const CoeffRing& ring, const std::vector<Vector>& rows, std::size_t cols);

  const CoeffRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Column& column(std::size_t c) const { return cols_.at(c); }

  /// Adds v to entry (r, c).
  void add(std::size_t r, std::size_t c, const Coefficient& v);
  Coefficient at(std::size_t r, std::size_t c) const;
  std::vector<Vector> to_dense() const;
  /// M x for a full-length vector x.
  Vector apply(const Vector& x) const;

 private:
  CoeffRing ring_;
  std::size_t rows_;
  std::vector<Column> cols_;
};

/// Exact basis of the right null space via reduced row echelon form. Over Z
/// the rational basis is cleared to primitive integer vectors. Vectors are
/// normalised (see normalize_kernel_vector); the list is empty iff M is
/// injective.
std::vector<Vector> kernel_basis(const SparseMatrix& M);
std::size_t rank(const SparseMatrix& M);

/// Over Q and Z: a primitive integer vector whose first nonzero entry is
/// positive (returned over the matrix ring). Over finite fields: first
/// nonzero entry scaled to 1.
Vector normalize_kernel_vector(const CoeffRing& ring, const Vector& v);

struct DependencyResult {
  Vector vector;                  // full length, nonzero, M v = 0 verified exactly
  std::size_t columns_examined;   // prefix of `order` that was needed
  std::string method;             // "modular", "exact-fallback" or "finite-field"
};

/// Walks the columns in `order` and stops at the first one that depends on
/// its predecessors, returning the corresponding kernel vector. Over Q and Z
/// the elimination runs modulo 61-bit primes and the rational vector is
/// rebuilt by CRT plus rational reconstruction, then checked exactly; exact
/// rational elimination is the fallback. nullopt means the columns listed in
/// `order` are independent.
std::optional<DependencyResult> first_dependency(const SparseMatrix& M, const std::vector<std::size_t>& order);

/// Rational reconstruction of a residue modulo m with |num|, den bounded by
/// sqrt(m / 2); nullopt when no such fraction exists.
std::optional<coeff::Rational> rational_reconstruct(const coeff::BigInt& residue, const coeff::BigInt& modulus);

}  // namespace srcalg::linalg
