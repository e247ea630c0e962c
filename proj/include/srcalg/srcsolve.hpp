#pragma once

#include <string>
#include <utility>
#include <vector>

#include "srcalg/gring.hpp"
#include "srcalg/groups.hpp"
#include "srcalg/linalg.hpp"

namespace srcalg::srcsolve {

using gring::GRElement;
using gring::RingDescriptor;
using groups::FiniteSubset;
using groups::GroupElement;

/// sum_j a[i][j] x_j = 0 for i = 1..m, with unknowns x_j multiplied on the
/// right of their coefficients.
struct LinearSystem {
  RingDescriptor ring;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::vector<GRElement>> a;  // m rows of n entries

  /// Shape and ring agreement; InvalidArgument / MixedRings otherwise.
  void validate() const;
  /// Union of the supports of all coefficients.
  FiniteSubset coefficient_support() const;
  /// sum_j a[i][j] x_j for every i.
  std::vector<GRElement> evaluate(const std::vector<GRElement>& x) const;
};

/// Label of a lifted row (g, i) or column (f, j); indices are 0-based.
struct IndexLabel {
  GroupElement element;
  std::size_t index;
};

struct LiftedSystem {
  linalg::SparseMatrix matrix;
  FiniteSubset S;
  FiniteSubset F;
  FiniteSubset SF;
  std::vector<IndexLabel> rows;  // (g in SF sorted, then equation)
  std::vector<IndexLabel> cols;  // (f in F sorted, then unknown)
};

/// Entry at row (g, i), column (f, j) is the coefficient of g f^-1 in a_ij.
LiftedSystem lift_system(const LinearSystem& sys, const FiniteSubset& F);

/// Exact kernel basis of the lifted matrix (see linalg::kernel_basis).
std::vector<linalg::Vector> kernel_basis(const linalg::SparseMatrix& M);

struct SolutionVector {
  std::vector<GRElement> x;
  bool verified = false;
};

/// x_j = sum_f delta_f x'_{jf}; the result is not yet verified.
SolutionVector assemble_solution(const RingDescriptor& ring, std::size_t n, const linalg::Vector& kv,
                                 const LiftedSystem& lifted);

/// Exact substitution: true iff every equation vanishes and some x_j != 0.
bool verify_solution(const LinearSystem& sys, const std::vector<GRElement>& x);

struct SolveReport {
  SolutionVector solution;
  coeff::Rational ratio_bound;  // n / m
  groups::FolnerResult folner;
  std::size_t lifted_rows = 0;
  std::size_t lifted_cols = 0;
  std::size_t columns_examined = 0;
  std::string method;
};

/// Folner search with ratio n/m, lift, first kernel vector, assembly and
/// mandatory verification. Columns are visited in order of increasing
/// distance of f from the first element of F (l-infinity in Z^d), so small
/// translates of a solution are met early.
SolveReport solve_src(const LinearSystem& sys, unsigned budget);

struct TruncatedKernelReport {
  unsigned radius = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  /// Kernel basis, each vector assembled into n ring elements.
  std::vector<std::vector<GRElement>> kernel;
};

/// Kernel of x -> (sum_j a_ij x_j)_i on n copies of span(ball(radius)).
TruncatedKernelReport truncated_kernel(const LinearSystem& sys, unsigned radius);

}  // namespace srcalg::srcsolve
