#include "srcalg/srcsolve.hpp"

#include <algorithm>
#include <numeric>

#include "srcalg/error.hpp"

namespace srcalg::srcsolve {

using coeff::Coefficient;
using groups::GroupKind;

void LinearSystem::validate() const {
  if (m == 0 || n == 0) fail(ErrorCode::InvalidArgument, "system needs m >= 1 and n >= 1");
  if (a.size() != m) fail(ErrorCode::InvalidArgument, "coefficient array has the wrong number of rows");
  for (const auto& row : a) {
    if (row.size() != n) fail(ErrorCode::InvalidArgument, "coefficient array has the wrong number of columns");
    for (const auto& x : row) {
      if (!(x.ring() == ring)) fail(ErrorCode::MixedRings, x.ring().describe() + " vs " + ring.describe());
    }
  }
}

FiniteSubset LinearSystem::coefficient_support() const {
  std::vector<GroupElement> all;
  for (const auto& row : a) {
    for (const auto& x : row) {
      for (const auto& [g, c] : x.terms()) all.push_back(g);
    }
  }
  return FiniteSubset(ring.group, std::move(all));
}

std::vector<GRElement> LinearSystem::evaluate(const std::vector<GRElement>& x) const {
  if (x.size() != n) fail(ErrorCode::InvalidArgument, "solution has the wrong number of unknowns");
  std::vector<GRElement> out;
  for (const auto& row : a) {
    GRElement acc = GRElement::zero(ring);
    for (std::size_t j = 0; j < n; ++j) acc = acc + row[j] * x[j];
    out.push_back(std::move(acc));
  }
  return out;
}

LiftedSystem lift_system(const LinearSystem& sys, const FiniteSubset& F) {
  sys.validate();
  if (F.empty()) fail(ErrorCode::InvalidArgument, "lifting over an empty set");
  FiniteSubset S = sys.coefficient_support();
  if (S.empty()) fail(ErrorCode::EmptySupport, "all coefficients are zero");
  FiniteSubset SF = groups::product_set(S, F);
  const auto& G = sys.ring.group;
  const std::size_t m = sys.m, n = sys.n;
  LiftedSystem L{linalg::SparseMatrix(sys.ring.coeff, m * SF.size(), n * F.size()), S, F, SF, {}, {}};
  for (const auto& g : SF) {
    for (std::size_t i = 0; i < m; ++i) L.rows.push_back({g, i});
  }
  for (const auto& f : F) {
    for (std::size_t j = 0; j < n; ++j) L.cols.push_back({f, j});
  }
  const auto& sf = SF.elements();
  std::size_t fi = 0;
  for (const auto& f : F) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t col = fi * n + j;
      for (std::size_t i = 0; i < m; ++i) {
        for (const auto& [h, c] : sys.a[i][j].terms()) {
          const GroupElement g = G->mul(h, f);
          const auto pos = static_cast<std::size_t>(std::lower_bound(sf.begin(), sf.end(), g) - sf.begin());
          L.matrix.add(pos * m + i, col, c);
        }
      }
    }
    ++fi;
  }
  return L;
}

std::vector<linalg::Vector> kernel_basis(const linalg::SparseMatrix& M) { return linalg::kernel_basis(M); }

SolutionVector assemble_solution(const RingDescriptor& ring, std::size_t n, const linalg::Vector& kv,
                                 const LiftedSystem& lifted) {
  if (kv.size() != lifted.cols.size()) fail(ErrorCode::InvalidArgument, "kernel vector length mismatch");
  SolutionVector sol;
  sol.x.assign(n, GRElement::zero(ring));
  bool nonzero = false;
  for (std::size_t c = 0; c < kv.size(); ++c) {
    if (kv[c].is_zero()) continue;
    nonzero = true;
    const auto& label = lifted.cols[c];
    sol.x[label.index].add_term(label.element, kv[c]);
  }
  if (!nonzero) fail(ErrorCode::InvalidArgument, "kernel vector is zero");
  if (std::all_of(sol.x.begin(), sol.x.end(), [](const GRElement& e) { return e.is_zero(); })) {
    fail(ErrorCode::LogicFault, "nonzero kernel vector assembled to zero");
  }
  return sol;
}

bool verify_solution(const LinearSystem& sys, const std::vector<GRElement>& x) {
  if (std::all_of(x.begin(), x.end(), [](const GRElement& e) { return e.is_zero(); })) return false;
  const auto values = sys.evaluate(x);
  return std::all_of(values.begin(), values.end(), [](const GRElement& e) { return e.is_zero(); });
}

namespace {

std::int64_t linf_distance(const GroupElement& x, const GroupElement& y) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < x.as_vec().size(); ++i) d = std::max(d, std::abs(x.as_vec()[i] - y.as_vec()[i]));
  return d;
}

}  // namespace

SolveReport solve_src(const LinearSystem& sys, unsigned budget) {
  sys.validate();
  if (sys.m >= sys.n) fail(ErrorCode::InvalidArgument, "solve needs fewer equations than unknowns");
  const auto& G = sys.ring.group;
  const coeff::Rational bound = coeff::make_rational(static_cast<long>(sys.n), static_cast<long>(sys.m));
  SolveReport rep{{}, bound, {groups::FiniteSubset(G, {}), 0, 0, "none"}, 0, 0, 0, "trivial"};
  const FiniteSubset S = sys.coefficient_support();
  if (S.empty()) {
    // Every vector solves the zero system.
    rep.solution.x.assign(sys.n, GRElement::zero(sys.ring));
    rep.solution.x[0] = GRElement::one(sys.ring);
    rep.solution.verified = verify_solution(sys, rep.solution.x);
    return rep;
  }
  rep.folner = groups::folner_search(G, S, bound, budget);
  const LiftedSystem L = lift_system(sys, rep.folner.set);
  rep.lifted_rows = L.matrix.rows();
  rep.lifted_cols = L.matrix.cols();
  if (rep.lifted_rows >= rep.lifted_cols) fail(ErrorCode::LogicFault, "lifted system is not underdetermined");

  std::vector<std::size_t> order(L.cols.size());
  std::iota(order.begin(), order.end(), 0);
  if (G->kind() == GroupKind::Abelian) {
    const GroupElement& origin = *L.F.begin();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return linf_distance(L.cols[x].element, origin) < linf_distance(L.cols[y].element, origin);
    });
  }
  auto dep = linalg::first_dependency(L.matrix, order);
  if (!dep) fail(ErrorCode::LogicFault, "lifted system has an empty kernel despite more columns than rows");
  rep.columns_examined = dep->columns_examined;
  rep.method = dep->method;
  rep.solution = assemble_solution(sys.ring, sys.n, dep->vector, L);
  rep.solution.verified = verify_solution(sys, rep.solution.x);
  if (!rep.solution.verified) fail(ErrorCode::LogicFault, "assembled solution failed substitution");
  return rep;
}

TruncatedKernelReport truncated_kernel(const LinearSystem& sys, unsigned radius) {
  sys.validate();
  TruncatedKernelReport rep;
  rep.radius = radius;
  const FiniteSubset F = groups::ball(sys.ring.group, radius);
  if (sys.coefficient_support().empty()) {
    rep.cols = sys.n * F.size();
    for (const auto& f : F) {
      for (std::size_t j = 0; j < sys.n; ++j) {
        std::vector<GRElement> v(sys.n, GRElement::zero(sys.ring));
        v[j] = GRElement::delta(sys.ring, f);
        rep.kernel.push_back(std::move(v));
      }
    }
    return rep;
  }
  const LiftedSystem L = lift_system(sys, F);
  rep.rows = L.matrix.rows();
  rep.cols = L.matrix.cols();
  for (const auto& v : linalg::kernel_basis(L.matrix)) {
    rep.kernel.push_back(assemble_solution(sys.ring, sys.n, v, L).x);
  }
  rep.rank = rep.cols - rep.kernel.size();
  return rep;
}

}  // namespace srcalg::srcsolve
