#pragma once

#include <vector>

#include "srcalg/alphas.hpp"
#include "srcalg/gring.hpp"
#include "srcalg/linalg.hpp"
#include "srcalg/set_system.hpp"
#include "srcalg/srcsolve.hpp"

namespace srcalg::embed {

using gring::GRElement;
using gring::RingDescriptor;
using groups::GroupElement;
using groups::GroupPtr;

/// Theta = sum_s A'_s (x) (left multiplication by b_s) acting on Y-indexed
/// vectors over the group ring L G.
struct ThetaMap {
  AlphaFamily fam;
  SetSystem sys;
  std::vector<GroupElement> b;  // one per label, pairwise distinct
  RingDescriptor ring;          // L G
};

ThetaMap build_theta(const AlphaFamily& fam, const SetSystem& sys, std::vector<GroupElement> b, const GroupPtr& G);

/// (theta u)_y = sum_s sum_y' A'_s[y][y'] delta_{b_s} u_y'.
std::vector<GRElement> theta_apply(const ThetaMap& theta, const std::vector<GRElement>& u);

struct ThetaCertificate {
  unsigned radius = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  bool injective = false;
  std::vector<GRElement> witness;   // nonzero u with theta u = 0, when not injective
  bool witness_verified = false;    // theta_apply(witness) == 0 re-checked
  std::vector<std::size_t> missing;  // points of Y outside every X_s
  bool missing_rows_zero = false;    // no matrix entry in any row (g, y), y missing
};

/// Exact kernel of theta on inputs supported in ball(radius); columns are
/// (f, y') with f sorted, rows (g, y) with g in {b_s} ball(radius).
ThetaCertificate theta_certify(const ThetaMap& theta, unsigned radius);

/// (a - 1) x1 + (b - 1) x2 with a, b the first two standard generators.
GRElement footnote_embedding(const GRElement& x1, const GRElement& x2);
/// The one-equation system behind footnote_embedding.
srcsolve::LinearSystem footnote_system(const RingDescriptor& ring);

/// Entry-wise c -> c * delta_1.
std::vector<std::vector<GRElement>> extend_scalars(const std::vector<linalg::Vector>& M, const RingDescriptor& R);
/// The system whose coefficient array is extend_scalars(M, R); the map is
/// x -> M x on column vectors over R.
srcsolve::LinearSystem extended_system(const std::vector<linalg::Vector>& M, const RingDescriptor& R);

}  // namespace srcalg::embed
