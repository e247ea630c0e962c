#include "srcalg/theta.hpp"

#include <algorithm>
#include <set>

#include "srcalg/error.hpp"

namespace srcalg::embed {

using coeff::Coefficient;
using coeff::CoeffRing;

ThetaMap build_theta(const AlphaFamily& fam, const SetSystem& sys, std::vector<GroupElement> b, const GroupPtr& G) {
  if (b.size() != sys.s_size() || fam.A.size() != sys.s_size()) {
    fail(ErrorCode::InvalidArgument, "need one group element and one matrix per label");
  }
  std::set<GroupElement> distinct;
  for (const auto& g : b) {
    G->require(g);
    distinct.insert(g);
  }
  if (distinct.size() != b.size()) fail(ErrorCode::InvalidArgument, "the b_s must be pairwise distinct");
  return ThetaMap{fam, sys, std::move(b), RingDescriptor{G, CoeffRing::finite(fam.field)}};
}

std::vector<GRElement> theta_apply(const ThetaMap& theta, const std::vector<GRElement>& u) {
  const std::size_t ny = theta.sys.y_size;
  if (u.size() != ny) fail(ErrorCode::InvalidArgument, "input must have one entry per point of Y");
  const auto& field = theta.fam.field;
  std::vector<GRElement> out(ny, GRElement::zero(theta.ring));
  for (std::size_t s = 0; s < theta.b.size(); ++s) {
    const GRElement shift = GRElement::delta(theta.ring, theta.b[s]);
    for (std::size_t yp = 0; yp < ny; ++yp) {
      if (u[yp].is_zero()) continue;
      const GRElement moved = shift * u[yp];
      for (std::size_t y = 0; y < ny; ++y) {
        const auto a = theta.fam.A[s][y][yp];
        if (a != 0) out[y] = out[y] + moved.scaled(Coefficient::finite(field, a));
      }
    }
  }
  return out;
}

ThetaCertificate theta_certify(const ThetaMap& theta, unsigned radius) {
  const auto& G = theta.ring.group;
  const std::size_t ny = theta.sys.y_size;
  const auto& field = theta.fam.field;
  const groups::FiniteSubset F = groups::ball(G, radius);
  const groups::FiniteSubset B(G, theta.b);
  const groups::FiniteSubset BF = groups::product_set(B, F);
  const auto& rows = BF.elements();

  ThetaCertificate cert;
  cert.radius = radius;
  cert.rows = BF.size() * ny;
  cert.cols = F.size() * ny;
  linalg::SparseMatrix M(theta.ring.coeff, cert.rows, cert.cols);
  std::size_t fi = 0;
  for (const auto& f : F) {
    for (std::size_t s = 0; s < theta.b.size(); ++s) {
      const GroupElement g = G->mul(theta.b[s], f);
      const auto gi = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), g) - rows.begin());
      for (std::size_t yp = 0; yp < ny; ++yp) {
        for (std::size_t y = 0; y < ny; ++y) {
          const auto a = theta.fam.A[s][y][yp];
          if (a != 0) M.add(gi * ny + y, fi * ny + yp, Coefficient::finite(field, a));
        }
      }
    }
    ++fi;
  }

  cert.missing = theta.sys.uncovered();
  cert.missing_rows_zero = true;
  for (std::size_t c = 0; c < M.cols(); ++c) {
    for (const auto& [r, v] : M.column(c)) {
      if (std::find(cert.missing.begin(), cert.missing.end(), r % ny + 1) != cert.missing.end()) {
        cert.missing_rows_zero = false;
      }
    }
  }

  const auto kernel = linalg::kernel_basis(M);
  cert.rank = cert.cols - kernel.size();
  cert.injective = kernel.empty();
  if (!cert.injective) {
    const auto& v = kernel.front();
    cert.witness.assign(ny, GRElement::zero(theta.ring));
    std::size_t idx = 0;
    for (const auto& f : F) {
      for (std::size_t yp = 0; yp < ny; ++yp, ++idx) cert.witness[yp].add_term(f, v[idx]);
    }
    const auto image = theta_apply(theta, cert.witness);
    const bool nonzero = std::any_of(cert.witness.begin(), cert.witness.end(), [](const GRElement& e) { return !e.is_zero(); });
    cert.witness_verified =
        nonzero && std::all_of(image.begin(), image.end(), [](const GRElement& e) { return e.is_zero(); });
  }
  return cert;
}

namespace {

std::pair<GRElement, GRElement> footnote_coefficients(const RingDescriptor& ring) {
  const auto& gens = ring.group->generators();
  if (gens.size() < 2) fail(ErrorCode::InvalidArgument, "need a group with at least two standard generators");
  const GRElement one = GRElement::one(ring);
  return {GRElement::delta(ring, gens[0]) - one, GRElement::delta(ring, gens[1]) - one};
}

}  // namespace

GRElement footnote_embedding(const GRElement& x1, const GRElement& x2) {
  const auto [a1, b1] = footnote_coefficients(x1.ring());
  return a1 * x1 + b1 * x2;
}

srcsolve::LinearSystem footnote_system(const RingDescriptor& ring) {
  auto [a1, b1] = footnote_coefficients(ring);
  return srcsolve::LinearSystem{ring, 1, 2, {{std::move(a1), std::move(b1)}}};
}

std::vector<std::vector<GRElement>> extend_scalars(const std::vector<linalg::Vector>& M, const RingDescriptor& R) {
  std::vector<std::vector<GRElement>> out;
  const GroupElement e = R.group->identity();
  for (const auto& row : M) {
    std::vector<GRElement> r;
    for (const auto& c : row) r.push_back(GRElement::term(R, e, c));
    out.push_back(std::move(r));
  }
  return out;
}

srcsolve::LinearSystem extended_system(const std::vector<linalg::Vector>& M, const RingDescriptor& R) {
  if (M.empty() || M[0].empty()) fail(ErrorCode::InvalidArgument, "empty matrix");
  return srcsolve::LinearSystem{R, M.size(), M[0].size(), extend_scalars(M, R)};
}

}  // namespace srcalg::embed
