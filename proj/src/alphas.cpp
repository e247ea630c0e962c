#include "srcalg/alphas.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "srcalg/error.hpp"

namespace srcalg::embed {

using Elem = FiniteField::Elem;

std::vector<RowRef> FamilyInfo::selection() const {
  if (!admissible) return {};
  return std::vector<RowRef>(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(y_size));
}

namespace {

// Gaussian elimination on a dense copy; returns rank and (for square input)
// the determinant.
std::pair<std::size_t, Elem> eliminate(const FiniteField& L, FieldMatrix M) {
  const std::size_t nrows = M.size();
  const std::size_t ncols = nrows ? M[0].size() : 0;
  Elem det = L.one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && M[p][c] == 0) ++p;
    if (p == nrows) {
      det = 0;
      continue;
    }
    if (p != r) {
      std::swap(M[p], M[r]);
      det = L.neg(det);
    }
    det = L.mul(det, M[r][c]);
    const Elem inv = L.inv(M[r][c]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (M[i][c] == 0) continue;
      const Elem f = L.mul(M[i][c], inv);
      for (std::size_t k = c; k < ncols; ++k) M[i][k] = L.sub(M[i][k], L.mul(f, M[r][k]));
    }
    ++r;
  }
  if (r < nrows || r < ncols) det = 0;
  return {r, det};
}

FieldMatrix gather(const AlphaFamily& fam, const std::vector<RowRef>& rows) {
  FieldMatrix M;
  M.reserve(rows.size());
  for (const auto& ref : rows) M.push_back(fam.A.at(ref.s).at(ref.y - 1));
  return M;
}

}  // namespace

std::vector<FamilyInfo> enumerate_families(const SetSystem& sys) {
  const std::size_t k = sys.s_size();
  if (k == 0 || k > 4) fail(ErrorCode::Unsupported, "family enumeration supports 1..4 labels");
  const std::size_t per = std::size_t{1} << k;
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= per;
  std::vector<FamilyInfo> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    FamilyInfo info;
    info.y_size = sys.y_size;
    info.T.assign(k, 0);
    std::size_t c = code;
    for (std::size_t s = k; s-- > 0;) {
      info.T[s] = static_cast<LabelSet>(c % per);
      c /= per;
    }
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t y : x_restricted(sys, s, info.T[s])) info.rows.push_back({s, y});
    }
    info.v = info.rows.size();
    info.admissible = info.v >= sys.y_size;
    out.push_back(std::move(info));
  }
  return out;
}

Elem selection_determinant(const AlphaFamily& fam, const std::vector<RowRef>& rows) {
  const FieldMatrix M = gather(fam, rows);
  if (!M.empty() && M[0].size() != M.size()) fail(ErrorCode::InvalidArgument, "selection is not square");
  return eliminate(*fam.field, M).second;
}

std::size_t stacked_rank(const AlphaFamily& fam, const std::vector<RowRef>& rows) {
  return eliminate(*fam.field, gather(fam, rows)).first;
}

AlphaFamily construct_alphas(const SetSystem& sys, const FieldPtr& K, std::uint64_t seed, ConstructStats* stats) {
  const std::size_t ny = sys.y_size;
  if (ny == 0) fail(ErrorCode::InvalidArgument, "empty Y");
  const auto families = enumerate_families(sys);
  std::set<std::vector<RowRef>> selections;
  std::size_t admissible = 0;
  for (const auto& f : families) {
    if (!f.admissible) continue;
    ++admissible;
    selections.insert(f.selection());
  }
  // Degree of the product of D_T over all admissible families.
  const std::size_t degree_sum = ny * admissible;

  const std::uint64_t p = K->characteristic();
  unsigned r = 1;
  // Smallest r with |K|^r > 2 * degree_sum.
  auto order_of = [&](unsigned rr) {
    long double q = 1;
    for (unsigned i = 0; i < K->degree() * rr; ++i) q *= static_cast<long double>(p);
    return q;
  };
  while (order_of(r) <= 2.0L * static_cast<long double>(degree_sum)) ++r;

  std::mt19937_64 rng(seed);
  std::size_t attempts = 0;
  constexpr int kAttemptsPerField = 16;
  constexpr unsigned kEnlargements = 4;
  for (unsigned grow = 0; grow <= kEnlargements; ++grow, ++r) {
    if (order_of(r) >= 4.0e18L) break;
    const FieldPtr L = r == 1 ? K : coeff::ff_extend(p, K->degree() * r);
    for (int attempt = 0; attempt < kAttemptsPerField; ++attempt) {
      ++attempts;
      AlphaFamily fam{K, L, std::vector<FieldMatrix>(sys.s_size(), FieldMatrix(ny, std::vector<Elem>(ny, 0)))};
      for (std::size_t s = 0; s < sys.s_size(); ++s) {
        for (std::size_t y : sys.X[s]) {
          for (std::size_t j = 0; j < ny; ++j) fam.A[s][y - 1][j] = rng() % L->order();
        }
      }
      bool good = true;
      for (const auto& sel : selections) {
        if (selection_determinant(fam, sel) == 0) {
          good = false;
          break;
        }
      }
      if (!good) continue;
      if (stats) {
        *stats = {seed, families.size(), admissible, selections.size(), degree_sum, attempts,
                  L->degree() / K->degree(), L->order()};
      }
      return fam;
    }
  }
  fail(ErrorCode::RetryExhausted, "no nonvanishing point after " + std::to_string(attempts) + " samples");
}

bool AlphaReport::all_pass() const {
  return support_ok && std::all_of(families.begin(), families.end(), [](const FamilyCheck& f) { return f.pass; });
}

AlphaReport verify_alphas(const AlphaFamily& fam, const SetSystem& sys) {
  const std::size_t ny = sys.y_size;
  if (fam.A.size() != sys.s_size()) fail(ErrorCode::InvalidArgument, "one matrix per label expected");
  AlphaReport rep;
  rep.support_ok = true;
  for (std::size_t s = 0; s < sys.s_size(); ++s) {
    if (fam.A[s].size() != ny) fail(ErrorCode::InvalidArgument, "matrix has the wrong number of rows");
    for (std::size_t y = 1; y <= ny; ++y) {
      if (fam.A[s][y - 1].size() != ny) fail(ErrorCode::InvalidArgument, "matrix has the wrong number of columns");
      if (sys.in(s, y)) continue;
      for (Elem e : fam.A[s][y - 1]) {
        if (e != 0) rep.support_ok = false;
      }
    }
  }
  for (const auto& f : enumerate_families(sys)) {
    FamilyCheck c{f.T, f.v, f.admissible, 0, true};
    if (f.admissible) {
      c.rank = stacked_rank(fam, f.rows);
      c.pass = c.rank == ny;
    }
    rep.families.push_back(std::move(c));
  }
  return rep;
}

}  // namespace srcalg::embed
