#pragma once

#include <cstdint>
#include <vector>

#include "srcalg/finite_field.hpp"
#include "srcalg/set_system.hpp"

namespace srcalg::embed {

using coeff::FieldPtr;
using coeff::FiniteField;
using FieldMatrix = std::vector<std::vector<FiniteField::Elem>>;

/// Matrices A'_s over L, one per label, each |Y| x |Y|; rows and columns are
/// indexed by y - 1.
struct AlphaFamily {
  FieldPtr base;   // K
  FieldPtr field;  // L
  std::vector<FieldMatrix> A;
};

/// Row y (1-based) of A_s.
struct RowRef {
  std::size_t s;
  std::size_t y;
  friend bool operator==(const RowRef&, const RowRef&) = default;
  friend auto operator<=>(const RowRef&, const RowRef&) = default;
};

/// One choice (T_s)_s of label subsets.
struct FamilyInfo {
  std::vector<LabelSet> T;
  std::size_t y_size = 0;
  std::size_t v = 0;  // sum_s |X_{s,T_s}|
  bool admissible = false;  // v >= |Y|
  /// Stacked rows ordered by s, then increasing y in X_{s,T_s}.
  std::vector<RowRef> rows;
  /// First |Y| of `rows` (admissible families only).
  std::vector<RowRef> selection() const;
};

/// All (2^|S|)^|S| families, T_0 varying slowest.
std::vector<FamilyInfo> enumerate_families(const SetSystem& sys);

struct ConstructStats {
  std::uint64_t seed = 0;
  std::size_t families = 0;
  std::size_t admissible = 0;
  std::size_t distinct_selections = 0;
  std::size_t degree_sum = 0;   // sum of the determinant degrees
  std::size_t attempts = 0;     // sampled points, all fields together
  unsigned extension_degree = 0;  // [L : K]
  std::uint64_t field_order = 0;  // |L|
};

/// Generic matrices with an indeterminate in every entry of row y of A_s for
/// y in X_s; values are drawn from L (|L| > 2 * degree_sum) with a seeded
/// generator until every distinct selected determinant is nonzero, each
/// candidate being checked by exact evaluation. L grows when attempts run
/// out; RetryExhausted after that.
AlphaFamily construct_alphas(const SetSystem& sys, const FieldPtr& K, std::uint64_t seed,
                             ConstructStats* stats = nullptr);

/// Determinant of the square matrix built from the listed rows.
FiniteField::Elem selection_determinant(const AlphaFamily& fam, const std::vector<RowRef>& rows);

/// Rank over L of the stacked listed rows.
std::size_t stacked_rank(const AlphaFamily& fam, const std::vector<RowRef>& rows);

struct FamilyCheck {
  std::vector<LabelSet> T;
  std::size_t v = 0;
  bool admissible = false;
  std::size_t rank = 0;  // admissible families only
  bool pass = true;      // full column rank, or not admissible
};

struct AlphaReport {
  bool support_ok = false;
  std::vector<FamilyCheck> families;
  bool all_pass() const;
};

/// (i) rows outside X_s vanish; (ii) for every admissible family the stacked
/// rows X_{s,T_s} of A'_s have rank |Y|.
AlphaReport verify_alphas(const AlphaFamily& fam, const SetSystem& sys);

}  // namespace srcalg::embed
