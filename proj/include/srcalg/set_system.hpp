#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace srcalg::embed {

/// Base of the logarithm in the size bound |Y| / ((1 + log|S|) |T|).
enum class LogBase { Natural, Two };

std::string log_base_name(LogBase base);

/// Finite set Y = {1..y_size} with subsets X_s, s = 0..|S|-1.
struct SetSystem {
  std::size_t y_size = 0;
  std::vector<std::vector<std::size_t>> X;  // sorted, 1-based

  std::size_t s_size() const { return X.size(); }
  bool in(std::size_t s, std::size_t y) const;
  /// Points of Y outside every X_s.
  std::vector<std::size_t> uncovered() const;
};

/// Label subsets T of S are bitmasks over s = 0..|S|-1.
using LabelSet = std::uint32_t;

/// X_s minus the union of X_t over t in T, t != s.
std::vector<std::size_t> x_restricted(const SetSystem& sys, std::size_t s, LabelSet T);

struct SetSystemCheck {
  LabelSet T;
  std::size_t s;
  std::size_t size;  // |X_{s,T}|
  double bound;      // |Y| / ((1 + log|S|) |T|)
  bool pass;
};

struct SetSystemReport {
  LogBase base = LogBase::Natural;
  std::size_t union_size = 0;
  bool union_ok = false;  // |union X_s| = |Y| - 1
  std::vector<SetSystemCheck> checks;  // every nonempty T and s in T
  bool valid() const;
};

/// Direct enumeration of all nonempty T and s in T. When the logarithm is an
/// integer the comparison is done in integers.
SetSystemReport validate_set_system(const SetSystem& sys, LogBase base = LogBase::Natural);

struct SearchStats {
  std::size_t y_size = 0;          // |Y| of the result
  std::size_t profiles_tested = 0;  // canonical region-count profiles examined
};

/// Smallest |Y| <= y_max admitting a valid system, found by enumerating the
/// number of points in each Venn region (the uncovered region holds exactly
/// one point). Profiles equivalent under relabelling S are tested once. The
/// result is re-validated; NotFound when no |Y| <= y_max works.
SetSystem search_set_system(std::size_t s_size, std::size_t y_max, LogBase base = LogBase::Natural,
                            SearchStats* stats = nullptr);

}  // namespace srcalg::embed
