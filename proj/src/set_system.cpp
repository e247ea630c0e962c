#include "srcalg/set_system.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>

#include "srcalg/error.hpp"

namespace srcalg::embed {

std::string log_base_name(LogBase base) { return base == LogBase::Natural ? "natural" : "base2"; }

bool SetSystem::in(std::size_t s, std::size_t y) const { return std::binary_search(X.at(s).begin(), X.at(s).end(), y); }

std::vector<std::size_t> SetSystem::uncovered() const {
  std::vector<std::size_t> out;
  for (std::size_t y = 1; y <= y_size; ++y) {
    bool hit = false;
    for (std::size_t s = 0; s < X.size() && !hit; ++s) hit = in(s, y);
    if (!hit) out.push_back(y);
  }
  return out;
}

std::vector<std::size_t> x_restricted(const SetSystem& sys, std::size_t s, LabelSet T) {
  if (s >= sys.s_size()) fail(ErrorCode::InvalidArgument, "label out of range");
  std::vector<std::size_t> out;
  for (std::size_t y : sys.X[s]) {
    bool removed = false;
    for (std::size_t t = 0; t < sys.s_size() && !removed; ++t) {
      if (t != s && (T >> t & 1u) && sys.in(t, y)) removed = true;
    }
    if (!removed) out.push_back(y);
  }
  return out;
}

namespace {

// Decides size * (1 + log k) * t >= y, exactly whenever log k is an integer.
struct BoundRule {
  LogBase base;
  std::size_t k;
  bool integral = false;
  long double factor = 0;  // 1 + log k
  std::size_t int_factor = 0;

  BoundRule(LogBase b, std::size_t k_) : base(b), k(k_) {
    if (k == 1) {
      integral = true;
      int_factor = 1;
    } else if (base == LogBase::Two && std::has_single_bit(k)) {
      integral = true;
      int_factor = 1 + static_cast<std::size_t>(std::countr_zero(k));
    }
    factor = 1.0L + (base == LogBase::Natural ? std::log(static_cast<long double>(k))
                                              : std::log2(static_cast<long double>(k)));
  }
  double bound(std::size_t y, std::size_t t) const { return static_cast<double>(y / (factor * t)); }
  bool ok(std::size_t size, std::size_t y, std::size_t t) const {
    if (integral) return size * int_factor * t >= y;
    return static_cast<long double>(size) * factor * static_cast<long double>(t) >= static_cast<long double>(y);
  }
};

std::vector<LabelSet> gray_regions(std::size_t k) {
  std::vector<LabelSet> out;
  for (LabelSet i = 1; i < (LabelSet{1} << k); ++i) out.push_back(i ^ (i >> 1));
  return out;
}

LabelSet permute_pattern(LabelSet P, const std::vector<std::size_t>& perm) {
  LabelSet out = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (P >> s & 1u) out |= LabelSet{1} << perm[s];
  }
  return out;
}

bool profile_valid(const std::vector<LabelSet>& regions, const std::vector<std::size_t>& counts, std::size_t k,
                   std::size_t y, const BoundRule& rule) {
  for (LabelSet T = 1; T < (LabelSet{1} << k); ++T) {
    const auto t = static_cast<std::size_t>(std::popcount(T));
    for (std::size_t s = 0; s < k; ++s) {
      if (!(T >> s & 1u)) continue;
      const LabelSet others = T & ~(LabelSet{1} << s);
      std::size_t size = 0;
      for (std::size_t r = 0; r < regions.size(); ++r) {
        if ((regions[r] >> s & 1u) && !(regions[r] & others)) size += counts[r];
      }
      if (!rule.ok(size, y, t)) return false;
    }
  }
  return true;
}

}  // namespace

bool SetSystemReport::valid() const {
  return union_ok && std::all_of(checks.begin(), checks.end(), [](const SetSystemCheck& c) { return c.pass; });
}

SetSystemReport validate_set_system(const SetSystem& sys, LogBase base) {
  const std::size_t k = sys.s_size();
  if (k == 0 || k > 20) fail(ErrorCode::InvalidArgument, "label set size must be in 1..20");
  for (const auto& Xs : sys.X) {
    for (std::size_t y : Xs) {
      if (y < 1 || y > sys.y_size) fail(ErrorCode::InvalidArgument, "point outside Y");
    }
  }
  SetSystemReport rep;
  rep.base = base;
  rep.union_size = sys.y_size - sys.uncovered().size();
  rep.union_ok = sys.y_size >= 1 && rep.union_size == sys.y_size - 1;
  const BoundRule rule(base, k);
  for (LabelSet T = 1; T < (LabelSet{1} << k); ++T) {
    const auto t = static_cast<std::size_t>(std::popcount(T));
    for (std::size_t s = 0; s < k; ++s) {
      if (!(T >> s & 1u)) continue;
      const std::size_t size = x_restricted(sys, s, T).size();
      rep.checks.push_back({T, s, size, rule.bound(sys.y_size, t), rule.ok(size, sys.y_size, t)});
    }
  }
  return rep;
}

SetSystem search_set_system(std::size_t s_size, std::size_t y_max, LogBase base, SearchStats* stats) {
  if (s_size < 2) fail(ErrorCode::InvalidArgument, "search needs at least two labels");
  if (s_size > 5) fail(ErrorCode::Unsupported, "exhaustive search is limited to at most five labels");
  const std::size_t k = s_size;
  const auto regions = gray_regions(k);
  const BoundRule rule(base, k);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::size_t> region_index(std::size_t{1} << k, 0);
  for (std::size_t r = 0; r < regions.size(); ++r) region_index[regions[r]] = r;

  std::size_t tested = 0;
  for (std::size_t y = 1; y <= y_max; ++y) {
    const std::size_t covered = y - 1;
    std::vector<std::size_t> counts(regions.size(), 0);
    std::optional<std::vector<std::size_t>> found;
    // Compositions of `covered` into regions.size() parts, lexicographic.
    auto canonical = [&] {
      for (const auto& p : perms) {
        std::vector<std::size_t> image(regions.size(), 0);
        for (std::size_t r = 0; r < regions.size(); ++r) image[region_index[permute_pattern(regions[r], p)]] = counts[r];
        if (image < counts) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t r, std::size_t left) -> void {
      if (found) return;
      if (r + 1 == regions.size()) {
        counts[r] = left;
        if (!canonical()) return;
        ++tested;
        if (profile_valid(regions, counts, k, y, rule)) found = counts;
        return;
      }
      for (std::size_t c = 0; c <= left && !found; ++c) {
        counts[r] = c;
        self(self, r + 1, left - c);
      }
      counts[r] = 0;
    };
    rec(rec, 0, covered);
    if (!found) continue;
    SetSystem sys;
    sys.y_size = y;
    sys.X.assign(k, {});
    std::size_t next = 1;
    for (std::size_t r = 0; r < regions.size(); ++r) {
      for (std::size_t c = 0; c < (*found)[r]; ++c, ++next) {
        for (std::size_t s = 0; s < k; ++s) {
          if (regions[r] >> s & 1u) sys.X[s].push_back(next);
        }
      }
    }
    if (!validate_set_system(sys, base).valid()) fail(ErrorCode::LogicFault, "search result failed re-validation");
    if (stats) *stats = {y, tested};
    return sys;
  }
  fail(ErrorCode::NotFound, "no set system with " + std::to_string(k) + " labels and |Y| <= " +
                                std::to_string(y_max) + " (" + log_base_name(base) + " log)");
}

}  // namespace srcalg::embed
