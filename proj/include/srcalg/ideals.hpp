#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srcalg/gring.hpp"
#include "srcalg/groups.hpp"

namespace srcalg::ideals {

using gring::GRElement;
using gring::RingDescriptor;
using groups::GroupElement;
using groups::GroupPtr;

/// Finite-index subgroup given by generators, with its right coset
/// classifier.
class SubgroupHandle {
 public:
  /// InfiniteIndex for abelian generators of deficient rank, Unsupported for
  /// free groups.
  SubgroupHandle(GroupPtr G, std::vector<GroupElement> generators);

  const GroupPtr& group() const { return G_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  const groups::CosetPartition& cosets() const { return cosets_; }
  std::size_t index() const { return cosets_.count(); }
  bool contains(const GroupElement& g) const { return cosets_.in_subgroup(g); }
  /// Every generator of this subgroup lies in `other`.
  bool is_subgroup_of(const SubgroupHandle& other) const;
  std::string describe() const;

 private:
  GroupPtr G_;
  std::vector<GroupElement> gens_;
  groups::CosetPartition cosets_;
};

/// r lies in I_H iff the coefficients of r sum to zero over every right
/// coset Hx.
bool ideal_membership_IH(const GRElement& r, const SubgroupHandle& H);

/// Coefficient sums per coset label, only for cosets meeting the support.
std::vector<std::pair<std::size_t, coeff::Coefficient>> coset_sums(const GRElement& r, const SubgroupHandle& H);

/// r minus, on each coset, its coefficient sum placed at the coset
/// representative; the result always lies in I_H.
GRElement project_into_IH(const GRElement& r, const SubgroupHandle& H);

struct ContainmentCheck {
  std::size_t checked = 0;    // members of the smaller ideal examined
  std::size_t violations = 0;
  std::optional<GRElement> counterexample;
};

struct DistinguishReport {
  bool h_le_k = false;
  bool k_le_h = false;
  std::optional<ContainmentCheck> h_in_k;  // I_H within I_K, run when H <= K
  std::optional<ContainmentCheck> k_in_h;  // I_K within I_H, run when K <= H
  /// Element of exactly one of I_H, I_K; none when H = K.
  std::optional<GRElement> witness;
  bool witness_in_h = false;
  bool witness_in_k = false;
};

/// Containment on small-support elements (ball(1), coefficients in [-1, 1])
/// plus `sample_budget` seeded samples, and a separating witness
/// delta_1 - delta_h when H != K.
DistinguishReport distinguish_subgroups(const SubgroupHandle& H, const SubgroupHandle& K, const coeff::CoeffRing& R,
                                        std::size_t sample_budget, std::uint64_t seed);

/// Every element supported in ball(radius) with integer coefficients in
/// [-bound, bound] that lies in I_H is tested for membership in I_K.
ContainmentCheck refinement_check(const SubgroupHandle& H, const SubgroupHandle& K, const coeff::CoeffRing& R,
                                  unsigned radius, long bound);

}  // namespace srcalg::ideals
