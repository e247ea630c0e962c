#include "srcalg/ideals.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "srcalg/error.hpp"

namespace srcalg::ideals {

using coeff::Coefficient;
using coeff::CoeffRing;

SubgroupHandle::SubgroupHandle(GroupPtr G, std::vector<GroupElement> generators)
    : G_(std::move(G)), gens_(std::move(generators)), cosets_(groups::cosets(G_, gens_)) {}

bool SubgroupHandle::is_subgroup_of(const SubgroupHandle& other) const {
  if (!groups::same_group(G_, other.G_)) fail(ErrorCode::MixedGroups, "subgroups of different groups");
  for (const auto& g : gens_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

std::string SubgroupHandle::describe() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << "> of index " << index() << " in " << G_->describe();
  return os.str();
}

std::vector<std::pair<std::size_t, Coefficient>> coset_sums(const GRElement& r, const SubgroupHandle& H) {
  if (!groups::same_group(r.ring().group, H.group())) fail(ErrorCode::MixedGroups, "element and subgroup differ");
  std::map<std::size_t, Coefficient> sums;
  for (const auto& [g, c] : r.terms()) {
    const std::size_t label = H.cosets().classify(g);
    auto it = sums.find(label);
    if (it == sums.end()) sums.emplace(label, c);
    else it->second = it->second + c;
  }
  return {sums.begin(), sums.end()};
}

bool ideal_membership_IH(const GRElement& r, const SubgroupHandle& H) {
  for (const auto& [label, sum] : coset_sums(r, H)) {
    if (!sum.is_zero()) return false;
  }
  return true;
}

GRElement project_into_IH(const GRElement& r, const SubgroupHandle& H) {
  GRElement out = r;
  for (const auto& [label, sum] : coset_sums(r, H)) {
    if (!sum.is_zero()) out.add_term(H.cosets().representatives()[label], -sum);
  }
  return out;
}

namespace {

std::vector<long> coefficient_box(long bound) {
  std::vector<long> out;
  for (long c = -bound; c <= bound; ++c) out.push_back(c);
  return out;
}

}  // namespace

ContainmentCheck refinement_check(const SubgroupHandle& H, const SubgroupHandle& K, const CoeffRing& R,
                                  unsigned radius, long bound) {
  const auto& G = H.group();
  const groups::FiniteSubset ball = groups::ball(G, radius);
  const auto& elems = ball.elements();
  std::vector<std::size_t> hl, kl;
  for (const auto& g : elems) {
    hl.push_back(H.cosets().classify(g));
    kl.push_back(K.cosets().classify(g));
  }
  const auto values = coefficient_box(bound);
  std::vector<std::size_t> digit(elems.size(), 0);
  std::vector<long> hs(H.index(), 0), ks(K.index(), 0);
  ContainmentCheck out;
  while (true) {
    std::fill(hs.begin(), hs.end(), 0);
    std::fill(ks.begin(), ks.end(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      hs[hl[i]] += values[digit[i]];
      ks[kl[i]] += values[digit[i]];
    }
    if (std::all_of(hs.begin(), hs.end(), [](long v) { return v == 0; })) {
      ++out.checked;
      if (!std::all_of(ks.begin(), ks.end(), [](long v) { return v == 0; })) {
        ++out.violations;
        if (!out.counterexample) {
          GRElement x = GRElement::zero({G, R});
          for (std::size_t i = 0; i < elems.size(); ++i) x.add_term(elems[i], Coefficient::from_int(R, values[digit[i]]));
          out.counterexample = x;
        }
      }
    }
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == values.size()) digit[pos++] = 0;
    if (pos == digit.size()) break;
  }
  return out;
}

namespace {

ContainmentCheck sampled_containment(const SubgroupHandle& small, const SubgroupHandle& big, const CoeffRing& R,
                                     std::size_t budget, std::mt19937_64& rng) {
  ContainmentCheck out = refinement_check(small, big, R, 1, 1);
  const auto& G = small.group();
  const auto pool = groups::ball(G, 3).elements();
  for (std::size_t i = 0; i < budget; ++i) {
    GRElement x = GRElement::zero({G, R});
    const std::size_t terms = 1 + rng() % 4;
    for (std::size_t t = 0; t < terms; ++t) {
      x.add_term(pool[rng() % pool.size()], Coefficient::from_int(R, static_cast<long>(rng() % 7) - 3));
    }
    x = project_into_IH(x, small);
    ++out.checked;
    if (!ideal_membership_IH(x, big)) {
      ++out.violations;
      if (!out.counterexample) out.counterexample = x;
    }
  }
  return out;
}

}  // namespace

DistinguishReport distinguish_subgroups(const SubgroupHandle& H, const SubgroupHandle& K, const CoeffRing& R,
                                        std::size_t sample_budget, std::uint64_t seed) {
  DistinguishReport rep;
  rep.h_le_k = H.is_subgroup_of(K);
  rep.k_le_h = K.is_subgroup_of(H);
  std::mt19937_64 rng(seed);
  if (rep.h_le_k) rep.h_in_k = sampled_containment(H, K, R, sample_budget, rng);
  if (rep.k_le_h) rep.k_in_h = sampled_containment(K, H, R, sample_budget, rng);
  const RingDescriptor ring{H.group(), R};
  auto separator = [&](const SubgroupHandle& A, const SubgroupHandle& B) -> std::optional<GRElement> {
    for (const auto& h : A.generators()) {
      if (!B.contains(h)) return GRElement::one(ring) - GRElement::delta(ring, h);
    }
    return std::nullopt;
  };
  rep.witness = separator(H, K);
  if (!rep.witness) rep.witness = separator(K, H);
  if (rep.witness) {
    rep.witness_in_h = ideal_membership_IH(*rep.witness, H);
    rep.witness_in_k = ideal_membership_IH(*rep.witness, K);
  }
  return rep;
}

}  // namespace srcalg::ideals
