#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "srcalg/error.hpp"
#include "srcalg/ideals.hpp"

using namespace srcalg;
using namespace srcalg::ideals;
using coeff::Coefficient;
using coeff::CoeffRing;
using groups::Group;

namespace {

GroupElement t(long k) { return GroupElement::vec({k}); }

const RingDescriptor& ZZ() {
  static const RingDescriptor R{Group::free_abelian(1), CoeffRing::integers()};
  return R;
}

SubgroupHandle multiples(long n) { return SubgroupHandle(ZZ().group, {t(n)}); }

GRElement zpoly(std::initializer_list<std::pair<long, long>> terms) {
  GRElement x(ZZ());
  for (const auto& [e, c] : terms) x.add_term(t(e), Coefficient::integer(c));
  return x;
}

// For nZ the right cosets are residues mod n.
bool oracle_in_multiples(const GRElement& r, long n) {
  std::map<long, coeff::BigInt> sums;
  for (const auto& [g, c] : r.terms()) {
    const long e = static_cast<long>(g.as_vec()[0]);
    sums[((e % n) + n) % n] += c.as_integer();
  }
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

// Finite case: close the generators, then sum over {h x}.
bool oracle_in_finite(const GRElement& r, const GroupPtr& G, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> H{G->identity()};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& h : std::vector<GroupElement>(H.begin(), H.end())) {
      for (const auto& g : gens) grew |= H.insert(G->mul(h, g)).second;
    }
  }
  for (const auto& x : G->elements()) {
    Coefficient sum = Coefficient::zero(r.ring().coeff);
    for (const auto& h : H) sum = sum + r.component(G->mul(h, x));
    if (!sum.is_zero()) return false;
  }
  return true;
}

GRElement random_element(const RingDescriptor& R, const std::vector<GroupElement>& pool, std::mt19937_64& rng) {
  GRElement x(R);
  for (std::size_t k = 0, n = rng() % 5; k < n; ++k) {
    x.add_term(pool[rng() % pool.size()], Coefficient::from_int(R.coeff, static_cast<long>(rng() % 5) - 2));
  }
  return x;
}

}  // namespace

TEST_CASE("membership examples in Z") {
  const auto H = multiples(2);
  CHECK(H.index() == 2);
  CHECK(ideal_membership_IH(zpoly({{0, 1}, {2, -1}}), H));
  CHECK_FALSE(ideal_membership_IH(zpoly({{0, 1}, {1, -1}}), H));
  CHECK(ideal_membership_IH(GRElement::zero(ZZ()), H));
  const auto G = multiples(1);
  CHECK(G.index() == 1);
  CHECK(ideal_membership_IH(zpoly({{0, 1}, {5, -1}}), G));
  CHECK_FALSE(ideal_membership_IH(GRElement::one(ZZ()), G));
}

TEST_CASE("subgroups of infinite index or in free groups are rejected") {
  try {
    SubgroupHandle(Group::free_abelian(2), {GroupElement::vec({1, 0})});
    FAIL("expected InfiniteIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteIndex);
  }
  CHECK_THROWS_AS(SubgroupHandle(Group::free(2), {GroupElement::word({1})}), Error);
}

TEST_CASE("property: membership agrees with direct coset sums") {
  std::mt19937_64 rng(41);
  const auto pool = groups::ball(ZZ().group, 6).elements();
  for (const long n : {1, 2, 3, 6}) {
    const auto H = multiples(n);
    for (int k = 0; k < 200; ++k) {
      const auto r = random_element(ZZ(), pool, rng);
      CHECK(ideal_membership_IH(r, H) == oracle_in_multiples(r, n));
      const auto p = project_into_IH(r, H);
      CHECK(ideal_membership_IH(p, H));
      CHECK(oracle_in_multiples(p, n));
    }
  }

  const RingDescriptor S3{Group::symmetric(3), CoeffRing::rationals()};
  const auto& G = S3.group;
  const std::vector<std::vector<GroupElement>> subgroup_gens{
      {GroupElement::perm({1, 0, 2})}, {GroupElement::perm({1, 2, 0})}, {}, {GroupElement::perm({0, 2, 1})}};
  for (const auto& gens : subgroup_gens) {
    const SubgroupHandle H(G, gens);
    for (int k = 0; k < 200; ++k) {
      const auto r = random_element(S3, G->elements(), rng);
      CHECK(ideal_membership_IH(r, H) == oracle_in_finite(r, G, gens));
    }
  }
}

TEST_CASE("property: I_H is a right ideal but not always a left one") {
  std::mt19937_64 rng(8);
  const RingDescriptor S3{Group::symmetric(3), CoeffRing::integers()};
  const auto& G = S3.group;
  const SubgroupHandle H(G, {GroupElement::perm({1, 0, 2})});
  bool left_failed = false;
  for (int k = 0; k < 200; ++k) {
    const auto r = project_into_IH(random_element(S3, G->elements(), rng), H);
    const auto s = random_element(S3, G->elements(), rng);
    CHECK(ideal_membership_IH(r * s, H));
    left_failed |= !ideal_membership_IH(s * r, H);
  }
  // H is not normal in S_3.
  CHECK(left_failed);
}

TEST_CASE("refinement: H <= K gives I_H within I_K") {
  const auto rep = refinement_check(multiples(6), multiples(2), CoeffRing::integers(), 2, 2);
  CHECK(rep.checked > 0);
  CHECK(rep.violations == 0);

  // The reverse direction fails with a counterexample in I_2Z outside I_6Z.
  const auto rev = refinement_check(multiples(2), multiples(6), CoeffRing::integers(), 2, 1);
  CHECK(rev.violations > 0);
  REQUIRE(rev.counterexample);
  CHECK(oracle_in_multiples(*rev.counterexample, 2));
  CHECK_FALSE(oracle_in_multiples(*rev.counterexample, 6));

  const RingDescriptor S3{Group::symmetric(3), CoeffRing::integers()};
  const SubgroupHandle trivial(S3.group, {});
  const SubgroupHandle A3(S3.group, {GroupElement::perm({1, 2, 0})});
  CHECK(trivial.is_subgroup_of(A3));
  CHECK(refinement_check(trivial, A3, CoeffRing::integers(), 3, 1).violations == 0);
}

TEST_CASE("distinguish_subgroups separates distinct subgroups") {
  const auto rep = distinguish_subgroups(multiples(2), multiples(3), CoeffRing::integers(), 50, 0);
  CHECK_FALSE(rep.h_le_k);
  CHECK_FALSE(rep.k_le_h);
  REQUIRE(rep.witness);
  CHECK(rep.witness_in_h != rep.witness_in_k);
  CHECK(*rep.witness == zpoly({{0, 1}, {2, -1}}));
  CHECK(rep.witness_in_h);

  const auto nested = distinguish_subgroups(multiples(6), multiples(2), CoeffRing::integers(), 50, 1);
  CHECK(nested.h_le_k);
  CHECK_FALSE(nested.k_le_h);
  REQUIRE(nested.h_in_k);
  CHECK(nested.h_in_k->violations == 0);
  REQUIRE(nested.witness);
  CHECK(nested.witness_in_k);
  CHECK_FALSE(nested.witness_in_h);
  CHECK(oracle_in_multiples(*nested.witness, 2));
  CHECK_FALSE(oracle_in_multiples(*nested.witness, 6));

  const auto same = distinguish_subgroups(multiples(4), SubgroupHandle(ZZ().group, {t(-4), t(8)}),
                                          CoeffRing::integers(), 20, 2);
  CHECK(same.h_le_k);
  CHECK(same.k_le_h);
  CHECK_FALSE(same.witness);

  const RingDescriptor S3{Group::symmetric(3), CoeffRing::rationals()};
  const SubgroupHandle H(S3.group, {GroupElement::perm({1, 0, 2})}), K(S3.group, {GroupElement::perm({1, 2, 0})});
  const auto s3 = distinguish_subgroups(H, K, CoeffRing::rationals(), 50, 3);
  REQUIRE(s3.witness);
  CHECK(s3.witness_in_h == oracle_in_finite(*s3.witness, S3.group, H.generators()));
  CHECK(s3.witness_in_k == oracle_in_finite(*s3.witness, S3.group, K.generators()));
  CHECK(s3.witness_in_h != s3.witness_in_k);
}
