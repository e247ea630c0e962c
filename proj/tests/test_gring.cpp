#include <random>

#include "doctest.h"
#include "srcalg/error.hpp"
#include "srcalg/gring.hpp"

using namespace srcalg;
using namespace srcalg::gring;
using groups::Group;

namespace {

GroupElement w(const groups::Word& x) { return GroupElement::word(x); }

GRElement random_element(const RingDescriptor& R, const std::vector<GroupElement>& pool, std::mt19937_64& rng) {
  GRElement x(R);
  for (std::size_t i = 0, n = rng() % 5; i < n; ++i) {
    x.add_term(pool[rng() % pool.size()], Coefficient::from_int(R.coeff, static_cast<long>(rng() % 9) - 4));
  }
  return x;
}

}  // namespace

TEST_CASE("gr_mul examples over Z F_2") {
  const RingDescriptor R{Group::free(2), coeff::CoeffRing::integers()};
  const auto one = GRElement::one(R);
  const auto a = GRElement::delta(R, w({1})), b = GRElement::delta(R, w({2}));
  const auto prod = gr_mul(one + a, one + b);
  GRElement expected(R);
  for (const auto& g : {w({}), w({1}), w({2}), w({1, 2})}) expected.add_term(g, Coefficient::integer(1));
  CHECK(prod == expected);
  CHECK(GRElement::delta(R, w({1, 2})) * GRElement::delta(R, w({-2, 1})) == GRElement::delta(R, w({1, 1})));

  const auto comm = (a - one) * (b - one) - (b - one) * (a - one);
  GRElement ab_minus_ba(R);
  ab_minus_ba.add_term(w({1, 2}), Coefficient::integer(1));
  ab_minus_ba.add_term(w({2, 1}), Coefficient::integer(-1));
  CHECK(comm == ab_minus_ba);
  CHECK_FALSE(comm.is_zero());
}

TEST_CASE("homogeneous_component and support examples") {
  const RingDescriptor R{Group::free(2), coeff::CoeffRing::integers()};
  const auto x = GRElement::term(R, w({1}), Coefficient::integer(2)) + GRElement::term(R, w({2}), Coefficient::integer(3));
  CHECK(homogeneous_component(x, w({1})) == Coefficient::integer(2));
  CHECK(homogeneous_component(GRElement::zero(R), w({1})).is_zero());
  const auto one = GRElement::one(R);
  const auto s = support((one + GRElement::delta(R, w({1}))) * (one + GRElement::delta(R, w({2}))));
  CHECK(s.elements() == std::vector<GroupElement>{w({}), w({1}), w({2}), w({1, 2})});
}

TEST_CASE("zero coefficients are never stored") {
  const RingDescriptor R{Group::free_abelian(1), coeff::CoeffRing::rationals()};
  const auto t = GroupElement::vec({1});
  GRElement x(R);
  x.add_term(t, Coefficient::rational(3));
  x.add_term(t, Coefficient::rational(-3));
  CHECK(x.is_zero());
  CHECK(x.size() == 0);
  CHECK((GRElement::delta(R, t) - GRElement::delta(R, t)).terms().empty());
}

TEST_CASE("mixed rings and groups are rejected") {
  const RingDescriptor Q{Group::free(2), coeff::CoeffRing::rationals()};
  const RingDescriptor Z{Group::free(2), coeff::CoeffRing::integers()};
  const RingDescriptor Q2{Group::free_abelian(2), coeff::CoeffRing::rationals()};
  CHECK_THROWS_AS(GRElement::one(Q) + GRElement::one(Z), Error);
  CHECK_THROWS_AS(GRElement::one(Q) * GRElement::one(Q2), Error);
  CHECK_THROWS_AS(GRElement::delta(Q, GroupElement::vec({1, 0})), Error);
}

TEST_CASE("property: ring axioms and support bounds on random elements") {
  std::mt19937_64 rng(99);
  const std::vector<RingDescriptor> rings{
      {Group::free(2), coeff::CoeffRing::rationals()},
      {Group::free_abelian(2), coeff::CoeffRing::integers()},
      {Group::symmetric(3), coeff::CoeffRing::finite(coeff::FiniteField::prime_field(7))},
      {Group::free(2), coeff::CoeffRing::finite(coeff::ff_extend(2, 3))},
  };
  for (const auto& R : rings) {
    CAPTURE(R.describe());
    const auto pool = groups::ball(R.group, 2).elements();
    for (int t = 0; t < 60; ++t) {
      const auto x = random_element(R, pool, rng), y = random_element(R, pool, rng), z = random_element(R, pool, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * GRElement::one(R) == x);
      CHECK(GRElement::one(R) * x == x);
      CHECK(x - x == GRElement::zero(R));
      if (!x.is_zero() && !y.is_zero()) {
        const auto bound = groups::product_set(x.support(), y.support());
        for (const auto& g : (x * y).support()) CHECK(bound.contains(g));
      }
      // Grading law on single terms: delta_g delta_h is supported on {gh}.
      const auto g = pool[rng() % pool.size()], h = pool[rng() % pool.size()];
      const auto c = Coefficient::from_int(R.coeff, 3);
      const auto prod = GRElement::term(R, g, c) * GRElement::delta(R, h);
      CHECK(prod.support().elements() == std::vector<GroupElement>{R.group->mul(g, h)});
    }
  }
}

TEST_CASE("convolution agrees with a direct double sum") {
  std::mt19937_64 rng(4);
  const RingDescriptor R{Group::free(2), coeff::CoeffRing::integers()};
  const auto pool = groups::ball(R.group, 2).elements();
  for (int t = 0; t < 30; ++t) {
    const auto x = random_element(R, pool, rng), y = random_element(R, pool, rng);
    const auto xy = x * y;
    for (const auto& g : groups::ball(R.group, 4)) {
      Coefficient sum = Coefficient::zero(R.coeff);
      for (const auto& [h, ch] : x.terms()) {
        for (const auto& [k, ck] : y.terms()) {
          if (R.group->mul(h, k) == g) sum = sum + ch * ck;
        }
      }
      CHECK(xy.component(g) == sum);
    }
  }
}

TEST_CASE("printing is canonical") {
  const RingDescriptor R{Group::free(2), coeff::CoeffRing::integers()};
  const auto x = GRElement::term(R, w({2}), Coefficient::integer(-1)) + GRElement::term(R, w({1}), Coefficient::integer(2));
  CHECK(x.to_string() == GRElement::term(R, w({1}), Coefficient::integer(2)).to_string() + " + " +
                             GRElement::term(R, w({2}), Coefficient::integer(-1)).to_string());
  CHECK(GRElement::zero(R).to_string() == "0");
}
