#include <random>

#include "doctest.h"
#include "srcalg/error.hpp"
#include "srcalg/srcsolve.hpp"

using namespace srcalg;
using namespace srcalg::srcsolve;
using coeff::Coefficient;
using coeff::CoeffRing;
using groups::Group;

namespace {

GroupElement t(long k) { return GroupElement::vec({k}); }

GRElement poly(const RingDescriptor& R, std::initializer_list<std::pair<GroupElement, long>> terms) {
  GRElement x(R);
  for (const auto& [g, c] : terms) x.add_term(g, Coefficient::from_int(R.coeff, c));
  return x;
}

// 1 + t and 1 - t over Q[Z].
LinearSystem zt_system() {
  const RingDescriptor R{Group::free_abelian(1), CoeffRing::rationals()};
  return LinearSystem{R, 1, 2, {{poly(R, {{t(0), 1}, {t(1), 1}}), poly(R, {{t(0), 1}, {t(1), -1}})}}};
}

LinearSystem footnote_system(const CoeffRing& K) {
  const RingDescriptor R{Group::free(2), K};
  const auto one = GRElement::one(R);
  return LinearSystem{R, 1, 2, {{GRElement::delta(R, GroupElement::word({1})) - one,
                                 GRElement::delta(R, GroupElement::word({2})) - one}}};
}

LinearSystem random_system(const RingDescriptor& R, std::size_t m, std::size_t n, unsigned radius,
                           std::mt19937_64& rng) {
  const auto pool = groups::ball(R.group, radius).elements();
  LinearSystem sys{R, m, n, {}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<GRElement> row;
    for (std::size_t j = 0; j < n; ++j) {
      GRElement x(R);
      for (std::size_t k = 0, terms = 1 + rng() % 3; k < terms; ++k) {
        x.add_term(pool[rng() % pool.size()], Coefficient::from_int(R.coeff, static_cast<long>(rng() % 7) - 3));
      }
      row.push_back(x);
    }
    sys.a.push_back(row);
  }
  return sys;
}

}  // namespace

TEST_CASE("lift_system reproduces the worked Z example") {
  const auto sys = zt_system();
  const auto L = lift_system(sys, groups::box(sys.ring.group, 3));
  REQUIRE(L.matrix.rows() == 4);
  REQUIRE(L.matrix.cols() == 6);
  const std::vector<std::vector<long>> expected{
      {1, 1, 0, 0, 0, 0}, {1, -1, 1, 1, 0, 0}, {0, 0, 1, -1, 1, 1}, {0, 0, 0, 0, 1, -1}};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 6; ++c) CHECK(L.matrix.at(r, c) == Coefficient::rational(expected[r][c]));
  }
  CHECK(L.rows[1].element == t(1));
  CHECK(L.cols[3].element == t(1));
  CHECK(L.cols[3].index == 1);

  const auto basis = srcsolve::kernel_basis(L.matrix);
  CHECK(basis.size() == 2);
  // (1, -1, -1, -1, 0, 0) assembles to x = (1 - t, -1 - t).
  linalg::Vector kv;
  for (long v : {1, -1, -1, -1, 0, 0}) kv.push_back(Coefficient::rational(v));
  const auto sol = assemble_solution(sys.ring, 2, kv, L);
  CHECK_FALSE(sol.verified);
  CHECK(sol.x[0] == poly(sys.ring, {{t(0), 1}, {t(1), -1}}));
  CHECK(sol.x[1] == poly(sys.ring, {{t(0), -1}, {t(1), -1}}));
  CHECK(verify_solution(sys, sol.x));
  CHECK_FALSE(verify_solution(sys, {GRElement::zero(sys.ring), GRElement::zero(sys.ring)}));
}

TEST_CASE("property: lifted entries are coefficients of g f^-1") {
  std::mt19937_64 rng(5);
  const std::vector<RingDescriptor> rings{{Group::free(2), CoeffRing::rationals()},
                                          {Group::free_abelian(2), CoeffRing::integers()},
                                          {Group::symmetric(3), CoeffRing::rationals()}};
  for (const auto& R : rings) {
    CAPTURE(R.describe());
    for (int trial = 0; trial < 10; ++trial) {
      const auto sys = random_system(R, 1 + rng() % 2, 2 + rng() % 2, 1, rng);
      const auto F = groups::ball(R.group, 1);
      const auto L = lift_system(sys, F);
      CHECK(L.matrix.rows() == L.SF.size() * sys.m);
      CHECK(L.matrix.cols() == F.size() * sys.n);
      CHECK(L.SF == groups::product_set(sys.coefficient_support(), F));
      for (std::size_t r = 0; r < L.rows.size(); ++r) {
        for (std::size_t c = 0; c < L.cols.size(); ++c) {
          const auto& g = L.rows[r].element;
          const auto& f = L.cols[c].element;
          const auto want = sys.a[L.rows[r].index][L.cols[c].index].component(R.group->mul(g, R.group->inv(f)));
          CHECK(L.matrix.at(r, c) == want);
        }
      }
    }
  }
}

TEST_CASE("solve_src examples") {
  const auto rep = solve_src(zt_system(), 16);
  CHECK(rep.solution.verified);
  CHECK(rep.ratio_bound == 2);
  CHECK(rep.folner.schedule == "box");
  CHECK(rep.folner.set.size() == 2);
  CHECK(verify_solution(zt_system(), rep.solution.x));

  const RingDescriptor C2{Group::cyclic(2), CoeffRing::rationals()};
  const auto s = C2.group->generators()[0];
  const auto one_plus_s = GRElement::one(C2) + GRElement::delta(C2, s);
  const LinearSystem finite_sys{C2, 1, 2, {{one_plus_s, one_plus_s}}};
  const auto frep = solve_src(finite_sys, 4);
  CHECK(frep.folner.schedule == "whole-group");
  CHECK(frep.solution.verified);
  CHECK(finite_sys.evaluate(frep.solution.x)[0].is_zero());

  // Over F_2 there is no Folner set for the free group: balls only.
  try {
    solve_src(footnote_system(CoeffRing::finite(coeff::FiniteField::prime_field(2))), 6);
    FAIL("expected NotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFound);
  }
}

TEST_CASE("solve_src rejects square or tall systems") {
  const RingDescriptor R{Group::free_abelian(1), CoeffRing::rationals()};
  const LinearSystem square{R, 1, 1, {{GRElement::one(R)}}};
  CHECK_THROWS_AS(solve_src(square, 4), Error);
  const LinearSystem ragged{R, 1, 2, {{GRElement::one(R)}}};
  CHECK_THROWS_AS(ragged.validate(), Error);
}

TEST_CASE("truncated_kernel of the free-group system is trivial") {
  for (const auto& K : {CoeffRing::rationals(), CoeffRing::integers()}) {
    const auto sys = footnote_system(K);
    const auto r1 = truncated_kernel(sys, 1);
    CHECK(r1.cols == 10);
    CHECK(r1.rank == 10);
    const auto r2 = truncated_kernel(sys, 2);
    CHECK(r2.cols == 34);
    CHECK(r2.rank == 34);
    CHECK(r2.kernel.empty());
  }
}

TEST_CASE("truncated_kernel sees the commutative relation") {
  const RingDescriptor R{Group::free_abelian(2), CoeffRing::rationals()};
  const auto one = GRElement::one(R);
  const auto a = GRElement::delta(R, GroupElement::vec({1, 0})), b = GRElement::delta(R, GroupElement::vec({0, 1}));
  const LinearSystem sys{R, 1, 2, {{a - one, b - one}}};
  const auto rep = truncated_kernel(sys, 1);
  REQUIRE(rep.kernel.size() == 1);
  const auto& x = rep.kernel[0];
  // Proportional to (b - 1, -(a - 1)).
  const auto scale = x[0].component(GroupElement::vec({0, 1}));
  REQUIRE_FALSE(scale.is_zero());
  CHECK(x[0] == (b - one) * GRElement::term(R, GroupElement::vec({0, 0}), scale));
  CHECK(x[1] == (one - a) * GRElement::term(R, GroupElement::vec({0, 0}), scale));
  CHECK(sys.evaluate(x)[0].is_zero());

  const LinearSystem zero{R, 1, 2, {{GRElement::zero(R), GRElement::zero(R)}}};
  const auto z = truncated_kernel(zero, 1);
  CHECK(z.rank == 0);
  CHECK(z.kernel.size() == z.cols);
}

TEST_CASE("property: a kernel vector on F survives enlarging F") {
  std::mt19937_64 rng(17);
  const RingDescriptor R{Group::free_abelian(2), CoeffRing::rationals()};
  for (int trial = 0; trial < 15; ++trial) {
    const auto sys = random_system(R, 1, 2 + rng() % 2, 1, rng);
    std::size_t prev = 0;
    for (std::int64_t side = 1; side <= 4; ++side) {
      const auto L = lift_system(sys, groups::box(R.group, side));
      const std::size_t dim = srcsolve::kernel_basis(L.matrix).size();
      CHECK(dim >= prev);
      prev = dim;
    }
  }
}

TEST_CASE("property: random systems with m < n are solved and verified") {
  std::mt19937_64 rng(2024);
  const std::vector<RingDescriptor> rings{{Group::free_abelian(2), CoeffRing::rationals()},
                                          {Group::free_abelian(1), CoeffRing::integers()},
                                          {Group::free_abelian(2), CoeffRing::finite(coeff::FiniteField::prime_field(3))},
                                          {Group::symmetric(3), CoeffRing::rationals()}};
  for (const auto& R : rings) {
    CAPTURE(R.describe());
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t n = 2 + rng() % 2;
      const std::size_t m = 1 + rng() % (n - 1);
      const auto sys = random_system(R, m, n, 1, rng);
      const auto rep = solve_src(sys, 64);
      CHECK(rep.solution.verified);
      CHECK(verify_solution(sys, rep.solution.x));
      CHECK(rep.ratio_bound == coeff::make_rational(static_cast<long>(n), static_cast<long>(m)));
      if (rep.method == "trivial") continue;  // every coefficient cancelled
      CHECK(rep.folner.product_size * m < rep.folner.set.size() * n);
    }
  }
}
