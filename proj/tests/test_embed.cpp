#include <bit>
#include <cmath>
#include <random>

#include "doctest.h"
#include "srcalg/error.hpp"
#include "srcalg/mpoly.hpp"
#include "srcalg/theta.hpp"

using namespace srcalg;
using namespace srcalg::embed;
using coeff::Coefficient;
using coeff::CoeffRing;
using groups::Group;

namespace {

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t y = lo; y <= hi; ++y) out.push_back(y);
  return out;
}

SetSystem reference_system() { return SetSystem{10, {range(1, 6), range(4, 9)}}; }

// Independent validity test for two labels on bitmask subsets of {0..y-1}.
bool brute_valid_pair(unsigned y, std::uint32_t x0, std::uint32_t x1) {
  const std::uint32_t all = (1u << y) - 1;
  if (static_cast<unsigned>(std::popcount((x0 | x1) & all)) != y - 1) return false;
  const double factor = 1.0 + std::log(2.0);
  auto ok = [&](std::uint32_t set, unsigned t) { return std::popcount(set) * factor * t >= y; };
  return ok(x0, 1) && ok(x1, 1) && ok(x0 & ~x1, 2) && ok(x1 & ~x0, 2);
}

struct Reference {
  SetSystem sys = reference_system();
  FieldPtr K = FiniteField::prime_field(2);
  ConstructStats stats;
  AlphaFamily fam;
  Reference() : fam(construct_alphas(sys, K, 0, &stats)) {}
};

const Reference& reference() {
  static const Reference r;
  return r;
}

ThetaMap reference_theta() {
  const auto G = Group::free(2);
  return build_theta(reference().fam, reference().sys, {GroupElement::word({1}), GroupElement::word({2})}, G);
}

bool is_zero_vector(const std::vector<GRElement>& v) {
  return std::all_of(v.begin(), v.end(), [](const GRElement& x) { return x.is_zero(); });
}

std::vector<GRElement> random_input(const RingDescriptor& R, std::size_t len, std::mt19937_64& rng) {
  const auto pool = groups::ball(R.group, 1).elements();
  const auto& L = *R.coeff.field();
  std::vector<GRElement> u;
  for (std::size_t i = 0; i < len; ++i) {
    GRElement x(R);
    for (std::size_t k = 0, n = rng() % 3; k < n; ++k) {
      x.add_term(pool[rng() % pool.size()], Coefficient::finite(R.coeff.field(), rng() % L.order()));
    }
    u.push_back(x);
  }
  return u;
}

}  // namespace

TEST_CASE("x_restricted examples") {
  const auto sys = reference_system();
  CHECK(x_restricted(sys, 0, 0b01) == range(1, 6));
  CHECK(x_restricted(sys, 0, 0b11) == range(1, 3));
  CHECK(x_restricted(sys, 1, 0b11) == range(7, 9));
  CHECK(sys.uncovered() == std::vector<std::size_t>{10});
}

TEST_CASE("validate_set_system examples") {
  const auto rep = validate_set_system(reference_system());
  CHECK(rep.valid());
  CHECK(rep.union_size == 9);
  CHECK(rep.checks.size() == 4);

  const SetSystem full{10, {range(1, 10), range(1, 10)}};
  const auto bad = validate_set_system(full);
  CHECK_FALSE(bad.union_ok);
  CHECK_FALSE(bad.valid());
}

TEST_CASE("search_set_system finds the smallest |Y| for two labels") {
  SearchStats stats;
  const auto sys = search_set_system(2, 12, LogBase::Natural, &stats);
  CHECK(sys.y_size == 10);
  CHECK(stats.y_size == 10);
  CHECK(stats.profiles_tested > 0);
  CHECK(validate_set_system(sys).valid());

  // Exhaustive oracle over all pairs of subsets.
  unsigned smallest = 0;
  for (unsigned y = 2; y <= 10 && smallest == 0; ++y) {
    for (std::uint32_t x0 = 0; x0 < (1u << y) && smallest == 0; ++x0) {
      for (std::uint32_t x1 = 0; x1 < (1u << y); ++x1) {
        if (brute_valid_pair(y, x0, x1)) {
          smallest = y;
          break;
        }
      }
    }
  }
  CHECK(smallest == 10);

  CHECK_THROWS_AS(search_set_system(2, 3), Error);
  CHECK(validate_set_system(search_set_system(2, 12, LogBase::Two), LogBase::Two).valid());
}

TEST_CASE("property: validate_set_system agrees with the brute-force rule") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 400; ++t) {
    const unsigned y = 2 + rng() % 9;
    const std::uint32_t x0 = static_cast<std::uint32_t>(rng()) & ((1u << y) - 1);
    const std::uint32_t x1 = static_cast<std::uint32_t>(rng()) & ((1u << y) - 1);
    SetSystem sys{y, {{}, {}}};
    for (unsigned i = 0; i < y; ++i) {
      if (x0 >> i & 1u) sys.X[0].push_back(i + 1);
      if (x1 >> i & 1u) sys.X[1].push_back(i + 1);
    }
    CHECK(validate_set_system(sys).valid() == brute_valid_pair(y, x0, x1));
  }
}

TEST_CASE("find_point examples") {
  const auto F3 = FiniteField::prime_field(3);
  MPoly f(F3, 1);
  f.add_term({2}, 1);
  f.add_term({0}, 1);
  for (FiniteField::Elem c = 0; c < 3; ++c) CHECK(f.eval({c}) != 0);  // no root in F_3
  const auto r = find_point(f, 0);
  CHECK(r.field->order() == 9);
  const auto& L = *r.field;
  CHECK(L.add(L.mul(r.point[0], r.point[0]), 1) == 0);

  const auto F7 = FiniteField::prime_field(7);
  const auto lin = find_point(MPoly::variable(F7, 1, 0), 5);
  CHECK(lin.field->order() == 7);
  CHECK(lin.point == std::vector<FiniteField::Elem>{5});

  const auto F2 = FiniteField::prime_field(2);
  const auto prod = find_point(MPoly::variable(F2, 2, 0) * MPoly::variable(F2, 2, 1), 1);
  CHECK(prod.field->order() == 2);
  CHECK(prod.point == std::vector<FiniteField::Elem>{1, 1});

  try {
    find_point(MPoly::constant(F2, 2, 1), 1);
    FAIL("expected ConstantPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConstantPolynomial);
  }
}

TEST_CASE("property: find_point hits the requested value") {
  std::mt19937_64 rng(12);
  for (const std::uint64_t p : {2u, 3u, 5u}) {
    const auto K = FiniteField::prime_field(p);
    for (int t = 0; t < 25; ++t) {
      const std::size_t nv = 1 + rng() % 3;
      MPoly f(K, nv);
      for (int k = 0; k < 3; ++k) {
        Monomial m(nv);
        for (auto& e : m) e = rng() % 3;
        f.add_term(m, rng() % p);
      }
      if (f.is_constant()) continue;
      const FiniteField::Elem b = rng() % p;
      const auto res = find_point(f, b);
      // Push f through the embedding tower and evaluate in L.
      MPoly g = f;
      for (const auto& e : res.tower) g = g.mapped(e);
      CHECK(g.eval(res.point) == res.map_in(b));
    }
  }
}

TEST_CASE("construct_alphas and verify_alphas on the reference system") {
  const auto& ref = reference();
  CHECK(ref.stats.families == 16);
  CHECK(ref.stats.admissible == 4);
  CHECK(ref.stats.field_order > 2 * ref.stats.degree_sum);
  const auto rep = verify_alphas(ref.fam, ref.sys);
  CHECK(rep.support_ok);
  CHECK(rep.all_pass());
  for (const auto& fam : enumerate_families(ref.sys)) {
    if (fam.admissible) CHECK(selection_determinant(ref.fam, fam.selection()) != 0);
  }
  // Same seed, same matrices.
  CHECK(construct_alphas(ref.sys, ref.K, 0).A == ref.fam.A);
}

TEST_CASE("verify_alphas rejects zero matrices and localizes perturbations") {
  const auto& ref = reference();
  AlphaFamily zero = ref.fam;
  for (auto& A : zero.A) {
    for (auto& row : A) std::fill(row.begin(), row.end(), 0);
  }
  const auto zrep = verify_alphas(zero, ref.sys);
  CHECK(zrep.support_ok);
  CHECK_FALSE(zrep.all_pass());

  AlphaFamily outside = ref.fam;
  outside.A[0][9][0] = 1;  // y = 10 lies outside X_0
  CHECK_FALSE(verify_alphas(outside, ref.sys).support_ok);

  // Wipe rows y = 1..3 of A_0: only families that stack one of them can fail.
  AlphaFamily hit = ref.fam;
  for (std::size_t y = 0; y < 3; ++y) std::fill(hit.A[0][y].begin(), hit.A[0][y].end(), 0);
  const auto hrep = verify_alphas(hit, ref.sys);
  const auto families = enumerate_families(ref.sys);
  REQUIRE(families.size() == hrep.families.size());
  bool some_fail = false;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const bool uses = std::any_of(families[i].rows.begin(), families[i].rows.end(),
                                  [](const RowRef& r) { return r.s == 0 && r.y <= 3; });
    if (!hrep.families[i].pass) {
      CHECK(uses);
      some_fail = true;
    }
  }
  CHECK(some_fail);
}

TEST_CASE("theta on the reference instance") {
  const auto theta = reference_theta();
  const auto& R = theta.ring;
  const std::vector<GRElement> zero(10, GRElement::zero(R));
  CHECK(is_zero_vector(theta_apply(theta, zero)));

  // Basis input e_{y'} delta_1 lands on column y' of each A_s, shifted by b_s.
  for (std::size_t yp = 0; yp < 10; ++yp) {
    std::vector<GRElement> u = zero;
    u[yp] = GRElement::one(R);
    const auto out = theta_apply(theta, u);
    for (std::size_t y = 0; y < 10; ++y) {
      for (std::size_t s = 0; s < 2; ++s) {
        CHECK(out[y].component(theta.b[s]).as_finite() == theta.fam.A[s][y][yp]);
      }
      CHECK(out[y].size() <= 2);
    }
    CHECK(out[9].is_zero());
  }

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto u = random_input(R, 10, rng), v = random_input(R, 10, rng);
    const auto r = random_input(R, 1, rng)[0];
    std::vector<GRElement> sum, ur;
    for (std::size_t y = 0; y < 10; ++y) {
      sum.push_back(u[y] + v[y]);
      ur.push_back(u[y] * r);
    }
    const auto tu = theta_apply(theta, u), tv = theta_apply(theta, v);
    const auto tsum = theta_apply(theta, sum), tur = theta_apply(theta, ur);
    for (std::size_t y = 0; y < 10; ++y) {
      CHECK(tsum[y] == tu[y] + tv[y]);
      CHECK(tur[y] == tu[y] * r);
    }
    CHECK(tu[9].is_zero());
  }
}

TEST_CASE("theta_certify is injective on small balls") {
  const auto theta = reference_theta();
  const auto c0 = theta_certify(theta, 0);
  CHECK(c0.injective);
  CHECK(c0.cols == 10);
  CHECK(c0.rank == 10);
  CHECK(c0.rows == 20);
  const auto c1 = theta_certify(theta, 1);
  CHECK(c1.injective);
  CHECK(c1.cols == 50);
  CHECK(c1.rank == 50);
  CHECK(c1.rows == 90);
  CHECK(c1.missing == std::vector<std::size_t>{10});
  CHECK(c1.missing_rows_zero);
  CHECK(c1.witness.empty());
}

TEST_CASE("a degenerate family yields a verified kernel witness") {
  auto fam = reference().fam;
  for (auto& row : fam.A[1]) std::fill(row.begin(), row.end(), 0);
  const auto theta = build_theta(fam, reference().sys, {GroupElement::word({1}), GroupElement::word({2})},
                                 Group::free(2));
  const auto cert = theta_certify(theta, 0);
  CHECK_FALSE(cert.injective);
  CHECK(cert.rank <= 6);
  REQUIRE(cert.witness.size() == 10);
  CHECK_FALSE(is_zero_vector(cert.witness));
  CHECK(cert.witness_verified);
  CHECK(is_zero_vector(theta_apply(theta, cert.witness)));
}

TEST_CASE("build_theta rejects repeated labels") {
  const auto G = Group::free(2);
  CHECK_THROWS_AS(build_theta(reference().fam, reference().sys, {GroupElement::word({1}), GroupElement::word({1})}, G),
                  Error);
  CHECK_THROWS_AS(build_theta(reference().fam, reference().sys, {GroupElement::word({1})}, G), Error);
}

TEST_CASE("footnote_embedding examples") {
  const RingDescriptor R{Group::free(2), CoeffRing::integers()};
  const auto one = GRElement::one(R);
  const auto a = GRElement::delta(R, GroupElement::word({1})), b = GRElement::delta(R, GroupElement::word({2}));
  CHECK(footnote_embedding(one, GRElement::zero(R)) == a - one);
  CHECK(footnote_embedding(GRElement::zero(R), one) == b - one);
  // The commutative solution (b - 1, -(a - 1)) is not in the kernel.
  const auto img = footnote_embedding(b - one, one - a);
  GRElement ab_minus_ba(R);
  ab_minus_ba.add_term(GroupElement::word({1, 2}), Coefficient::integer(1));
  ab_minus_ba.add_term(GroupElement::word({2, 1}), Coefficient::integer(-1));
  CHECK(img == ab_minus_ba);
  const auto sys = footnote_system(R);
  CHECK(sys.m == 1);
  CHECK(sys.n == 2);
  CHECK(sys.evaluate({b - one, one - a})[0] == img);
}

TEST_CASE("extend_scalars examples") {
  const RingDescriptor ZZ{Group::free_abelian(1), CoeffRing::integers()};
  const auto id = extend_scalars({{Coefficient::integer(1), Coefficient::integer(0)},
                                  {Coefficient::integer(0), Coefficient::integer(1)}},
                                 ZZ);
  CHECK(id[0][0] == GRElement::one(ZZ));
  CHECK(id[0][1].is_zero());
  const auto two = extended_system({{Coefficient::integer(2)}}, ZZ);
  const auto x = GRElement::one(ZZ) + GRElement::delta(ZZ, GroupElement::vec({3}));
  CHECK(two.evaluate({x})[0] == x + x);

  // An injective 2 x 3 pattern over Q stays injective over Q[F_2] on ball(2).
  const RingDescriptor QF{Group::free(2), CoeffRing::rationals()};
  const std::vector<linalg::Vector> M{
      {Coefficient::rational(1), Coefficient::rational(0)},
      {Coefficient::rational(0), Coefficient::rational(1)},
      {Coefficient::rational(1), Coefficient::rational(1)},
  };
  const auto rep = srcsolve::truncated_kernel(extended_system(M, QF), 2);
  CHECK(rep.kernel.empty());
  CHECK(rep.rank == rep.cols);
}
