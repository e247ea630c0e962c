#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "srcalg/error.hpp"
#include "srcalg/linalg.hpp"

using namespace srcalg;
using namespace srcalg::linalg;
using coeff::BigInt;
using coeff::Rational;

namespace {

const CoeffRing Q = CoeffRing::rationals();

Vector qv(std::initializer_list<long> xs) {
  Vector out;
  for (long x : xs) out.push_back(Coefficient::rational(x));
  return out;
}

// Plain fraction-based Gaussian elimination, kept separate from the library.
std::size_t oracle_rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> to_rationals(const SparseMatrix& M, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<Rational>> out(M.rows(), std::vector<Rational>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [r, v] : M.column(cols[j])) out[r][j] = v.to_rational();
  }
  return out;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Coefficient& c) { return c.is_zero(); });
}

SparseMatrix random_matrix(const CoeffRing& R, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                           long spread = 3) {
  SparseMatrix M(R, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng() % 3 == 0) continue;
      M.add(r, c, Coefficient::from_int(R, static_cast<long>(rng() % (2 * spread + 1)) - spread));
    }
  }
  return M;
}

}  // namespace

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(SparseMatrix::from_dense(Q, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}, 3)).empty());
  const auto k = kernel_basis(SparseMatrix::from_dense(Q, {qv({1, 1})}, 2));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == qv({1, -1}));

  const auto M = SparseMatrix::from_dense(Q,
                                          {qv({1, 1, 0, 0, 0, 0}), qv({1, -1, 1, 1, 0, 0}), qv({0, 0, 1, -1, 1, 1}),
                                           qv({0, 0, 0, 0, 1, -1})},
                                          6);
  const auto basis = kernel_basis(M);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) CHECK(is_zero_vector(M.apply(v)));
  // (1, -1, -1, -1, 0, 0) lies in the span: adding it does not raise the rank.
  std::vector<std::vector<Rational>> span;
  for (const auto& v : basis) {
    std::vector<Rational> row;
    for (const auto& c : v) row.push_back(c.to_rational());
    span.push_back(row);
  }
  const std::size_t before = oracle_rank(span);
  span.push_back({1, -1, -1, -1, 0, 0});
  CHECK(oracle_rank(span) == before);
}

TEST_CASE("property: kernel dimension matches an independent rank over Q, Z and F_p") {
  std::mt19937_64 rng(31);
  const std::vector<CoeffRing> rings{Q, CoeffRing::integers(), CoeffRing::finite(coeff::FiniteField::prime_field(5))};
  for (const auto& R : rings) {
    CAPTURE(R.describe());
    for (int t = 0; t < 40; ++t) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
      const auto M = random_matrix(R, rows, cols, rng);
      const auto basis = kernel_basis(M);
      CHECK(rank(M) + basis.size() == cols);
      for (const auto& v : basis) {
        CHECK_FALSE(is_zero_vector(v));
        CHECK(is_zero_vector(M.apply(v)));
      }
      if (R.kind() != coeff::RingKind::Finite) {
        std::vector<std::size_t> all(cols);
        std::iota(all.begin(), all.end(), 0);
        CHECK(rank(M) == oracle_rank(to_rationals(M, all)));
      }
      if (R.kind() == coeff::RingKind::Integer) {
        for (const auto& v : basis) {
          BigInt g = 0;
          for (const auto& c : v) g = gcd(g, c.as_integer());
          CHECK(g == 1);
        }
      }
    }
  }
}

TEST_CASE("normalize_kernel_vector") {
  CHECK(normalize_kernel_vector(Q, {Coefficient::rational(0), Coefficient::rational(coeff::make_rational(-2, 3)),
                                    Coefficient::rational(coeff::make_rational(4, 9))}) == qv({0, 3, -2}));
  const auto F7 = CoeffRing::finite(coeff::FiniteField::prime_field(7));
  const auto n = normalize_kernel_vector(F7, {Coefficient::from_int(F7, 0), Coefficient::from_int(F7, 3),
                                              Coefficient::from_int(F7, 1)});
  CHECK(n[1].is_one());
  CHECK(n[2] == Coefficient::from_int(F7, 5));
}

TEST_CASE("property: first_dependency stops at the first dependent column") {
  std::mt19937_64 rng(77);
  const std::vector<CoeffRing> rings{Q, CoeffRing::integers(), CoeffRing::finite(coeff::ff_extend(2, 4))};
  for (const auto& R : rings) {
    CAPTURE(R.describe());
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
      const auto M = random_matrix(R, rows, cols, rng);
      std::vector<std::size_t> order(cols);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const auto dep = first_dependency(M, order);
      const std::size_t full_rank = rank(M);
      if (!dep) {
        CHECK(full_rank == cols);
        continue;
      }
      CHECK(is_zero_vector(M.apply(dep->vector)));
      CHECK_FALSE(is_zero_vector(dep->vector));
      // Support inside the examined prefix, and the prefix without its last
      // column is independent.
      const std::size_t k = dep->columns_examined;
      for (std::size_t i = k; i < cols; ++i) CHECK(dep->vector[order[i]].is_zero());
      CHECK_FALSE(dep->vector[order[k - 1]].is_zero());
      if (R.kind() != coeff::RingKind::Finite) {
        const std::vector<std::size_t> prefix(order.begin(), order.begin() + static_cast<long>(k - 1));
        CHECK(oracle_rank(to_rationals(M, prefix)) == k - 1);
        CHECK(dep->method != "finite-field");
      } else {
        CHECK(dep->method == "finite-field");
      }
    }
  }
}

TEST_CASE("first_dependency reconstructs large rationals across several primes") {
  // Column 2 = (p/q) col 0 + (r/s) col 1 with numerators far beyond 61 bits.
  const BigInt big("123456789012345678901234567890");
  Rational alpha(big, BigInt("98765432109876543210987")), beta(BigInt(-7) * big, BigInt(3));
  alpha.canonicalize();
  beta.canonicalize();
  SparseMatrix M(Q, 3, 3);
  const std::vector<std::vector<long>> base{{1, 2}, {3, -1}, {5, 7}};
  for (std::size_t r = 0; r < 3; ++r) {
    M.add(r, 0, Coefficient::rational(base[r][0]));
    M.add(r, 1, Coefficient::rational(base[r][1]));
    M.add(r, 2, Coefficient::rational(alpha * base[r][0] + beta * base[r][1]));
  }
  const auto dep = first_dependency(M, {0, 1, 2});
  REQUIRE(dep);
  CHECK(dep->columns_examined == 3);
  CHECK(is_zero_vector(M.apply(dep->vector)));
  CHECK(dep->vector[0].to_rational() / dep->vector[2].to_rational() == -alpha);
}

TEST_CASE("rational_reconstruct") {
  const BigInt m("2305843009213693951");  // 2^61 - 1
  for (const auto& [n, d] : std::vector<std::pair<long, long>>{{1, 3}, {-22, 7}, {355, 113}, {0, 1}, {-1, 1}}) {
    const Rational r(n, d);
    BigInt inv;
    const BigInt den(d);
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    BigInt res = (BigInt(n) * inv) % m;
    if (res < 0) res += m;
    const auto got = rational_reconstruct(res, m);
    REQUIRE(got);
    CHECK(*got == Rational(n, d));
  }
}

TEST_CASE("quadratic ring matrices are rejected") {
  CHECK_THROWS_AS(SparseMatrix(CoeffRing::quadratic(), 1, 1), Error);
}
