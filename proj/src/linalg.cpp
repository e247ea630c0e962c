#include "srcalg/linalg.hpp"

#include <algorithm>

#include "srcalg/error.hpp"

namespace srcalg::linalg {

using coeff::BigInt;
using coeff::FiniteField;
using coeff::Rational;
using coeff::RingKind;

SparseMatrix::SparseMatrix(CoeffRing ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (ring_.kind() == RingKind::Quad) fail(ErrorCode::Unsupported, "matrices over Z[√-5]");
}

SparseMatrix SparseMatrix::from_dense(const CoeffRing& ring, const std::vector<Vector>& rows, std::size_t cols) {
  SparseMatrix M(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::InvalidArgument, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) M.add(r, c, rows[r][c]);
  }
  return M;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Coefficient& v) {
  if (r >= rows_ || c >= cols_.size()) fail(ErrorCode::InvalidArgument, "matrix index out of range");
  if (!(v.ring() == ring_)) fail(ErrorCode::MixedRings, v.ring().describe() + " vs " + ring_.describe());
  if (v.is_zero()) return;
  auto& col = cols_[c];
  auto it = col.find(r);
  if (it == col.end()) {
    col.emplace(r, v);
    return;
  }
  Coefficient s = it->second + v;
  if (s.is_zero()) col.erase(it);
  else it->second = std::move(s);
}

Coefficient SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = col.find(r);
  return it == col.end() ? Coefficient::zero(ring_) : it->second;
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> out(rows_, Vector(cols_.size(), Coefficient::zero(ring_)));
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& [r, v] : cols_[c]) out[r][c] = v;
  }
  return out;
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_.size()) fail(ErrorCode::InvalidArgument, "vector length does not match column count");
  Vector y(rows_, Coefficient::zero(ring_));
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    if (x[c].is_zero()) continue;
    for (const auto& [r, v] : cols_[c]) y[r] = y[r] + v * x[c];
  }
  return y;
}

namespace {

struct RatOps {
  using T = Rational;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
};

struct FfOps {
  using T = FiniteField::Elem;
  const FiniteField* F;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T sub(T a, T b) const { return F->sub(a, b); }
  T mul(T a, T b) const { return F->mul(a, b); }
  T inv(T a) const { return F->inv(a); }
};

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

struct ModOps {
  using T = std::uint64_t;
  std::uint64_t p;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T sub(T a, T b) const { return a >= b ? a - b : a + (p - b); }
  T mul(T a, T b) const {
    const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    if (p == kMersenne61) {
      std::uint64_t r = static_cast<std::uint64_t>(x & kMersenne61) + static_cast<std::uint64_t>(x >> 61);
      if (r >= kMersenne61) r -= kMersenne61;
      return r;
    }
    return static_cast<std::uint64_t>(x % p);
  }
  T pow(T a, std::uint64_t e) const {
    T r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  T inv(T a) const { return pow(a, p - 2); }
};

const std::vector<std::uint64_t>& modular_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = kMersenne61; out.size() < 24; c -= 2) {
      if (coeff::is_prime(c)) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

// Reduced row echelon form in place; returns pivot columns.
template <class Ops>
std::vector<std::size_t> rref(const Ops& ops, std::vector<std::vector<typename Ops::T>>& A, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < A.size(); ++c) {
    std::size_t p = r;
    while (p < A.size() && ops.is_zero(A[p][c])) ++p;
    if (p == A.size()) continue;
    std::swap(A[r], A[p]);
    const auto inv = ops.inv(A[r][c]);
    for (std::size_t k = c; k < ncols; ++k) {
      if (!ops.is_zero(A[r][k])) A[r][k] = ops.mul(A[r][k], inv);
    }
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || ops.is_zero(A[i][c])) continue;
      const auto f = A[i][c];
      for (std::size_t k = c; k < ncols; ++k) {
        if (!ops.is_zero(A[r][k])) A[i][k] = ops.sub(A[i][k], ops.mul(f, A[r][k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Ops>
std::vector<std::vector<typename Ops::T>> dense_kernel(const Ops& ops, std::vector<std::vector<typename Ops::T>> A,
                                                       std::size_t ncols) {
  const auto pivots = rref(ops, A, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename Ops::T>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Ops::T> v(ncols, ops.zero());
    v[free] = ops.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = ops.sub(ops.zero(), A[k][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> rational_dense(const SparseMatrix& M) {
  std::vector<std::vector<Rational>> A(M.rows(), std::vector<Rational>(M.cols(), 0));
  for (std::size_t c = 0; c < M.cols(); ++c) {
    for (const auto& [r, v] : M.column(c)) A[r][c] = v.to_rational();
  }
  return A;
}

std::vector<std::vector<FiniteField::Elem>> finite_dense(const SparseMatrix& M) {
  std::vector<std::vector<FiniteField::Elem>> A(M.rows(), std::vector<FiniteField::Elem>(M.cols(), 0));
  for (std::size_t c = 0; c < M.cols(); ++c) {
    for (const auto& [r, v] : M.column(c)) A[r][c] = v.as_finite();
  }
  return A;
}

Vector from_rationals(const CoeffRing& ring, const std::vector<Rational>& v) {
  return normalize_kernel_vector(ring, [&] {
    Vector out;
    for (const auto& x : v) out.push_back(Coefficient::rational(x));
    return out;
  }());
}

// Incremental column elimination. Returns the position k in `order` of the
// first dependent column together with lambda (length k + 1, lambda[k] = 1)
// such that sum_i lambda[i] * col(order[i]) = 0, or nullopt.
template <class Ops, class Entry>
std::optional<std::pair<std::size_t, std::vector<typename Ops::T>>> incremental(const Ops& ops, const SparseMatrix& M,
                                                                                 const std::vector<std::size_t>& order,
                                                                                 Entry entry) {
  using T = typename Ops::T;
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(M.rows(), none);
  std::size_t nlocal = 0;
  std::vector<std::vector<T>> vecs;
  std::vector<std::vector<T>> combos;
  std::vector<std::size_t> pivots;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    for (const auto& [r, v] : M.column(order[pos])) {
      if (local[r] == none) local[r] = nlocal++;
    }
    std::vector<T> v(nlocal, ops.zero());
    for (const auto& [r, val] : M.column(order[pos])) v[local[r]] = entry(val);
    std::vector<T> combo(pos + 1, ops.zero());
    combo[pos] = ops.one();
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      const T c = v[pivots[i]];
      if (ops.is_zero(c)) continue;
      const auto& b = vecs[i];
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (!ops.is_zero(b[k])) v[k] = ops.sub(v[k], ops.mul(c, b[k]));
      }
      const auto& cb = combos[i];
      for (std::size_t k = 0; k < cb.size(); ++k) {
        if (!ops.is_zero(cb[k])) combo[k] = ops.sub(combo[k], ops.mul(c, cb[k]));
      }
    }
    std::size_t p = 0;
    while (p < v.size() && ops.is_zero(v[p])) ++p;
    if (p == v.size()) return std::make_pair(pos, std::move(combo));
    const T inv = ops.inv(v[p]);
    for (auto& x : v) {
      if (!ops.is_zero(x)) x = ops.mul(x, inv);
    }
    for (auto& x : combo) {
      if (!ops.is_zero(x)) x = ops.mul(x, inv);
    }
    vecs.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(p);
  }
  return std::nullopt;
}

bool annihilates(const SparseMatrix& M, const std::vector<std::size_t>& order, const std::vector<Rational>& lambda) {
  std::map<std::size_t, Rational> acc;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) continue;
    for (const auto& [r, v] : M.column(order[i])) acc[r] += v.to_rational() * lambda[i];
  }
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

struct ModEntry {
  std::uint64_t p;
  std::uint64_t operator()(const Coefficient& c) const {
    const Rational q = c.to_rational();
    BigInt num = q.get_num() % BigInt(static_cast<unsigned long>(p));
    if (num < 0) num += static_cast<unsigned long>(p);
    BigInt den = q.get_den() % BigInt(static_cast<unsigned long>(p));
    if (den == 0) fail(ErrorCode::NotPrime, "denominator vanishes modulo the working prime");
    const ModOps ops{p};
    return ops.mul(static_cast<std::uint64_t>(num.get_ui()), ops.inv(static_cast<std::uint64_t>(den.get_ui())));
  }
};

BigInt to_big(std::uint64_t x) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return r;
}

}  // namespace

Vector normalize_kernel_vector(const CoeffRing& ring, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  if (ring.kind() == RingKind::Finite) {
    const auto& F = *ring.field();
    FiniteField::Elem scale = 0;
    for (const auto& x : v) {
      if (!x.is_zero()) {
        scale = F.inv(x.as_finite());
        break;
      }
    }
    for (const auto& x : v) out.push_back(Coefficient::finite(ring.field(), F.mul(x.as_finite(), scale)));
    return out;
  }
  BigInt lcm = 1;
  for (const auto& x : v) {
    const Rational q = x.to_rational();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<BigInt> ints;
  BigInt g = 0;
  int sign = 0;
  for (const auto& x : v) {
    const Rational q = x.to_rational() * lcm;
    ints.push_back(q.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    if (sign == 0 && ints.back() != 0) sign = ints.back() > 0 ? 1 : -1;
  }
  if (g == 0) g = 1;
  for (auto& n : ints) {
    n = n * sign / g;
    out.push_back(ring.kind() == RingKind::Integer ? Coefficient::integer(n) : Coefficient::rational(Rational(n)));
  }
  return out;
}

std::vector<Vector> kernel_basis(const SparseMatrix& M) {
  std::vector<Vector> out;
  if (M.ring().kind() == RingKind::Finite) {
    for (auto& v : dense_kernel(FfOps{M.ring().field().get()}, finite_dense(M), M.cols())) {
      Vector w;
      for (auto e : v) w.push_back(Coefficient::finite(M.ring().field(), e));
      out.push_back(normalize_kernel_vector(M.ring(), w));
    }
    return out;
  }
  for (auto& v : dense_kernel(RatOps{}, rational_dense(M), M.cols())) out.push_back(from_rationals(M.ring(), v));
  return out;
}

std::size_t rank(const SparseMatrix& M) {
  if (M.ring().kind() == RingKind::Finite) {
    auto A = finite_dense(M);
    return rref(FfOps{M.ring().field().get()}, A, M.cols()).size();
  }
  auto A = rational_dense(M);
  return rref(RatOps{}, A, M.cols()).size();
}

std::optional<coeff::Rational> rational_reconstruct(const BigInt& residue, const BigInt& modulus) {
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(modulus / 2).get_mpz_t());
  BigInt r0 = modulus, r1 = residue % modulus;
  if (r1 < 0) r1 += modulus;
  BigInt s0 = 0, s1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return coeff::make_rational(r1, s1);
}

std::optional<DependencyResult> first_dependency(const SparseMatrix& M, const std::vector<std::size_t>& order) {
  auto expand = [&](std::size_t k, const Vector& lambda) {
    Vector full(M.cols(), Coefficient::zero(M.ring()));
    for (std::size_t i = 0; i <= k; ++i) full[order[i]] = lambda[i];
    return full;
  };
  if (M.ring().kind() == RingKind::Finite) {
    const auto field = M.ring().field();
    auto dep = incremental(FfOps{field.get()}, M, order, [](const Coefficient& c) { return c.as_finite(); });
    if (!dep) return std::nullopt;
    Vector lambda;
    for (auto e : dep->second) lambda.push_back(Coefficient::finite(field, e));
    Vector full = normalize_kernel_vector(M.ring(), expand(dep->first, lambda));
    for (const auto& y : M.apply(full)) {
      if (!y.is_zero()) fail(ErrorCode::LogicFault, "finite-field dependency failed exact check");
    }
    return DependencyResult{std::move(full), dep->first + 1, "finite-field"};
  }

  const auto& primes = modular_primes();
  std::optional<std::pair<std::size_t, std::vector<std::uint64_t>>> first;
  std::size_t prime_index = 0;
  for (; prime_index < primes.size() && !first; ++prime_index) {
    try {
      first = incremental(ModOps{primes[prime_index]}, M, order, ModEntry{primes[prime_index]});
      if (!first) return std::nullopt;  // independent mod p implies independent over Q
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotPrime) throw;
    }
  }
  if (first) {
    const std::size_t k = first->first;
    const std::vector<std::size_t> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k + 1));
    std::vector<BigInt> residues;
    for (auto x : first->second) residues.push_back(to_big(x));
    BigInt modulus = to_big(primes[prime_index - 1]);
    for (int rounds = 0; rounds < 12; ++rounds) {
      std::vector<Rational> lambda;
      for (const auto& r : residues) {
        auto q = rational_reconstruct(r, modulus);
        if (!q) break;
        lambda.push_back(*q);
      }
      if (lambda.size() == residues.size() && annihilates(M, prefix, lambda)) {
        Vector coeffs;
        for (const auto& q : lambda) coeffs.push_back(Coefficient::rational(q));
        Vector full = normalize_kernel_vector(M.ring(), expand(k, coeffs));
        return DependencyResult{std::move(full), k + 1, "modular"};
      }
      // Bring in another prime that sees the same dependency position.
      bool extended = false;
      while (prime_index < primes.size() && !extended) {
        const std::uint64_t p = primes[prime_index++];
        try {
          auto dep = incremental(ModOps{p}, M, prefix, ModEntry{p});
          if (!dep || dep->first != k) continue;
          const BigInt P = to_big(p);
          for (std::size_t i = 0; i < residues.size(); ++i) {
            // CRT: x = r mod modulus, x = d mod P.
            BigInt inv;
            mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
            BigInt t = (to_big(dep->second[i]) - residues[i]) % P;
            if (t < 0) t += P;
            t = (t * inv) % P;
            residues[i] += modulus * t;
          }
          modulus *= P;
          extended = true;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotPrime) throw;
        }
      }
      if (!extended) break;
    }
  }

  // Exact rational elimination.
  auto dep = incremental(RatOps{}, M, order, [](const Coefficient& c) { return c.to_rational(); });
  if (!dep) return std::nullopt;
  Vector coeffs;
  for (const auto& q : dep->second) coeffs.push_back(Coefficient::rational(q));
  Vector full = normalize_kernel_vector(M.ring(), expand(dep->first, coeffs));
  return DependencyResult{std::move(full), dep->first + 1, "exact-fallback"};
}

}  // namespace srcalg::linalg
