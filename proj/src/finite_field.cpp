#include "srcalg/finite_field.hpp"

#include <sstream>

#include "srcalg/error.hpp"
#include "srcalg/upoly.hpp"

namespace srcalg::coeff {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Returns 0 when p^k would reach kMaxOrder.
std::uint64_t checked_power(std::uint64_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > (kMaxOrder - 1) / p) return 0;
    q *= p;
  }
  return q;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = checked_power(p_, k_);
  pow_p_.resize(k_ + 1);
  pow_p_[0] = 1;
  for (unsigned i = 1; i < k_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
  pow_p_[k_] = q_;
}

FieldPtr FiniteField::prime_field(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxOrder) fail(ErrorCode::Unsupported, "characteristic too large");
  return FieldPtr(new FiniteField(p, {0, 1}));
}

FieldPtr FiniteField::create(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (modulus.size() < 2) fail(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
  if (modulus.back() != 1) fail(ErrorCode::InvalidArgument, "modulus must be monic");
  for (auto c : modulus) {
    if (c >= p) fail(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  }
  if (checked_power(p, static_cast<unsigned>(modulus.size() - 1)) == 0) {
    fail(ErrorCode::Unsupported, "field order must stay below 2^62");
  }
  if (!is_irreducible(p, modulus)) {
    fail(ErrorCode::InvalidArgument, poly_to_string(modulus) + " is reducible over F_" + std::to_string(p));
  }
  auto* f = new FiniteField(p, std::move(modulus));
  if (f->k_ > 1 && f->q_ <= kTableLimit) f->build_tables();
  return FieldPtr(f);
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::from_digits(std::span<const std::uint64_t> digits) const {
  if (digits.size() > k_) fail(ErrorCode::InvalidArgument, "too many coefficients for " + describe());
  Elem e = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= p_) fail(ErrorCode::InvalidArgument, "coefficient out of range for " + describe());
    e += digits[i] * pow_p_[i];
  }
  return e;
}

std::vector<std::uint64_t> FiniteField::digits(Elem e) const {
  std::vector<std::uint64_t> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = e % p_;
    e /= p_;
  }
  return d;
}

FiniteField::Elem FiniteField::generator() const {
  if (k_ == 1) return neg(modulus_[0] % p_);
  return p_;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Elem r = 0;
  for (unsigned i = 0; i < k_; ++i) {
    Elem d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem r = 0;
  for (unsigned i = 0; i < k_; ++i) {
    Elem d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
    a /= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul_slow(Elem a, Elem b) const {
  auto da = digits(a);
  auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
    }
  }
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    std::uint64_t c = prod[i];
    if (c != 0) {
      for (unsigned j = 0; j < k_; ++j) {
        std::uint64_t t = mulmod(c, modulus_[j], p_);
        prod[i - k_ + j] = (prod[i - k_ + j] + p_ - t) % p_;
      }
    }
    prod[i] = 0;
  }
  Elem r = 0;
  for (unsigned i = 0; i < k_; ++i) r += prod[i] * pow_p_[i];
  return r;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (k_ == 1) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) {
    std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_slow(a, b);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in " + describe());
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

void FiniteField::build_tables() {
  const std::uint64_t n = q_ - 1;
  auto factors = prime_factors(n);
  Elem g = 0;
  for (Elem cand = 2; cand < q_; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (pow(cand, n / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) fail(ErrorCode::LogicFault, "no primitive element in " + describe());
  exp_.resize(n);
  std::vector<std::uint32_t> log(q_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur);
    log[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(cur, g);
  }
  log_ = std::move(log);
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (k_ > 1) os << "^" << k_ << ") = F_" << p_ << "[x]/(" << poly_to_string(modulus_) << ")";
  else os << ")";
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly) {
  auto Fp = FiniteField::prime_field(p);
  UPoly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  upoly::trim(f);
  const int d = upoly::degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  f = upoly::monic(*Fp, f);
  const UPoly x = upoly::x_poly();
  UPoly h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = upoly::powmod(*Fp, h, p, f);
    UPoly g = upoly::gcd(*Fp, f, upoly::sub(*Fp, h, x));
    if (upoly::degree(g) > 0) return false;
  }
  return true;
}

FieldPtr ff_extend(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  const std::uint64_t q = checked_power(p, k);
  if (q == 0) fail(ErrorCode::Unsupported, "field order must stay below 2^62");
  for (std::uint64_t n = 0; n < q; ++n) {
    std::vector<std::uint64_t> cand(k + 1);
    std::uint64_t t = n;
    for (unsigned i = 0; i < k; ++i) {
      cand[i] = t % p;
      t /= p;
    }
    cand[k] = 1;
    if (is_irreducible(p, cand)) return FiniteField::create(p, std::move(cand));
  }
  fail(ErrorCode::LogicFault, "no irreducible polynomial found");
}

std::string poly_to_string(const std::vector<std::uint64_t>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const auto c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace srcalg::coeff
