#include "srcalg/upoly.hpp"

#include "srcalg/error.hpp"

namespace srcalg::coeff {
namespace upoly {

using Elem = FiniteField::Elem;

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly add(const FiniteField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem x = i < a.size() ? a[i] : 0;
    Elem y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  trim(r);
  return r;
}

UPoly sub(const FiniteField& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem x = i < a.size() ? a[i] : 0;
    Elem y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  trim(r);
  return r;
}

UPoly mul(const FiniteField& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

UPoly scale(const FiniteField& F, const UPoly& a, Elem c) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const FiniteField& F, const UPoly& a, const UPoly& b) {
  if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {UPoly{}, r};
  const Elem lead_inv = F.inv(b.back());
  UPoly q(r.size() - b.size() + 1, 0);
  for (std::size_t top = r.size(); top >= b.size(); --top) {
    const std::size_t i = top - 1;
    const Elem c = F.mul(r[i], lead_inv);
    q[i - (b.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = r[i - (b.size() - 1) + j];
      slot = F.sub(slot, F.mul(c, b[j]));
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly mod(const FiniteField& F, const UPoly& a, const UPoly& b) { return divmod(F, a, b).second; }

UPoly monic(const FiniteField& F, const UPoly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

UPoly gcd(const FiniteField& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

UPoly powmod(const FiniteField& F, const UPoly& base, std::uint64_t e, const UPoly& modulus) {
  UPoly result = mod(F, UPoly{1}, modulus);
  UPoly b = mod(F, base, modulus);
  while (e) {
    if (e & 1) result = mod(F, mul(F, result, b), modulus);
    e >>= 1;
    if (e) b = mod(F, mul(F, b, b), modulus);
  }
  return result;
}

Elem eval(const FiniteField& F, const UPoly& f, Elem x) {
  Elem r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
  return r;
}

UPoly x_poly() { return UPoly{0, 1}; }

UPoly linear_part(const FiniteField& F, const UPoly& f) {
  UPoly g = monic(F, f);
  if (degree(g) <= 0) return UPoly{1};
  UPoly xq = powmod(F, x_poly(), F.order(), g);
  return gcd(F, g, sub(F, xq, x_poly()));
}

unsigned min_root_degree(const FiniteField& F, const UPoly& f) {
  UPoly g = monic(F, f);
  const int d = degree(g);
  if (d < 1) fail(ErrorCode::ConstantPolynomial, "polynomial has no roots to find");
  UPoly h = x_poly();
  for (int r = 1; r <= d; ++r) {
    h = powmod(F, h, F.order(), g);
    if (degree(gcd(F, g, sub(F, h, x_poly()))) > 0) return static_cast<unsigned>(r);
  }
  fail(ErrorCode::LogicFault, "irreducible factor degree exceeds polynomial degree");
}

namespace {

// One attempt to split a squarefree product of distinct linear factors.
UPoly split_attempt(const FiniteField& F, const UPoly& g, std::mt19937_64& rng) {
  const Elem a = rng() % F.order();
  if (F.characteristic() == 2) {
    UPoly t = mod(F, UPoly{0, a}, g);
    UPoly trace = t;
    for (unsigned i = 1; i < F.degree(); ++i) {
      t = mod(F, mul(F, t, t), g);
      trace = add(F, trace, t);
    }
    return gcd(F, g, trace);
  }
  UPoly h = powmod(F, UPoly{a, 1}, (F.order() - 1) / 2, g);
  return gcd(F, g, sub(F, h, UPoly{1}));
}

}  // namespace

std::optional<Elem> find_root(const FiniteField& F, const UPoly& f, std::mt19937_64& rng) {
  UPoly g = linear_part(F, f);
  if (degree(g) < 1) return std::nullopt;
  // Orders 2 and 3 give degenerate splitting maps; scan the field directly.
  if (F.order() <= 3) {
    for (Elem e = 0; e < F.order(); ++e) {
      if (eval(F, g, e) == 0) return e;
    }
  }
  int guard = 0;
  while (degree(g) > 1) {
    UPoly d = split_attempt(F, g, rng);
    const int dd = degree(d);
    if (dd > 0 && dd < degree(g)) {
      UPoly other = divmod(F, g, d).first;
      g = dd <= degree(other) ? monic(F, d) : monic(F, other);
    }
    if (++guard > 10000) fail(ErrorCode::RetryExhausted, "root splitting did not converge");
  }
  return F.neg(g[0]);
}

}  // namespace upoly

FieldEmbedding::FieldEmbedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->characteristic() != to_->characteristic() || to_->degree() % from_->degree() != 0) {
    fail(ErrorCode::InvalidArgument, from_->describe() + " is not a subfield of " + to_->describe());
  }
  FiniteField::Elem beta = 0;
  if (from_->degree() == 1) {
    powers_ = {to_->one()};
    return;
  }
  if (same_field(from_, to_)) {
    beta = to_->generator();
  } else {
    UPoly m;
    for (auto c : from_->modulus()) m.push_back(to_->from_int(static_cast<std::int64_t>(c)));
    std::mt19937_64 rng(0x5eedULL);
    auto root = upoly::find_root(*to_, m, rng);
    if (!root) fail(ErrorCode::LogicFault, "modulus has no root in the target field");
    beta = *root;
  }
  powers_.resize(from_->degree());
  FiniteField::Elem cur = to_->one();
  for (unsigned i = 0; i < from_->degree(); ++i) {
    powers_[i] = cur;
    cur = to_->mul(cur, beta);
  }
}

FiniteField::Elem FieldEmbedding::operator()(FiniteField::Elem e) const {
  auto d = from_->digits(e);
  FiniteField::Elem r = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    r = to_->add(r, to_->mul(to_->from_int(static_cast<std::int64_t>(d[i])), powers_[i]));
  }
  return r;
}

}  // namespace srcalg::coeff
