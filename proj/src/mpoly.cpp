#include "srcalg/mpoly.hpp"

#include <random>
#include <sstream>

#include "srcalg/error.hpp"

namespace srcalg::embed {

using Elem = FiniteField::Elem;
namespace upoly = coeff::upoly;

MPoly MPoly::variable(FieldPtr field, std::size_t nvars, std::size_t i) {
  if (i >= nvars) fail(ErrorCode::InvalidArgument, "variable index out of range");
  MPoly p(std::move(field), nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

MPoly MPoly::constant(FieldPtr field, std::size_t nvars, Elem c) {
  MPoly p(std::move(field), nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

bool MPoly::is_constant() const {
  for (const auto& [m, c] : terms_) {
    for (unsigned e : m) {
      if (e) return false;
    }
  }
  return true;
}

void MPoly::add_term(const Monomial& m, Elem c) {
  if (m.size() != nvars_) fail(ErrorCode::InvalidArgument, "monomial has the wrong number of variables");
  if (!field_->contains(c)) fail(ErrorCode::InvalidArgument, "coefficient outside the field");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = field_->add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (!coeff::same_field(field_, o.field_) || nvars_ != o.nvars_) fail(ErrorCode::MixedRings, "polynomial rings differ");
  MPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (!coeff::same_field(field_, o.field_) || nvars_ != o.nvars_) fail(ErrorCode::MixedRings, "polynomial rings differ");
  MPoly r(field_, nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, field_->mul(c1, c2));
    }
  }
  return r;
}

Elem MPoly::eval(const std::vector<Elem>& point) const {
  if (point.size() != nvars_) fail(ErrorCode::InvalidArgument, "point has the wrong number of coordinates");
  Elem acc = 0;
  for (const auto& [m, c] : terms_) {
    Elem t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i]) t = field_->mul(t, field_->pow(point[i], m[i]));
    }
    acc = field_->add(acc, t);
  }
  return acc;
}

MPoly MPoly::mapped(const coeff::FieldEmbedding& e) const {
  if (!coeff::same_field(e.source(), field_)) fail(ErrorCode::MixedRings, "embedding source differs");
  MPoly r(e.target(), nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, e(c));
  return r;
}

int MPoly::highest_variable() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] && static_cast<int>(i) > best) best = static_cast<int>(i);
    }
  }
  return best;
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
  return d;
}

MPoly MPoly::coefficient_of(std::size_t var, unsigned k) const {
  MPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.at(var) != k) continue;
    Monomial rest = m;
    rest[var] = 0;
    r.add_term(rest, c);
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool constant = true;
    std::ostringstream mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      if (!constant) mono << "*";
      constant = false;
      mono << "x" << i + 1;
      if (m[i] > 1) mono << "^" << m[i];
    }
    const std::string coef =
        field_->degree() == 1 ? std::to_string(c) : "[" + coeff::poly_to_string(field_->digits(c)) + "]";
    if (constant) os << coef;
    else if (c == 1) os << mono.str();
    else os << coef << "*" << mono.str();
  }
  return os.str();
}

Elem PointResult::map_in(Elem e) const {
  for (const auto& emb : tower) e = emb(e);
  return e;
}

namespace {

MPoly push_through(MPoly f, const std::vector<coeff::FieldEmbedding>& tower) {
  for (const auto& e : tower) f = f.mapped(e);
  return f;
}

PointResult solve_rec(const MPoly& f, Elem b) {
  const int top = f.highest_variable();
  if (top < 0) fail(ErrorCode::ConstantPolynomial, "polynomial " + f.to_string() + " is constant");
  const auto n = static_cast<std::size_t>(top);
  const unsigned k = f.degree_in(n);
  const MPoly lead = f.coefficient_of(n, k);
  PointResult res = lead.is_constant() ? PointResult{f.field(), std::vector<Elem>(f.nvars(), 0), {}}
                                       : solve_rec(lead, f.field()->one());
  const MPoly fm = push_through(f, res.tower);
  const FiniteField& L = *res.field;
  // h(x) = f(point with x_n = x) - b.
  coeff::UPoly h(k + 1, 0);
  for (const auto& [m, c] : fm.terms()) {
    Elem t = c;
    for (std::size_t i = 0; i < fm.nvars(); ++i) {
      if (i != n && m[i]) t = L.mul(t, L.pow(res.point[i], m[i]));
    }
    h[m[n]] = L.add(h[m[n]], t);
  }
  h[0] = L.sub(h[0], res.map_in(b));
  upoly::trim(h);
  if (upoly::degree(h) != static_cast<int>(k)) fail(ErrorCode::LogicFault, "leading coefficient vanished at the point");
  const unsigned r = upoly::min_root_degree(L, h);
  if (r > 1) {
    const FieldPtr bigger = coeff::ff_extend(L.characteristic(), L.degree() * r);
    coeff::FieldEmbedding emb(res.field, bigger);
    for (auto& x : res.point) x = emb(x);
    for (auto& x : h) x = emb(x);
    res.tower.push_back(std::move(emb));
    res.field = bigger;
  }
  std::mt19937_64 rng(0x9017ULL + n);
  const auto root = upoly::find_root(*res.field, h, rng);
  if (!root) fail(ErrorCode::LogicFault, "no root in the computed extension");
  res.point[n] = *root;
  return res;
}

}  // namespace

PointResult find_point(const MPoly& f, Elem b) {
  if (!f.field()->contains(b)) fail(ErrorCode::InvalidArgument, "target value outside the field");
  PointResult res = solve_rec(f, b);
  if (push_through(f, res.tower).eval(res.point) != res.map_in(b)) {
    fail(ErrorCode::LogicFault, "point does not attain the target value");
  }
  return res;
}

}  // namespace srcalg::embed
