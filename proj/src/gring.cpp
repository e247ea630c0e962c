#include "srcalg/gring.hpp"

#include <sstream>

#include "srcalg/error.hpp"

namespace srcalg::gring {

std::string RingDescriptor::describe() const { return coeff.describe() + "[" + group->describe() + "]"; }

GRElement GRElement::one(const RingDescriptor& ring) { return delta(ring, ring.group->identity()); }

GRElement GRElement::delta(const RingDescriptor& ring, const GroupElement& g) {
  return term(ring, g, Coefficient::one(ring.coeff));
}

GRElement GRElement::term(const RingDescriptor& ring, const GroupElement& g, const Coefficient& c) {
  GRElement x(ring);
  x.add_term(g, c);
  return x;
}

GRElement GRElement::constant(const RingDescriptor& ring, long c) {
  return term(ring, ring.group->identity(), Coefficient::from_int(ring.coeff, c));
}

Coefficient GRElement::component(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Coefficient::zero(ring_.coeff) : it->second;
}

groups::FiniteSubset GRElement::support() const {
  std::vector<GroupElement> keys;
  keys.reserve(terms_.size());
  for (const auto& [g, c] : terms_) keys.push_back(g);
  return groups::FiniteSubset(ring_.group, std::move(keys));
}

void GRElement::add_term(const GroupElement& g, const Coefficient& c) {
  ring_.group->require(g);
  if (!(c.ring() == ring_.coeff)) fail(ErrorCode::MixedRings, c.ring().describe() + " vs " + ring_.coeff.describe());
  if (c.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  Coefficient sum = it->second + c;
  if (sum.is_zero()) terms_.erase(it);
  else it->second = std::move(sum);
}

void GRElement::require_same(const GRElement& o) const {
  if (!(ring_ == o.ring_)) fail(ErrorCode::MixedRings, ring_.describe() + " vs " + o.ring_.describe());
}

GRElement GRElement::operator+(const GRElement& o) const {
  require_same(o);
  GRElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add_term(g, c);
  return r;
}

GRElement GRElement::operator-() const {
  GRElement r(ring_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
  return r;
}

GRElement GRElement::operator-(const GRElement& o) const { return *this + (-o); }

GRElement GRElement::operator*(const GRElement& o) const {
  require_same(o);
  GRElement r(ring_);
  for (const auto& [g, c] : terms_) {
    for (const auto& [h, d] : o.terms_) r.add_term(ring_.group->mul(g, h), c * d);
  }
  return r;
}

GRElement GRElement::scaled(const Coefficient& c) const {
  GRElement r(ring_);
  for (const auto& [g, d] : terms_) r.add_term(g, c * d);
  return r;
}

std::string GRElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << "*" << g.to_string();
  }
  return os.str();
}

GRElement gr_add(const GRElement& x, const GRElement& y) { return x + y; }
GRElement gr_mul(const GRElement& x, const GRElement& y) { return x * y; }
Coefficient homogeneous_component(const GRElement& x, const GroupElement& g) { return x.component(g); }
groups::FiniteSubset support(const GRElement& x) { return x.support(); }

}  // namespace srcalg::gring
