#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "srcalg/coeff.hpp"
#include "srcalg/groups.hpp"

namespace srcalg::gring {

using coeff::Coefficient;
using coeff::CoeffRing;
using groups::GroupElement;
using groups::GroupPtr;

/// Group ring over a coefficient ring.
struct RingDescriptor {
  GroupPtr group;
  CoeffRing coeff;

  std::string describe() const;
  friend bool operator==(const RingDescriptor& x, const RingDescriptor& y) {
    return groups::same_group(x.group, y.group) && x.coeff == y.coeff;
  }
};

/// Finite formal sum of group elements with nonzero coefficients, kept in
/// the group's canonical element order.
class GRElement {
 public:
  using Terms = std::map<GroupElement, Coefficient>;

  explicit GRElement(RingDescriptor ring) : ring_(std::move(ring)) {}
  static GRElement zero(const RingDescriptor& ring) { return GRElement(ring); }
  static GRElement one(const RingDescriptor& ring);
  /// c * delta_g; c defaults to 1.
  static GRElement delta(const RingDescriptor& ring, const GroupElement& g);
  static GRElement term(const RingDescriptor& ring, const GroupElement& g, const Coefficient& c);
  /// Integer constant c * 1.
  static GRElement constant(const RingDescriptor& ring, long c);

  const RingDescriptor& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// r_g, zero when g is outside the support.
  Coefficient component(const GroupElement& g) const;
  groups::FiniteSubset support() const;

  /// Adds c to the coefficient at g, dropping it if the sum vanishes.
  void add_term(const GroupElement& g, const Coefficient& c);

  GRElement operator+(const GRElement& o) const;
  GRElement operator-(const GRElement& o) const;
  GRElement operator-() const;
  GRElement operator*(const GRElement& o) const;
  /// Coefficient-wise scaling c * x.
  GRElement scaled(const Coefficient& c) const;

  friend bool operator==(const GRElement& x, const GRElement& y) {
    return x.ring_ == y.ring_ && x.terms_ == y.terms_;
  }

  /// "2*a + -1*(1,0)" style listing; "0" for the zero element.
  std::string to_string() const;

 private:
  void require_same(const GRElement& o) const;
  RingDescriptor ring_;
  Terms terms_;
};

GRElement gr_add(const GRElement& x, const GRElement& y);
GRElement gr_mul(const GRElement& x, const GRElement& y);
Coefficient homogeneous_component(const GRElement& x, const GroupElement& g);
groups::FiniteSubset support(const GRElement& x);

}  // namespace srcalg::gring
