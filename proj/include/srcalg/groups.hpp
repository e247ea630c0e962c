#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "srcalg/coeff.hpp"

namespace srcalg::groups {

/// Free-group word; letter +i is generator i (1-based), -i its inverse.
using Word = std::vector<int>;
using IntVec = std::vector<std::int64_t>;
/// One-line notation with 0-based images.
using Perm = std::vector<int>;

enum class ElementKind { Word, Vec, Perm };

/// Canonical-form element of one of the supported groups. Words are always
/// freely reduced and permutations are validated on construction, so equal
/// group elements compare equal.
class GroupElement {
 public:
  GroupElement() : v_(std::in_place_index<1>) {}
  static GroupElement word(const Word& w);
  static GroupElement vec(IntVec v);
  static GroupElement perm(Perm p);

  ElementKind kind() const { return static_cast<ElementKind>(v_.index()); }
  const Word& as_word() const { return std::get<0>(v_); }
  const IntVec& as_vec() const { return std::get<1>(v_); }
  const Perm& as_perm() const { return std::get<2>(v_); }

  /// Shortlex for words (a < A < b < B ...), lexicographic otherwise.
  friend std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.v_ == y.v_; }

  /// "a B a" (identity "1"), "(1,-2)", "[2,1,3]".
  std::string to_string() const;

 private:
  std::variant<Word, IntVec, Perm> v_;
};

/// Free reduction of an arbitrary letter sequence.
Word reduce_word(const Word& w);

enum class GroupKind { Free, Abelian, Finite };

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// One of the three supported group families with its standard generating
/// set. Finite groups are permutation groups whose multiplication table is
/// built and checked once at construction.
class Group {
 public:
  static GroupPtr free(unsigned rank);
  static GroupPtr free_abelian(unsigned rank);
  /// Explicit element list; throws InvalidArgument unless it is closed under
  /// composition. `generators` defaults to all non-identity elements.
  static GroupPtr finite(std::vector<Perm> elements, std::vector<Perm> generators = {});
  static GroupPtr finite_from_generators(const std::vector<Perm>& generators);
  static GroupPtr symmetric(unsigned n);
  static GroupPtr cyclic(unsigned n);

  GroupKind kind() const { return kind_; }
  /// Free rank, abelian rank, or permutation degree.
  unsigned rank() const { return rank_; }

  GroupElement identity() const;
  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inv(const GroupElement& g) const;
  bool contains(const GroupElement& g) const;
  /// Throws MixedGroups if g does not belong to this group.
  void require(const GroupElement& g) const;

  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Generators together with their inverses, deduplicated and sorted.
  std::vector<GroupElement> symmetric_generators() const;

  std::size_t order() const;  // finite groups only
  const std::vector<GroupElement>& elements() const;  // finite groups only
  std::size_t index_of(const GroupElement& g) const;  // finite groups only
  /// The stored multiplication table, finite groups only.
  const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }

  std::string describe() const;
  bool same_as(const Group& other) const;

 private:
  Group(GroupKind kind, unsigned rank) : kind_(kind), rank_(rank) {}
  void build_table();

  GroupKind kind_;
  unsigned rank_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;  // sorted; finite only
  std::vector<std::vector<std::uint32_t>> table_;
  std::string label_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// Sorted, duplicate-free set of elements of one group.
class FiniteSubset {
 public:
  FiniteSubset(GroupPtr group, std::vector<GroupElement> elements);

  const GroupPtr& group() const { return group_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const GroupElement& g) const;
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  friend bool operator==(const FiniteSubset& a, const FiniteSubset& b) {
    return same_group(a.group_, b.group_) && a.elements_ == b.elements_;
  }

 private:
  GroupPtr group_;
  std::vector<GroupElement> elements_;
};

/// All elements of word length <= radius for the standard generating set.
FiniteSubset ball(const GroupPtr& G, unsigned radius);
/// The box [0, side)^d in Z^d.
FiniteSubset box(const GroupPtr& G, std::int64_t side);
/// {s f : s in S, f in F}.
FiniteSubset product_set(const FiniteSubset& S, const FiniteSubset& F);
/// Union of two subsets of the same group.
FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b);

struct FolnerResult {
  FiniteSubset set;
  std::size_t product_size;  // |SF|
  unsigned steps;            // candidates examined
  std::string schedule;      // "box", "ball" or "whole-group"
};

/// Searches for F with |SF| < ratio_bound * |F| (strict). Schedules: boxes
/// [0,L)^d with L = 1, 2, ... for Z^d; the whole group for finite groups;
/// balls of radius 0, 1, ... for free groups. At most `budget` candidates
/// are examined before NotFound is thrown.
FolnerResult folner_search(const GroupPtr& G, const FiniteSubset& S, const coeff::Rational& ratio_bound,
                           unsigned budget);

/// |SF| / |F| next to the two readings of the bound 1 + log|S|.
struct IsoperimetricSample {
  std::size_t s_size;
  std::size_t f_size;
  std::size_t product_size;
  double ratio;
  double bound_natural;
  double bound_base2;
  bool exceeds_natural;
  bool exceeds_base2;
};
IsoperimetricSample isoperimetric_ratio(const FiniteSubset& S, const FiniteSubset& F);

/// Right cosets Hx of a finite-index subgroup H. For finite groups the
/// carrier is the whole group; for Z^d cosets are labelled by the residue of
/// the Hermite normal form reduction.
class CosetPartition {
 public:
  std::size_t count() const { return count_; }
  std::size_t classify(const GroupElement& g) const;
  bool in_subgroup(const GroupElement& g) const;
  const std::vector<GroupElement>& representatives() const { return reps_; }
  const GroupPtr& group() const { return group_; }
  /// Hermite basis rows (abelian case only).
  const std::vector<IntVec>& hermite_basis() const { return hnf_; }

  friend CosetPartition cosets(const GroupPtr& G, const std::vector<GroupElement>& subgroup_generators);

 private:
  GroupPtr group_;
  std::size_t count_ = 0;
  std::vector<GroupElement> reps_;
  std::vector<std::size_t> finite_labels_;  // by element index
  std::vector<IntVec> hnf_;
};

/// Throws InfiniteIndex when the abelian generator matrix is not of full
/// rank, Unsupported for free groups.
CosetPartition cosets(const GroupPtr& G, const std::vector<GroupElement>& subgroup_generators);

/// Row-style Hermite normal form of an integer matrix: nonzero rows only,
/// positive pivots, entries above each pivot reduced into [0, pivot).
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows, std::size_t cols);

}  // namespace srcalg::groups
