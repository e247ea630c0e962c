#include "srcalg/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "srcalg/error.hpp"

namespace srcalg::groups {

namespace {

int letter_key(int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

char letter_char(int l) {
  const char base = static_cast<char>('a' + (std::abs(l) - 1));
  return l < 0 ? static_cast<char>(base - 'a' + 'A') : base;
}

Perm compose(const Perm& s, const Perm& t) {
  Perm r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = s[static_cast<std::size_t>(t[i])];
  return r;
}

Perm perm_inverse(const Perm& s) {
  Perm r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  return r;
}

Perm identity_perm(unsigned n) {
  Perm p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  return p;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (l == 0) fail(ErrorCode::InvalidArgument, "letter 0 in word");
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

GroupElement GroupElement::word(const Word& w) {
  GroupElement g;
  g.v_.emplace<0>(reduce_word(w));
  return g;
}

GroupElement GroupElement::vec(IntVec v) {
  GroupElement g;
  g.v_.emplace<1>(std::move(v));
  return g;
}

GroupElement GroupElement::perm(Perm p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) {
      fail(ErrorCode::InvalidArgument, "not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  GroupElement g;
  g.v_.emplace<2>(std::move(p));
  return g;
}

std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
  if (x.v_.index() != y.v_.index()) return x.v_.index() <=> y.v_.index();
  switch (x.kind()) {
    case ElementKind::Word: {
      const auto& a = x.as_word();
      const auto& b = y.as_word();
      if (a.size() != b.size()) return a.size() <=> b.size();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return letter_key(a[i]) <=> letter_key(b[i]);
      }
      return std::strong_ordering::equal;
    }
    case ElementKind::Vec: return x.as_vec() <=> y.as_vec();
    case ElementKind::Perm: return x.as_perm() <=> y.as_perm();
  }
  return std::strong_ordering::equal;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  switch (kind()) {
    case ElementKind::Word: {
      const auto& w = as_word();
      if (w.empty()) return "1";
      for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << letter_char(w[i]);
      break;
    }
    case ElementKind::Vec: {
      os << "(";
      const auto& v = as_vec();
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << ")";
      break;
    }
    case ElementKind::Perm: {
      os << "[";
      const auto& p = as_perm();
      for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i] + 1;
      os << "]";
      break;
    }
  }
  return os.str();
}

GroupPtr Group::free(unsigned rank) {
  if (rank == 0 || rank > 26) fail(ErrorCode::InvalidArgument, "free rank must be in 1..26");
  auto* g = new Group(GroupKind::Free, rank);
  for (unsigned i = 1; i <= rank; ++i) g->generators_.push_back(GroupElement::word({static_cast<int>(i)}));
  g->label_ = "F" + std::to_string(rank);
  return GroupPtr(g);
}

GroupPtr Group::free_abelian(unsigned rank) {
  if (rank == 0) fail(ErrorCode::InvalidArgument, "abelian rank must be >= 1");
  auto* g = new Group(GroupKind::Abelian, rank);
  for (unsigned i = 0; i < rank; ++i) {
    IntVec e(rank, 0);
    e[i] = 1;
    g->generators_.push_back(GroupElement::vec(e));
  }
  g->label_ = "Z^" + std::to_string(rank);
  return GroupPtr(g);
}

GroupPtr Group::finite(std::vector<Perm> elements, std::vector<Perm> generators) {
  if (elements.empty()) fail(ErrorCode::InvalidArgument, "finite group needs elements");
  const auto n = static_cast<unsigned>(elements.front().size());
  auto* g = new Group(GroupKind::Finite, n);
  GroupPtr holder(g);
  std::set<GroupElement> uniq;
  for (auto& p : elements) {
    if (p.size() != n) fail(ErrorCode::InvalidArgument, "permutations of different degrees");
    uniq.insert(GroupElement::perm(p));
  }
  g->elements_.assign(uniq.begin(), uniq.end());
  if (!uniq.count(GroupElement::perm(identity_perm(n)))) {
    fail(ErrorCode::InvalidArgument, "element list lacks the identity");
  }
  g->build_table();
  if (generators.empty()) {
    for (const auto& e : g->elements_) {
      if (e.as_perm() != identity_perm(n)) g->generators_.push_back(e);
    }
  } else {
    for (auto& p : generators) {
      auto e = GroupElement::perm(p);
      if (!uniq.count(e)) fail(ErrorCode::InvalidArgument, "generator outside the element list");
      g->generators_.push_back(e);
    }
  }
  g->label_ = "finite group of order " + std::to_string(g->elements_.size());
  return holder;
}

GroupPtr Group::finite_from_generators(const std::vector<Perm>& generators) {
  if (generators.empty()) fail(ErrorCode::InvalidArgument, "need at least one generator");
  const auto n = static_cast<unsigned>(generators.front().size());
  std::set<Perm> seen{identity_perm(n)};
  std::vector<Perm> frontier{identity_perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& s : generators) {
        if (s.size() != n) fail(ErrorCode::InvalidArgument, "permutations of different degrees");
        Perm y = compose(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return finite(std::vector<Perm>(seen.begin(), seen.end()), generators);
}

GroupPtr Group::symmetric(unsigned n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "symmetric group degree must be >= 1");
  if (n > 7) fail(ErrorCode::Unsupported, "symmetric groups above degree 7 are too large to tabulate");
  std::vector<Perm> gens;
  for (unsigned i = 0; i + 1 < n; ++i) {
    Perm t = identity_perm(n);
    std::swap(t[i], t[i + 1]);
    gens.push_back(t);
  }
  GroupPtr g = n == 1 ? finite({identity_perm(1)}) : finite_from_generators(gens);
  const_cast<Group&>(*g).label_ = "S" + std::to_string(n);
  return g;
}

GroupPtr Group::cyclic(unsigned n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cyclic group order must be >= 1");
  Perm c(n);
  for (unsigned i = 0; i < n; ++i) c[i] = static_cast<int>((i + 1) % n);
  GroupPtr g = n == 1 ? finite({identity_perm(1)}) : finite_from_generators({c});
  const_cast<Group&>(*g).label_ = "C" + std::to_string(n);
  return g;
}

void Group::build_table() {
  const std::size_t n = elements_.size();
  table_.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = GroupElement::perm(compose(elements_[i].as_perm(), elements_[j].as_perm()));
      auto it = std::lower_bound(elements_.begin(), elements_.end(), prod);
      if (it == elements_.end() || !(*it == prod)) {
        fail(ErrorCode::InvalidArgument, "element list is not closed under multiplication");
      }
      table_[i][j] = static_cast<std::uint32_t>(it - elements_.begin());
    }
  }
}

GroupElement Group::identity() const {
  switch (kind_) {
    case GroupKind::Free: return GroupElement::word({});
    case GroupKind::Abelian: return GroupElement::vec(IntVec(rank_, 0));
    case GroupKind::Finite: return GroupElement::perm(identity_perm(rank_));
  }
  fail(ErrorCode::LogicFault, "unknown group kind");
}

bool Group::contains(const GroupElement& g) const {
  switch (kind_) {
    case GroupKind::Free: {
      if (g.kind() != ElementKind::Word) return false;
      for (int l : g.as_word()) {
        if (static_cast<unsigned>(std::abs(l)) > rank_) return false;
      }
      return true;
    }
    case GroupKind::Abelian: return g.kind() == ElementKind::Vec && g.as_vec().size() == rank_;
    case GroupKind::Finite: {
      if (g.kind() != ElementKind::Perm) return false;
      return std::binary_search(elements_.begin(), elements_.end(), g);
    }
  }
  return false;
}

void Group::require(const GroupElement& g) const {
  if (!contains(g)) fail(ErrorCode::MixedGroups, g.to_string() + " is not an element of " + describe());
}

GroupElement Group::mul(const GroupElement& g, const GroupElement& h) const {
  require(g);
  require(h);
  switch (kind_) {
    case GroupKind::Free: {
      Word w = g.as_word();
      w.insert(w.end(), h.as_word().begin(), h.as_word().end());
      return GroupElement::word(w);
    }
    case GroupKind::Abelian: {
      IntVec v = g.as_vec();
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += h.as_vec()[i];
      return GroupElement::vec(std::move(v));
    }
    case GroupKind::Finite: return elements_[table_[index_of(g)][index_of(h)]];
  }
  fail(ErrorCode::LogicFault, "unknown group kind");
}

GroupElement Group::inv(const GroupElement& g) const {
  require(g);
  switch (kind_) {
    case GroupKind::Free: {
      Word w(g.as_word().rbegin(), g.as_word().rend());
      for (int& l : w) l = -l;
      return GroupElement::word(w);
    }
    case GroupKind::Abelian: {
      IntVec v = g.as_vec();
      for (auto& x : v) x = -x;
      return GroupElement::vec(std::move(v));
    }
    case GroupKind::Finite: return GroupElement::perm(perm_inverse(g.as_perm()));
  }
  fail(ErrorCode::LogicFault, "unknown group kind");
}

std::vector<GroupElement> Group::symmetric_generators() const {
  std::set<GroupElement> s;
  for (const auto& g : generators_) {
    s.insert(g);
    s.insert(inv(g));
  }
  s.erase(identity());
  return {s.begin(), s.end()};
}

std::size_t Group::order() const { return elements().size(); }

const std::vector<GroupElement>& Group::elements() const {
  if (kind_ != GroupKind::Finite) fail(ErrorCode::Unsupported, describe() + " is infinite");
  return elements_;
}

std::size_t Group::index_of(const GroupElement& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (kind_ != GroupKind::Finite || it == elements_.end() || !(*it == g)) {
    fail(ErrorCode::MixedGroups, g.to_string() + " is not an element of " + describe());
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

std::string Group::describe() const { return label_; }

bool Group::same_as(const Group& other) const {
  if (kind_ != other.kind_ || rank_ != other.rank_) return false;
  if (kind_ != GroupKind::Finite) return true;
  return elements_ == other.elements_ && generators_ == other.generators_;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

FiniteSubset::FiniteSubset(GroupPtr group, std::vector<GroupElement> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  for (const auto& g : elements_) group_->require(g);
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FiniteSubset::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

FiniteSubset ball(const GroupPtr& G, unsigned radius) {
  if (G->kind() == GroupKind::Abelian) {
    // l1 ball, enumerated coordinate by coordinate.
    std::vector<GroupElement> out;
    const unsigned d = G->rank();
    IntVec cur(d, 0);
    const auto r = static_cast<std::int64_t>(radius);
    auto rec = [&](auto&& self, unsigned i, std::int64_t left) -> void {
      if (i == d) {
        out.push_back(GroupElement::vec(cur));
        return;
      }
      for (std::int64_t x = -left; x <= left; ++x) {
        cur[i] = x;
        self(self, i + 1, left - std::abs(x));
      }
      cur[i] = 0;
    };
    rec(rec, 0, r);
    return FiniteSubset(G, std::move(out));
  }
  const auto gens = G->symmetric_generators();
  std::set<GroupElement> seen{G->identity()};
  std::vector<GroupElement> frontier{G->identity()};
  for (unsigned step = 0; step < radius && !frontier.empty(); ++step) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        auto y = G->mul(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return FiniteSubset(G, std::vector<GroupElement>(seen.begin(), seen.end()));
}

FiniteSubset box(const GroupPtr& G, std::int64_t side) {
  if (G->kind() != GroupKind::Abelian) fail(ErrorCode::Unsupported, "boxes exist only in Z^d");
  std::vector<GroupElement> out;
  const unsigned d = G->rank();
  IntVec cur(d, 0);
  auto rec = [&](auto&& self, unsigned i) -> void {
    if (i == d) {
      out.push_back(GroupElement::vec(cur));
      return;
    }
    for (std::int64_t x = 0; x < side; ++x) {
      cur[i] = x;
      self(self, i + 1);
    }
  };
  if (side > 0) rec(rec, 0);
  return FiniteSubset(G, std::move(out));
}

FiniteSubset product_set(const FiniteSubset& S, const FiniteSubset& F) {
  if (!same_group(S.group(), F.group())) fail(ErrorCode::MixedGroups, "product of subsets of different groups");
  const auto& G = S.group();
  std::vector<GroupElement> out;
  out.reserve(S.size() * F.size());
  for (const auto& s : S) {
    for (const auto& f : F) out.push_back(G->mul(s, f));
  }
  return FiniteSubset(G, std::move(out));
}

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b) {
  if (!same_group(a.group(), b.group())) fail(ErrorCode::MixedGroups, "union of subsets of different groups");
  std::vector<GroupElement> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return FiniteSubset(a.group(), std::move(all));
}

namespace {

bool strictly_below(std::size_t sf, std::size_t f, const coeff::Rational& bound) {
  // sf < bound * f  <=>  sf * den < num * f
  return coeff::BigInt(static_cast<unsigned long>(sf)) * bound.get_den() <
         bound.get_num() * coeff::BigInt(static_cast<unsigned long>(f));
}

}  // namespace

FolnerResult folner_search(const GroupPtr& G, const FiniteSubset& S, const coeff::Rational& ratio_bound,
                           unsigned budget) {
  if (ratio_bound <= 1) fail(ErrorCode::InvalidArgument, "ratio bound must exceed 1");
  if (!same_group(G, S.group())) fail(ErrorCode::MixedGroups, "S is not a subset of the searched group");
  auto candidate = [&](unsigned step) -> FiniteSubset {
    switch (G->kind()) {
      case GroupKind::Abelian: return box(G, static_cast<std::int64_t>(step));
      case GroupKind::Free: return ball(G, step - 1);
      case GroupKind::Finite: return FiniteSubset(G, G->elements());
    }
    fail(ErrorCode::LogicFault, "unknown group kind");
  };
  const char* schedule = G->kind() == GroupKind::Abelian ? "box" : G->kind() == GroupKind::Free ? "ball" : "whole-group";
  const unsigned limit = G->kind() == GroupKind::Finite ? std::min(budget, 1u) : budget;
  for (unsigned step = 1; step <= limit; ++step) {
    FiniteSubset F = candidate(step);
    const std::size_t sf = S.empty() ? 0 : product_set(S, F).size();
    if (strictly_below(sf, F.size(), ratio_bound)) return FolnerResult{std::move(F), sf, step, schedule};
  }
  fail(ErrorCode::NotFound, "no Folner set within budget " + std::to_string(budget) + " (" + schedule + " schedule on " +
                                G->describe() + ")");
}

IsoperimetricSample isoperimetric_ratio(const FiniteSubset& S, const FiniteSubset& F) {
  if (F.empty()) fail(ErrorCode::InvalidArgument, "F must be nonempty");
  IsoperimetricSample out{};
  out.s_size = S.size();
  out.f_size = F.size();
  out.product_size = product_set(S, F).size();
  out.ratio = static_cast<double>(out.product_size) / static_cast<double>(out.f_size);
  out.bound_natural = 1.0 + std::log(static_cast<double>(S.size()));
  out.bound_base2 = 1.0 + std::log2(static_cast<double>(S.size()));
  out.exceeds_natural = out.ratio > out.bound_natural;
  out.exceeds_base2 = out.ratio > out.bound_base2;
  return out;
}

std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows, std::size_t cols) {
  using coeff::BigInt;
  std::vector<std::vector<BigInt>> A;
  for (const auto& r : rows) {
    if (r.size() != cols) fail(ErrorCode::InvalidArgument, "ragged generator matrix");
    std::vector<BigInt> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    A.push_back(std::move(row));
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < A.size(); ++c) {
    while (true) {
      // Move the smallest nonzero entry of column c (rows >= pivot_row) up.
      std::size_t best = A.size();
      for (std::size_t r = pivot_row; r < A.size(); ++r) {
        if (A[r][c] != 0 && (best == A.size() || abs(A[r][c]) < abs(A[best][c]))) best = r;
      }
      if (best == A.size()) break;
      std::swap(A[pivot_row], A[best]);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < A.size(); ++r) {
        if (A[r][c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), A[r][c].get_mpz_t(), A[pivot_row][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) A[r][k] -= q * A[pivot_row][k];
        if (A[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (pivot_row < A.size() && A[pivot_row][c] != 0) {
      if (A[pivot_row][c] < 0) {
        for (auto& x : A[pivot_row]) x = -x;
      }
      for (std::size_t r = 0; r < pivot_row; ++r) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), A[r][c].get_mpz_t(), A[pivot_row][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) A[r][k] -= q * A[pivot_row][k];
      }
      ++pivot_row;
    }
  }
  std::vector<IntVec> out;
  for (std::size_t r = 0; r < pivot_row; ++r) {
    IntVec row;
    for (const auto& x : A[r]) {
      if (!x.fits_slong_p()) fail(ErrorCode::Unsupported, "Hermite form entry exceeds 64 bits");
      row.push_back(x.get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

CosetPartition cosets(const GroupPtr& G, const std::vector<GroupElement>& subgroup_generators) {
  for (const auto& g : subgroup_generators) G->require(g);
  CosetPartition P;
  P.group_ = G;
  switch (G->kind()) {
    case GroupKind::Free: fail(ErrorCode::Unsupported, "coset classification in free groups");
    case GroupKind::Abelian: {
      const std::size_t d = G->rank();
      std::vector<IntVec> rows;
      for (const auto& g : subgroup_generators) rows.push_back(g.as_vec());
      auto hnf = hermite_normal_form(rows, d);
      bool full = hnf.size() == d;
      for (std::size_t i = 0; full && i < d; ++i) full = hnf[i][i] != 0;
      if (!full) fail(ErrorCode::InfiniteIndex, "subgroup generators do not span a full-rank lattice");
      P.hnf_ = hnf;
      std::size_t index = 1;
      for (std::size_t i = 0; i < d; ++i) {
        const auto di = static_cast<std::size_t>(hnf[i][i]);
        if (index > (std::size_t{1} << 24) / di) fail(ErrorCode::Unsupported, "subgroup index too large");
        index *= di;
      }
      P.count_ = index;
      // Representatives: residues 0 <= r_i < d_i, label in mixed radix with
      // the first coordinate most significant.
      for (std::size_t label = 0; label < index; ++label) {
        IntVec v(d, 0);
        std::size_t t = label;
        for (std::size_t i = d; i-- > 0;) {
          const auto di = static_cast<std::size_t>(hnf[i][i]);
          v[i] = static_cast<std::int64_t>(t % di);
          t /= di;
        }
        P.reps_.push_back(GroupElement::vec(v));
      }
      return P;
    }
    case GroupKind::Finite: {
      const auto& elems = G->elements();
      // Subgroup closure.
      std::set<GroupElement> H{G->identity()};
      std::vector<GroupElement> frontier{G->identity()};
      while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier) {
          for (const auto& s : subgroup_generators) {
            auto y = G->mul(x, s);
            if (H.insert(y).second) next.push_back(y);
          }
        }
        frontier = std::move(next);
      }
      const std::size_t none = elems.size();
      P.finite_labels_.assign(elems.size(), none);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (P.finite_labels_[i] != none) continue;
        const std::size_t label = P.reps_.size();
        P.reps_.push_back(elems[i]);
        for (const auto& h : H) P.finite_labels_[G->index_of(G->mul(h, elems[i]))] = label;
      }
      P.count_ = P.reps_.size();
      return P;
    }
  }
  fail(ErrorCode::LogicFault, "unknown group kind");
}

std::size_t CosetPartition::classify(const GroupElement& g) const {
  group_->require(g);
  if (group_->kind() == GroupKind::Finite) return finite_labels_[group_->index_of(g)];
  IntVec v = g.as_vec();
  const std::size_t d = v.size();
  for (std::size_t i = 0; i < d; ++i) {
    const std::int64_t q = floor_div(v[i], hnf_[i][i]);
    if (q != 0) {
      for (std::size_t k = i; k < d; ++k) v[k] -= q * hnf_[i][k];
    }
  }
  std::size_t label = 0;
  for (std::size_t i = 0; i < d; ++i) label = label * static_cast<std::size_t>(hnf_[i][i]) + static_cast<std::size_t>(v[i]);
  return label;
}

bool CosetPartition::in_subgroup(const GroupElement& g) const { return classify(g) == classify(group_->identity()); }

}  // namespace srcalg::groups
