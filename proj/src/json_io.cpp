#include "srcalg/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "srcalg/error.hpp"

namespace srcalg::io {

using coeff::BigInt;
using coeff::Coefficient;
using coeff::CoeffRing;
using coeff::RingKind;
using groups::GroupElement;
using groups::GroupKind;

namespace {

// Wraps a reader so that nlohmann's type errors surface as Parse errors.
template <class F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::Parse, std::string(what) + ": " + e.what());
  }
}

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::Parse, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::uint64_t to_u64(const json& j) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    fail(ErrorCode::Parse, "expected a non-negative integer, got " + j.dump());
  }
  return j.get<std::uint64_t>();
}

BigInt to_bigint(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0) fail(ErrorCode::Parse, "bad integer \"" + s + "\"");
    return v;
  }
  fail(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json digits_json(const coeff::FiniteField& F, coeff::FiniteField::Elem e) {
  json out = json::array();
  for (auto d : F.digits(e)) out.push_back(d);
  return out;
}

coeff::FiniteField::Elem elem_from_json(const coeff::FiniteField& F, const json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
  if (!j.is_array()) fail(ErrorCode::Parse, "finite-field element must be a digit array");
  if (j.size() > F.degree()) fail(ErrorCode::Parse, "too many digits for " + F.describe());
  std::vector<std::uint64_t> d;
  for (const auto& x : j) {
    const auto v = to_u64(x);
    if (v >= F.characteristic()) fail(ErrorCode::Parse, "digit out of range for " + F.describe());
    d.push_back(v);
  }
  return F.from_digits(d);
}

json labels_json(embed::LabelSet T) {
  json out = json::array();
  for (unsigned s = 0; s < 32; ++s) {
    if (T >> s & 1u) out.push_back(s + 1);
  }
  return out;
}

json gr_list(const std::vector<gring::GRElement>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(gr_to_json(x));
  return out;
}

}  // namespace

json field_to_json(const coeff::FiniteField& F) {
  return {{"p", F.characteristic()}, {"k", F.degree()}, {"modulus", F.modulus()}};
}

coeff::FieldPtr field_from_json(const json& j) {
  return guarded("field", [&] {
    const auto p = to_u64(field_of(j, "p"));
    if (j.contains("modulus")) {
      std::vector<std::uint64_t> mod;
      for (const auto& x : j.at("modulus")) mod.push_back(to_u64(x));
      auto F = coeff::FiniteField::create(p, mod);
      if (j.contains("k") && to_u64(j.at("k")) != F->degree()) fail(ErrorCode::Parse, "k disagrees with modulus");
      return F;
    }
    const auto k = j.contains("k") ? to_u64(j.at("k")) : 1;
    if (k == 0) fail(ErrorCode::Parse, "field degree must be positive");
    return coeff::ff_extend(p, static_cast<unsigned>(k));
  });
}

json ring_to_json(const CoeffRing& R) {
  switch (R.kind()) {
    case RingKind::Rational: return {{"kind", "rational"}};
    case RingKind::Integer: return {{"kind", "integer"}};
    case RingKind::Quad: return {{"kind", "quad"}};
    case RingKind::Finite: {
      json out = field_to_json(*R.field());
      out["kind"] = "finite";
      return out;
    }
  }
  fail(ErrorCode::LogicFault, "unknown ring kind");
}

CoeffRing ring_from_json(const json& j) {
  return guarded("coefficient ring", [&]() -> CoeffRing {
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      if (s == "Q") return CoeffRing::rationals();
      if (s == "Z") return CoeffRing::integers();
      fail(ErrorCode::Parse, "unknown coefficient ring \"" + s + "\"");
    }
    const auto kind = field_of(j, "kind").get<std::string>();
    if (kind == "rational") return CoeffRing::rationals();
    if (kind == "integer") return CoeffRing::integers();
    if (kind == "quad") return CoeffRing::quadratic();
    if (kind == "finite") return CoeffRing::finite(field_from_json(j));
    fail(ErrorCode::Parse, "unknown coefficient ring kind \"" + kind + "\"");
  });
}

json coefficient_to_json(const Coefficient& c) {
  switch (c.ring().kind()) {
    case RingKind::Rational: return coeff::rational_to_string(c.as_rational());
    case RingKind::Integer: return c.as_integer().get_str();
    case RingKind::Finite: return digits_json(*c.ring().field(), c.as_finite());
    case RingKind::Quad: return json::array({bigint_to_json(c.as_quad().a), bigint_to_json(c.as_quad().b)});
  }
  fail(ErrorCode::LogicFault, "unknown ring kind");
}

Coefficient coefficient_from_json(const CoeffRing& R, const json& j) {
  return guarded("coefficient", [&]() -> Coefficient {
    switch (R.kind()) {
      case RingKind::Rational:
        if (j.is_number_integer()) return Coefficient::rational(coeff::Rational(BigInt(j.get<std::int64_t>())));
        if (!j.is_string()) fail(ErrorCode::Parse, "rational must be a \"num/den\" string");
        return Coefficient::rational(coeff::parse_rational(j.get<std::string>()));
      case RingKind::Integer: return Coefficient::integer(to_bigint(j));
      case RingKind::Finite: return Coefficient::finite(R.field(), elem_from_json(*R.field(), j));
      case RingKind::Quad:
        if (!j.is_array() || j.size() != 2) fail(ErrorCode::Parse, "Z[√-5] element must be [a, b]");
        return Coefficient::quad(coeff::Quad(to_bigint(j[0]), to_bigint(j[1])));
    }
    fail(ErrorCode::LogicFault, "unknown ring kind");
  });
}

json group_to_json(const groups::Group& G) {
  switch (G.kind()) {
    case GroupKind::Free: return {{"kind", "free"}, {"rank", G.rank()}};
    case GroupKind::Abelian: return {{"kind", "abelian"}, {"rank", G.rank()}};
    case GroupKind::Finite: break;
  }
  const std::string label = G.describe();
  if (label.size() > 1 && (label[0] == 'S' || label[0] == 'C') &&
      std::all_of(label.begin() + 1, label.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    return {{"kind", label[0] == 'S' ? "symmetric" : "cyclic"}, {"n", std::stoul(label.substr(1))}};
  }
  json elems = json::array(), gens = json::array();
  for (const auto& g : G.elements()) elems.push_back(element_to_json(g));
  for (const auto& g : G.generators()) gens.push_back(element_to_json(g));
  return {{"kind", "finite"}, {"elements", elems}, {"generators", gens}};
}

namespace {

groups::Perm perm_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "permutation must be an array");
  groups::Perm p;
  for (const auto& x : j) {
    const auto v = to_u64(x);
    if (v == 0) fail(ErrorCode::Parse, "permutations are 1-based");
    p.push_back(static_cast<int>(v - 1));
  }
  return p;
}

}  // namespace

groups::GroupPtr group_from_json(const json& j) {
  return guarded("group", [&]() -> groups::GroupPtr {
    const auto kind = field_of(j, "kind").get<std::string>();
    if (kind == "free" || kind == "abelian") {
      const auto r = to_u64(field_of(j, "rank"));
      if (r == 0 || r > 26) fail(ErrorCode::Parse, "rank must be in 1..26");
      return kind == "free" ? groups::Group::free(static_cast<unsigned>(r))
                            : groups::Group::free_abelian(static_cast<unsigned>(r));
    }
    if (kind == "symmetric" || kind == "cyclic") {
      const auto n = to_u64(field_of(j, "n"));
      if (n == 0) fail(ErrorCode::Parse, "n must be positive");
      return kind == "symmetric" ? groups::Group::symmetric(static_cast<unsigned>(n))
                                 : groups::Group::cyclic(static_cast<unsigned>(n));
    }
    if (kind == "finite") {
      std::vector<groups::Perm> gens;
      if (j.contains("generators")) {
        for (const auto& g : j.at("generators")) gens.push_back(perm_from_json(g));
      }
      if (!j.contains("elements")) return groups::Group::finite_from_generators(gens);
      std::vector<groups::Perm> elems;
      for (const auto& g : j.at("elements")) elems.push_back(perm_from_json(g));
      return groups::Group::finite(std::move(elems), std::move(gens));
    }
    fail(ErrorCode::Parse, "unknown group kind \"" + kind + "\"");
  });
}

json element_to_json(const GroupElement& g) {
  switch (g.kind()) {
    case groups::ElementKind::Word: return g.to_string();
    case groups::ElementKind::Vec: return g.as_vec();
    case groups::ElementKind::Perm: {
      json out = json::array();
      for (int v : g.as_perm()) out.push_back(v + 1);
      return out;
    }
  }
  fail(ErrorCode::LogicFault, "unknown element kind");
}

groups::Word parse_word(const std::string& text) {
  groups::Word w;
  bool identity = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == ',') continue;
    if (ch == '1' || ch == 'e') {
      identity = true;
      continue;
    }
    if (ch >= 'a' && ch <= 'z') w.push_back(ch - 'a' + 1);
    else if (ch >= 'A' && ch <= 'Z') w.push_back(-(ch - 'A' + 1));
    else fail(ErrorCode::Parse, std::string("bad letter '") + ch + "' in word \"" + text + "\"");
  }
  if (identity && !w.empty()) fail(ErrorCode::Parse, "identity mixed with letters in \"" + text + "\"");
  return groups::reduce_word(w);
}

GroupElement element_from_json(const groups::Group& G, const json& j) {
  return guarded("group element", [&] {
    GroupElement g;
    switch (G.kind()) {
      case GroupKind::Free:
        if (!j.is_string()) fail(ErrorCode::Parse, "free-group element must be a word string");
        g = GroupElement::word(parse_word(j.get<std::string>()));
        break;
      case GroupKind::Abelian: {
        if (!j.is_array()) fail(ErrorCode::Parse, "Z^d element must be an integer array");
        groups::IntVec v;
        for (const auto& x : j) {
          if (!x.is_number_integer()) fail(ErrorCode::Parse, "Z^d entries must be integers");
          v.push_back(x.get<std::int64_t>());
        }
        g = GroupElement::vec(std::move(v));
        break;
      }
      case GroupKind::Finite: g = GroupElement::perm(perm_from_json(j)); break;
    }
    if (!G.contains(g)) fail(ErrorCode::Parse, g.to_string() + " is not an element of " + G.describe());
    return g;
  });
}

json subset_to_json(const groups::FiniteSubset& S) {
  json out = json::array();
  for (const auto& g : S) out.push_back(element_to_json(g));
  return out;
}

json gr_to_json(const gring::GRElement& x) {
  json out = json::array();
  for (const auto& [g, c] : x.terms()) out.push_back(json::array({element_to_json(g), coefficient_to_json(c)}));
  return out;
}

gring::GRElement gr_from_json(const gring::RingDescriptor& R, const json& j) {
  return guarded("group ring element", [&] {
    if (!j.is_array()) fail(ErrorCode::Parse, "group ring element must be an array of [element, coefficient]");
    gring::GRElement x(R);
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 2) fail(ErrorCode::Parse, "term must be [element, coefficient]");
      x.add_term(element_from_json(*R.group, t[0]), coefficient_from_json(R.coeff, t[1]));
    }
    return x;
  });
}

json system_to_json(const srcsolve::LinearSystem& sys) {
  json rows = json::array();
  for (const auto& row : sys.a) rows.push_back(gr_list(row));
  return {{"group", group_to_json(*sys.ring.group)},
          {"coeff", ring_to_json(sys.ring.coeff)},
          {"m", sys.m},
          {"n", sys.n},
          {"a", rows}};
}

srcsolve::LinearSystem system_from_json(const json& j) {
  return guarded("system", [&] {
    srcsolve::LinearSystem sys{{group_from_json(field_of(j, "group")), ring_from_json(field_of(j, "coeff"))}, 0, 0, {}};
    sys.m = to_u64(field_of(j, "m"));
    sys.n = to_u64(field_of(j, "n"));
    const auto& a = field_of(j, "a");
    if (!a.is_array() || a.size() != sys.m) fail(ErrorCode::Parse, "\"a\" must have m rows");
    for (const auto& row : a) {
      if (!row.is_array() || row.size() != sys.n) fail(ErrorCode::Parse, "every row of \"a\" must have n entries");
      std::vector<gring::GRElement> r;
      for (const auto& e : row) r.push_back(gr_from_json(sys.ring, e));
      sys.a.push_back(std::move(r));
    }
    sys.validate();
    return sys;
  });
}

json matrix_to_json(const linalg::SparseMatrix& M) {
  json rows = json::array();
  for (const auto& r : M.to_dense()) {
    json row = json::array();
    for (const auto& c : r) row.push_back(coefficient_to_json(c));
    rows.push_back(row);
  }
  return {{"rows", M.rows()}, {"cols", M.cols()}, {"ring", ring_to_json(M.ring())}, {"entries", rows}};
}

json folner_to_json(const groups::FolnerResult& r, const coeff::Rational& bound) {
  return {{"schedule", r.schedule},
          {"steps", r.steps},
          {"F_size", r.set.size()},
          {"SF_size", r.product_size},
          {"ratio_bound", coeff::rational_to_string(bound)},
          {"F", subset_to_json(r.set)}};
}

json solve_report_to_json(const srcsolve::SolveReport& rep) {
  return {{"solution", gr_list(rep.solution.x)},
          {"verified", rep.solution.verified},
          {"folner", folner_to_json(rep.folner, rep.ratio_bound)},
          {"lift",
           {{"rows", rep.lifted_rows},
            {"cols", rep.lifted_cols},
            {"row_order", "g in SF ascending, then equation index"},
            {"col_order", "f in F ascending, then unknown index"},
            {"columns_examined", rep.columns_examined},
            {"method", rep.method}}}};
}

json truncated_kernel_to_json(const srcsolve::TruncatedKernelReport& rep) {
  json kernel = json::array();
  for (const auto& v : rep.kernel) kernel.push_back(gr_list(v));
  return {{"radius", rep.radius},
          {"rows", rep.rows},
          {"cols", rep.cols},
          {"rank", rep.rank},
          {"injective", rep.kernel.empty()},
          {"kernel", kernel}};
}

json set_system_to_json(const embed::SetSystem& sys) { return {{"Y", sys.y_size}, {"X", sys.X}}; }

embed::SetSystem set_system_from_json(const json& j) {
  return guarded("set system", [&] {
    embed::SetSystem sys;
    sys.y_size = to_u64(field_of(j, "Y"));
    const auto& X = field_of(j, "X");
    if (!X.is_array() || X.empty()) fail(ErrorCode::Parse, "\"X\" must be a nonempty array of subsets");
    if (X.size() > 8) fail(ErrorCode::Parse, "at most 8 labels are supported");
    for (const auto& xs : X) {
      std::vector<std::size_t> pts;
      for (const auto& y : xs) {
        const auto v = to_u64(y);
        if (v == 0 || v > sys.y_size) fail(ErrorCode::Parse, "point out of range 1..|Y|");
        pts.push_back(v);
      }
      std::sort(pts.begin(), pts.end());
      if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) fail(ErrorCode::Parse, "repeated point");
      sys.X.push_back(std::move(pts));
    }
    return sys;
  });
}

json set_system_report_to_json(const embed::SetSystemReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(
        {{"T", labels_json(c.T)}, {"s", c.s + 1}, {"size", c.size}, {"bound", c.bound}, {"pass", c.pass}});
  }
  return {{"log", embed::log_base_name(rep.base)},
          {"union_size", rep.union_size},
          {"union_ok", rep.union_ok},
          {"valid", rep.valid()},
          {"checks", checks}};
}

json alpha_family_to_json(const embed::AlphaFamily& fam) {
  json mats = json::array();
  for (const auto& A : fam.A) {
    json rows = json::array();
    for (const auto& r : A) {
      json row = json::array();
      for (auto e : r) row.push_back(digits_json(*fam.field, e));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return {{"base", field_to_json(*fam.base)}, {"field", field_to_json(*fam.field)}, {"matrices", mats}};
}

embed::AlphaFamily alpha_family_from_json(const json& j) {
  return guarded("alpha family", [&] {
    embed::AlphaFamily fam{field_from_json(field_of(j, "base")), field_from_json(field_of(j, "field")), {}};
    if (fam.field->characteristic() != fam.base->characteristic() || fam.field->degree() % fam.base->degree() != 0) {
      fail(ErrorCode::Parse, "\"field\" cannot contain \"base\"");
    }
    for (const auto& m : field_of(j, "matrices")) {
      embed::FieldMatrix A;
      for (const auto& r : m) {
        std::vector<coeff::FiniteField::Elem> row;
        for (const auto& e : r) row.push_back(elem_from_json(*fam.field, e));
        if (!A.empty() && row.size() != A.front().size()) fail(ErrorCode::Parse, "ragged matrix");
        A.push_back(std::move(row));
      }
      if (!A.empty() && A.size() != A.front().size()) fail(ErrorCode::Parse, "matrices must be square");
      fam.A.push_back(std::move(A));
    }
    return fam;
  });
}

json construct_stats_to_json(const embed::ConstructStats& s) {
  return {{"seed", s.seed},
          {"families", s.families},
          {"admissible", s.admissible},
          {"distinct_selections", s.distinct_selections},
          {"degree_sum", s.degree_sum},
          {"attempts", s.attempts},
          {"extension_degree", s.extension_degree},
          {"field_order", s.field_order}};
}

json alpha_report_to_json(const embed::AlphaReport& rep) {
  json fams = json::array();
  for (const auto& f : rep.families) {
    json T = json::array();
    for (auto t : f.T) T.push_back(labels_json(t));
    json entry = {{"T", T}, {"v", f.v}, {"admissible", f.admissible}, {"pass", f.pass}};
    if (f.admissible) entry["rank"] = f.rank;
    fams.push_back(entry);
  }
  return {{"support_ok", rep.support_ok}, {"all_pass", rep.all_pass()}, {"families", fams}};
}

json theta_certificate_to_json(const embed::ThetaCertificate& cert) {
  json out = {{"radius", cert.radius},
              {"rows", cert.rows},
              {"cols", cert.cols},
              {"rank", cert.rank},
              {"outcome", cert.injective ? "VerifiedInjectiveUpTo" : "KernelWitness"},
              {"missing", cert.missing},
              {"missing_rows_zero", cert.missing_rows_zero}};
  if (!cert.injective) {
    out["witness"] = gr_list(cert.witness);
    out["witness_verified"] = cert.witness_verified;
  }
  return out;
}

json witness_report_to_json(const graded::WitnessReport& rep) {
  static const char* names[] = {"group-ring", "sign-graded", "int-const-poly"};
  json pairs = json::array();
  for (const auto& [u, v] : rep.pairs) pairs.push_back(json::array({u, v}));
  json out = {{"fixture", names[static_cast<int>(rep.fixture)]},
              {"degree", rep.degree},
              {"found", rep.found},
              {"verified", rep.verified},
              {"pairs", pairs}};
  if (!rep.found) out["reason"] = rep.reason;
  return out;
}

json unit_search_to_json(const graded::UnitSearchReport& rep) {
  json units = json::array();
  for (const auto& u : rep.units) {
    units.push_back({{"even", json::array({bigint_to_json(u.even().a), bigint_to_json(u.even().b)})},
                     {"odd", json::array({bigint_to_json(u.odd().a), bigint_to_json(u.odd().b)})}});
  }
  return {{"bound", rep.bound}, {"homogeneous", rep.homogeneous}, {"candidates", rep.candidates}, {"units", units}};
}

json nzd_report_to_json(const graded::NzdReport& rep) {
  return {{"radius", rep.radius},
          {"injective", rep.injective},
          {"cols", rep.cols},
          {"rank", rep.rank},
          {"kernel", gr_list(rep.kernel)}};
}

json poly_kernel_to_json(const graded::PolyKernelReport& rep) {
  return {{"max_degree", rep.max_degree},
          {"radius", rep.radius},
          {"rows", rep.rows},
          {"cols", rep.cols},
          {"rank", rep.rank},
          {"kernel_by_degree", rep.kernel_by_degree},
          {"trivial", rep.trivial()}};
}

json containment_to_json(const ideals::ContainmentCheck& c) {
  json out = {{"checked", c.checked}, {"violations", c.violations}};
  if (c.counterexample) out["counterexample"] = gr_to_json(*c.counterexample);
  return out;
}

json distinguish_report_to_json(const ideals::DistinguishReport& rep) {
  json out = {{"H_le_K", rep.h_le_k}, {"K_le_H", rep.k_le_h}, {"equal", rep.h_le_k && rep.k_le_h}};
  if (rep.h_in_k) out["I_H_in_I_K"] = containment_to_json(*rep.h_in_k);
  if (rep.k_in_h) out["I_K_in_I_H"] = containment_to_json(*rep.k_in_h);
  if (rep.witness) {
    out["witness"] = gr_to_json(*rep.witness);
    out["witness_in_I_H"] = rep.witness_in_h;
    out["witness_in_I_K"] = rep.witness_in_k;
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace srcalg::io
