#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "srcalg/alphas.hpp"
#include "srcalg/coeff.hpp"
#include "srcalg/graded.hpp"
#include "srcalg/gring.hpp"
#include "srcalg/groups.hpp"
#include "srcalg/ideals.hpp"
#include "srcalg/linalg.hpp"
#include "srcalg/set_system.hpp"
#include "srcalg/srcsolve.hpp"
#include "srcalg/theta.hpp"

/// JSON encodings. Readers throw Error(Parse) on malformed input. Objects
/// use nlohmann::json's sorted keys, so identical values print identically.
namespace srcalg::io {

using json = nlohmann::json;

json field_to_json(const coeff::FiniteField& F);
coeff::FieldPtr field_from_json(const json& j);

/// "Q"/"Z" or {"kind": "rational" | "integer" | "quad"} or
/// {"kind": "finite", "p": p, "k": k[, "modulus": [...]]}.
json ring_to_json(const coeff::CoeffRing& R);
coeff::CoeffRing ring_from_json(const json& j);

/// Rationals "num/den", integers as decimal strings, finite-field elements
/// as digit arrays from x^0 upward, Z[√-5] elements as [a, b].
json coefficient_to_json(const coeff::Coefficient& c);
coeff::Coefficient coefficient_from_json(const coeff::CoeffRing& R, const json& j);

/// {"kind": "free" | "abelian", "rank"}, {"kind": "symmetric" | "cyclic",
/// "n"} or {"kind": "finite", "elements": [...], "generators": [...]}.
json group_to_json(const groups::Group& G);
groups::GroupPtr group_from_json(const json& j);

/// Words as strings ("a B a", identity "1"), vectors and permutations
/// (1-based one-line notation) as integer arrays.
json element_to_json(const groups::GroupElement& g);
groups::GroupElement element_from_json(const groups::Group& G, const json& j);
groups::Word parse_word(const std::string& text);

json subset_to_json(const groups::FiniteSubset& S);

/// Array of [element, coefficient] pairs in canonical element order.
json gr_to_json(const gring::GRElement& x);
gring::GRElement gr_from_json(const gring::RingDescriptor& R, const json& j);

/// {"group", "coeff", "m", "n", "a": [[element, ...], ...]}.
json system_to_json(const srcsolve::LinearSystem& sys);
srcsolve::LinearSystem system_from_json(const json& j);

/// Row-major exact entries.
json matrix_to_json(const linalg::SparseMatrix& M);

json folner_to_json(const groups::FolnerResult& r, const coeff::Rational& bound);
json solve_report_to_json(const srcsolve::SolveReport& rep);
json truncated_kernel_to_json(const srcsolve::TruncatedKernelReport& rep);

/// {"Y": |Y|, "X": [[...], ...]} with 1-based points.
json set_system_to_json(const embed::SetSystem& sys);
embed::SetSystem set_system_from_json(const json& j);
json set_system_report_to_json(const embed::SetSystemReport& rep);

json alpha_family_to_json(const embed::AlphaFamily& fam);
embed::AlphaFamily alpha_family_from_json(const json& j);
json construct_stats_to_json(const embed::ConstructStats& s);
json alpha_report_to_json(const embed::AlphaReport& rep);
json theta_certificate_to_json(const embed::ThetaCertificate& cert);

json witness_report_to_json(const graded::WitnessReport& rep);
json unit_search_to_json(const graded::UnitSearchReport& rep);
json nzd_report_to_json(const graded::NzdReport& rep);
json poly_kernel_to_json(const graded::PolyKernelReport& rep);

json distinguish_report_to_json(const ideals::DistinguishReport& rep);
json containment_to_json(const ideals::ContainmentCheck& c);

/// Pretty printed with two-space indent and a trailing newline.
std::string dump(const json& j);

}  // namespace srcalg::io
