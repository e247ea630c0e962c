#include "srcalg/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "srcalg/alphas.hpp"
#include "srcalg/error.hpp"
#include "srcalg/graded.hpp"
#include "srcalg/ideals.hpp"
#include "srcalg/json_io.hpp"
#include "srcalg/set_system.hpp"
#include "srcalg/srcsolve.hpp"
#include "srcalg/theta.hpp"

namespace srcalg::cli {

using io::json;

namespace {

constexpr const char* kVersion = "0.1.0";

json read_input(const std::string& path) {
  if (path.empty()) fail(ErrorCode::Parse, "--in is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
}

// Temp file in the target directory, then rename, so readers never see a
// partial document.
void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(cfg.out_path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorCode::Parse, "cannot write " + tmp.string());
    f << text;
    if (!f.flush()) fail(ErrorCode::Parse, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fail(ErrorCode::Parse, "cannot rename onto " + target.string() + ": " + ec.message());
}

embed::LogBase parse_log(const std::string& s) {
  if (s == "natural" || s == "e") return embed::LogBase::Natural;
  if (s == "2" || s == "base2") return embed::LogBase::Two;
  fail(ErrorCode::Parse, "--log must be natural or 2");
}

json provenance(const RunConfig& cfg) {
  return {{"tool", "srcalg"},
          {"version", kVersion},
          {"command", cfg.command},
          {"seed", cfg.seed},
          {"budgets", {{"folner_steps", cfg.budget}, {"radius", cfg.radius}, {"ymax", cfg.ymax}}},
          {"orderings",
           {{"words", "shortlex, a < A < b < B < ..."},
            {"vectors", "lexicographic"},
            {"permutations", "lexicographic one-line images"},
            {"lift_rows", "g in SF ascending, then equation"},
            {"lift_cols", "f in F ascending, then unknown"},
            {"families", "(T_s)_s with T_1 varying slowest"},
            {"selection", "rows by s, then y; first |Y| rows"}}}};
}

json envelope(const RunConfig& cfg) { return {{"provenance", provenance(cfg)}}; }

int cmd_solve(const RunConfig& cfg, json& doc) {
  const auto sys = io::system_from_json(read_input(cfg.in_path));
  const auto rep = srcsolve::solve_src(sys, cfg.budget);
  doc["system"] = io::system_to_json(sys);
  doc["report"] = io::solve_report_to_json(rep);
  return rep.solution.verified ? kOk : kCheckFailed;
}

// Accepts a system file (S = coefficient support, ratio n/m) or
// {"group", "S": [...], "ratio": "p/q"}.
int cmd_folner(const RunConfig& cfg, json& doc) {
  const json in = read_input(cfg.in_path);
  groups::GroupPtr G;
  std::vector<groups::GroupElement> S;
  coeff::Rational ratio;
  if (in.contains("a")) {
    const auto sys = io::system_from_json(in);
    G = sys.ring.group;
    const auto supp = sys.coefficient_support();
    S = supp.elements();
    ratio = coeff::make_rational(static_cast<long>(sys.n), static_cast<long>(sys.m));
  } else {
    try {
      G = io::group_from_json(in.at("group"));
      for (const auto& e : in.at("S")) S.push_back(io::element_from_json(*G, e));
      const auto& r = in.at("ratio");
      ratio = r.is_string() ? coeff::parse_rational(r.get<std::string>()) : coeff::Rational(r.get<long>());
    } catch (const json::exception& e) {
      fail(ErrorCode::Parse, e.what());
    }
  }
  const groups::FiniteSubset Sset(G, S);
  const auto res = groups::folner_search(G, Sset, ratio, cfg.budget);
  doc["group"] = io::group_to_json(*G);
  doc["S"] = io::subset_to_json(Sset);
  doc["folner"] = io::folner_to_json(res, ratio);
  return kOk;
}

std::vector<groups::GroupElement> theta_labels(const RunConfig& cfg, const groups::GroupPtr& G) {
  std::vector<groups::GroupElement> b;
  if (!cfg.b.empty()) {
    std::stringstream ss(cfg.b);
    std::string w;
    while (std::getline(ss, w, ',')) {
      auto g = groups::GroupElement::word(io::parse_word(w));
      if (!G->contains(g)) fail(ErrorCode::Parse, "--b word " + w + " uses letters beyond rank 2");
      b.push_back(std::move(g));
    }
    if (b.size() != cfg.s_size) fail(ErrorCode::Parse, "--b must list exactly --s words");
    return b;
  }
  // Generators first, then their inverses, then longer words in shortlex order.
  for (const auto& g : G->generators()) b.push_back(g);
  for (const auto& g : G->generators()) b.push_back(G->inv(g));
  for (const auto& g : groups::ball(G, 3)) {
    if (g.as_word().size() >= 2) b.push_back(g);
  }
  if (b.size() < cfg.s_size) fail(ErrorCode::Parse, "--s too large for the default labels");
  b.resize(cfg.s_size);
  return b;
}

int cmd_theta(const RunConfig& cfg, json& doc) {
  if (cfg.s_size < 1 || cfg.s_size > 5) fail(ErrorCode::Parse, "--s must be in 1..5");
  const auto base = parse_log(cfg.log);
  const auto K = coeff::ff_extend(cfg.field, cfg.field_degree);
  embed::SearchStats search;
  const auto sys = embed::search_set_system(cfg.s_size, cfg.ymax, base, &search);
  const auto sys_rep = embed::validate_set_system(sys, base);
  embed::ConstructStats cstats;
  const auto fam = embed::construct_alphas(sys, K, cfg.seed, &cstats);
  const auto arep = embed::verify_alphas(fam, sys);
  const auto G = groups::Group::free(2);
  const auto theta = embed::build_theta(fam, sys, theta_labels(cfg, G), G);
  const auto cert = embed::theta_certify(theta, cfg.radius);

  doc["set_system"] = io::set_system_to_json(sys);
  doc["set_system"]["profiles_tested"] = search.profiles_tested;
  doc["set_system_report"] = io::set_system_report_to_json(sys_rep);
  doc["construct"] = io::construct_stats_to_json(cstats);
  doc["alphas"] = io::alpha_family_to_json(fam);
  doc["alpha_report"] = io::alpha_report_to_json(arep);
  json labels = json::array();
  for (const auto& g : theta.b) labels.push_back(io::element_to_json(g));
  doc["theta"] = {{"group", io::group_to_json(*G)}, {"b", labels}};
  // Sampled |SF|/|F| for S = {b_s} on balls; a sample, not a bound for all F.
  const groups::FiniteSubset S(G, theta.b);
  json samples = json::array();
  for (unsigned r = 0; r <= cfg.radius + 2; ++r) {
    const auto iso = groups::isoperimetric_ratio(S, groups::ball(G, r));
    samples.push_back({{"radius", r}, {"F_size", iso.f_size}, {"SF_size", iso.product_size}, {"ratio", iso.ratio},
                       {"bound_natural", iso.bound_natural}, {"bound_base2", iso.bound_base2},
                       {"exceeds_natural", iso.exceeds_natural}, {"exceeds_base2", iso.exceeds_base2}});
  }
  doc["isoperimetric_samples"] = samples;
  doc["certificate"] = io::theta_certificate_to_json(cert);

  const bool ok = sys_rep.valid() && arep.all_pass() && cert.missing_rows_zero &&
                  (cert.injective || cert.witness_verified);
  return ok ? kOk : kCheckFailed;
}

int cmd_graded_verify(const RunConfig& cfg, json& doc) {
  using graded::SignGradedElement;
  using coeff::Quad;
  // Degree -1 witness: (0,3)(0,2-√-5) + (0,1+√-5)^2.
  const SignGradedElement u1(Quad(0, 0), Quad(3, 0)), v1(Quad(0, 0), Quad(2, -1));
  const SignGradedElement u2(Quad(0, 0), Quad(1, 1));
  const auto sum = graded::sign_graded_mul(u1, v1) + graded::sign_graded_mul(u2, u2);
  const bool sum_ok = sum == SignGradedElement::one();
  doc["witness_sum"] = {{"value", sum.to_string()}, {"is_one", sum_ok}};

  const auto plus = graded::strongly_graded_check_sign(1);
  const auto minus = graded::strongly_graded_check_sign(-1);
  doc["strongly_graded"] = json::array({io::witness_report_to_json(plus), io::witness_report_to_json(minus)});

  const auto units = graded::unit_search(cfg.bound);
  doc["unit_search"] = io::unit_search_to_json(units);
  // Reported only: inhomogeneous units exist, so this list is longer.
  doc["unit_search_all_elements"] = io::unit_search_to_json(graded::unit_search_full(cfg.bound));
  bool units_ok = units.units.size() == 2;
  for (const auto& u : units.units) {
    units_ok = units_ok && u.odd().is_zero() && u.even().b == 0 && (u.even().a == 1 || u.even().a == -1);
  }

  json poly = json::array();
  for (long k : {0L, 1L}) poly.push_back(io::witness_report_to_json(graded::strongly_graded_check_poly(k)));
  doc["int_const_poly"] = poly;
  const auto pk = graded::int_poly_system_kernel(cfg.degree, cfg.radius);
  doc["int_const_poly_kernel"] = io::poly_kernel_to_json(pk);

  const bool ok = sum_ok && plus.verified && minus.verified && units_ok && pk.trivial();
  doc["all_pass"] = ok;
  return ok ? kOk : kCheckFailed;
}

// Truncated kernel of a system file, or of (a-1)x1 + (b-1)x2 over --coeff
// when --in is absent.
int cmd_embed_cert(const RunConfig& cfg, json& doc) {
  const srcsolve::LinearSystem sys =
      cfg.in_path.empty()
          ? embed::footnote_system({groups::Group::free(2), io::ring_from_json(json(cfg.coeff))})
          : io::system_from_json(read_input(cfg.in_path));
  const auto rep = srcsolve::truncated_kernel(sys, cfg.radius);
  doc["system"] = io::system_to_json(sys);
  doc["truncated_kernel"] = io::truncated_kernel_to_json(rep);
  for (const auto& v : rep.kernel) {
    if (!srcsolve::verify_solution(sys, v)) return kCheckFailed;
  }
  return kOk;
}

// {"group", "coeff"?, "H": [...], "K": [...]}.
int cmd_ideal(const RunConfig& cfg, json& doc) {
  const json in = read_input(cfg.in_path);
  groups::GroupPtr G;
  coeff::CoeffRing R = coeff::CoeffRing::integers();
  std::vector<groups::GroupElement> hg, kg;
  try {
    G = io::group_from_json(in.at("group"));
    if (in.contains("coeff")) R = io::ring_from_json(in.at("coeff"));
    for (const auto& e : in.at("H")) hg.push_back(io::element_from_json(*G, e));
    for (const auto& e : in.at("K")) kg.push_back(io::element_from_json(*G, e));
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, e.what());
  }
  const ideals::SubgroupHandle H(G, hg), K(G, kg);
  const auto rep = ideals::distinguish_subgroups(H, K, R, cfg.budget, cfg.seed);
  doc["group"] = io::group_to_json(*G);
  doc["H"] = {{"generators", in.at("H")}, {"index", H.index()}};
  doc["K"] = {{"generators", in.at("K")}, {"index", K.index()}};
  doc["report"] = io::distinguish_report_to_json(rep);
  bool ok = true;
  if (rep.h_in_k && rep.h_in_k->violations) ok = false;
  if (rep.k_in_h && rep.k_in_h->violations) ok = false;
  if (rep.witness && rep.witness_in_h == rep.witness_in_k) ok = false;
  return ok ? kOk : kCheckFailed;
}

int exit_for(const Error& e, const std::string& command) {
  switch (e.code()) {
    case ErrorCode::NotFound: return command == "theta" ? kSearchNotFound : kFolnerNotFound;
    case ErrorCode::RetryExhausted:
    case ErrorCode::LogicFault: return kCheckFailed;
    default: return kBadInput;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact solver and certifier for linear systems over group rings", "srcalg"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write the JSON result here instead of standard output");
    sub->add_option("--seed", cfg.seed, "Seed for every random choice");
    sub->add_flag("-v,--verbose", cfg.verbose, "Progress notes on standard error");
  };

  auto* solve = app.add_subcommand("solve", "Nonzero solution of an underdetermined system over an amenable group");
  solve->add_option("--in", cfg.in_path, "System JSON")->required();
  solve->add_option("--budget", cfg.budget, "Folner candidates to examine");
  add_common(solve);

  auto* folner = app.add_subcommand("folner", "Folner set search");
  folner->add_option("--in", cfg.in_path, "System JSON or {group, S, ratio}")->required();
  folner->add_option("--budget", cfg.budget, "Candidates to examine");
  add_common(folner);

  auto* theta = app.add_subcommand("theta", "Set system, generic matrices and truncated injectivity certificate");
  theta->add_option("--s", cfg.s_size, "Number of labels |S|");
  theta->add_option("--ymax", cfg.ymax, "Largest |Y| to search");
  theta->add_option("--field", cfg.field, "Characteristic of the base field K");
  theta->add_option("--field-degree", cfg.field_degree, "[K : F_p]");
  theta->add_option("--radius", cfg.radius, "Support radius for the certificate");
  theta->add_option("--log", cfg.log, "Logarithm in the size bound: natural or 2");
  theta->add_option("--b", cfg.b, "Comma-separated words b_s in F_2");
  add_common(theta);

  auto* gv = app.add_subcommand("graded-verify", "Strong grading, unit and polynomial-ring fixtures");
  gv->add_option("--bound", cfg.bound, "Coordinate bound for the unit search");
  gv->add_option("--radius", cfg.radius, "Support radius for the polynomial system");
  gv->add_option("--degree", cfg.degree, "Polynomial degree for the polynomial system");
  add_common(gv);

  auto* ec = app.add_subcommand("embed-cert", "Truncated kernel of a system (default: the F_2 augmentation map)");
  ec->add_option("--in", cfg.in_path, "System JSON");
  ec->add_option("--coeff", cfg.coeff, "Q or Z for the default system");
  ec->add_option("--radius", cfg.radius, "Support radius");
  add_common(ec);

  auto* ideal = app.add_subcommand("ideal", "Compare the right ideals I_H and I_K");
  ideal->add_option("--in", cfg.in_path, "{group, coeff, H, K} JSON")->required();
  ideal->add_option("--budget", cfg.budget, "Random samples per containment check");
  add_common(ideal);

  std::vector<std::string> argv_store{"srcalg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.verbose) err << "srcalg " << cfg.command << ": seed " << cfg.seed << "\n";
  if (cfg.command == "ideal" && !ideal->count("--budget")) cfg.budget = 100;

  try {
    json doc = envelope(cfg);
    int code = kBadInput;
    if (cfg.command == "solve") code = cmd_solve(cfg, doc);
    else if (cfg.command == "folner") code = cmd_folner(cfg, doc);
    else if (cfg.command == "theta") code = cmd_theta(cfg, doc);
    else if (cfg.command == "graded-verify") code = cmd_graded_verify(cfg, doc);
    else if (cfg.command == "embed-cert") code = cmd_embed_cert(cfg, doc);
    else if (cfg.command == "ideal") code = cmd_ideal(cfg, doc);
    if (cfg.command == "theta") doc["provenance"]["log"] = cfg.log;
    write_output(cfg, io::dump(doc), out);
    if (code != kOk) err << "srcalg " << cfg.command << ": a verification step failed\n";
    return code;
  } catch (const Error& e) {
    err << "srcalg " << cfg.command << ": " << e.what() << "\n";
    return exit_for(e, cfg.command);
  } catch (const std::exception& e) {
    err << "srcalg " << cfg.command << ": " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace srcalg::cli
