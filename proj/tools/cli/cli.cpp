#include "cli.hpp"

#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "modtheta/crystal.hpp"
#include "modtheta/errors.hpp"
#include "modtheta/galois.hpp"
#include "modtheta/io.hpp"
#include "modtheta/polygon.hpp"
#include "modtheta/random_datum.hpp"
#include "modtheta/schur.hpp"
#include "modtheta/theta.hpp"
#include "modtheta/weights.hpp"

namespace modtheta::cli {

namespace {

constexpr const char* kSchemaVersion = "1";

struct Options {
  std::string datum;
  std::string weight;
  std::string weight_file;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool lemma_literal = false;

  // schur
  int a = 0;
  int b = 0;
  Int e = 0;
  std::string kappa;
  std::string mu;
  std::string nu;
  std::string levi;
  bool brute = false;
  int trials = 20;

  // crystal verify
  int random = 0;

  // theta / galois
  std::vector<std::string> ops;
  std::string compare_tbar;
  std::string closure_tbar;
  std::string sigma;
  int depth = 1;
  std::size_t budget = 0;
  Int height = 1;
};

std::string S(Int v) { return std::to_string(v); }

Json strings(const std::vector<Int>& v) {
  Json out = Json::array();
  for (Int x : v) out.push_back(S(x));
  return out;
}

std::vector<Int> parse_tuple(const std::string& text) {
  std::vector<Int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      Int v = std::stoll(tok, &used);
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

ShimuraDatum need_datum(const Options& o) {
  if (o.datum.empty()) throw Error(ErrorCode::ParseError, "--datum is required");
  return load_datum_file(o.datum);
}

Weight need_weight(const ShimuraDatum& d, const Options& o) {
  if (!o.weight_file.empty()) {
    Json j;
    try {
      j = Json::parse(read_file(o.weight_file));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("invalid weight JSON: ") + e.what());
    }
    return weight_from_json(d, j);
  }
  return parse_weight(d, o.weight);
}

std::set<std::string> parse_sigma(const ShimuraDatum& d, const std::string& text) {
  std::set<std::string> out;
  if (text == "all") return {d.embeddings().begin(), d.embeddings().end()};
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    if (!d.contains(tok)) throw Error(ErrorCode::UnknownEmbedding, tok);
    out.insert(tok);
  }
  return out;
}

Json set_json(const std::set<std::string>& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
    out << path << ": ";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    out << "\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render(Json j, const std::string& format) {
  if (j.is_object()) j["schema_version"] = kSchemaVersion;
  if (format == "table") {
    std::ostringstream out;
    flatten(j, "", out);
    return out.str();
  }
  if (format == "dot") throw Error(ErrorCode::ParseError, "dot output is only available for theta cycles");
  return j.dump(2) + "\n";
}

// ---- datum ---------------------------------------------------------------

Json cmd_datum_dump(const Options& o) { return datum_to_json(need_datum(o)); }

Json cmd_datum_validate(const Options& o) {
  auto d = need_datum(o);
  Json up = Json::array();
  for (const auto& t : upsilon(d)) up.push_back(t);
  return Json{{"valid", true},
              {"embeddings", S(static_cast<Int>(d.embeddings().size()))},
              {"orbits", S(static_cast<Int>(d.orbits().size()))},
              {"upsilon", up}};
}

// ---- polygon -------------------------------------------------------------

Json cmd_polygon(const Options& o) {
  auto d = need_datum(o);
  Json polys = Json::array();
  std::vector<NewtonPolygon> all;
  for (int i = 0; i < static_cast<int>(d.orbits().size()); ++i) {
    auto poly = orbit_polygon(d, i);
    all.push_back(poly);
    Json slopes = Json::array();
    bool ordinary = true;
    for (const auto& s : poly.slopes) {
      slopes.push_back(to_string(s));
      ordinary = ordinary && (s == Rational(0) || s == Rational(1));
    }
    Json bps = Json::array();
    for (const auto& [x, y] : breakpoints(poly)) bps.push_back(Json::array({S(x), to_string(y)}));
    polys.push_back(Json{{"orbit", d.orbits()[i].members}, {"slopes", slopes}, {"ordinary", ordinary},
                         {"breakpoints", bps}});
  }
  Json amalgam = Json::array();
  for (const auto& s : amalgamate(all).slopes) amalgam.push_back(to_string(s));
  Json ranks = Json::object();
  for (const auto& t : d.embeddings()) ranks[t] = strings(filtration_ranks(d, t));
  return Json{{"polygons", polys}, {"amalgamated", amalgam}, {"ordinary", is_ordinary(d)}, {"filtration_ranks", ranks}};
}

// ---- classify ------------------------------------------------------------

Json cmd_classify(const Options& o) {
  auto d = need_datum(o);
  auto k = need_weight(d, o);
  auto f = classify(d, k);
  Json out{{"weight", weight_to_json(d, k)},
           {"scalar", f.scalar},
           {"parallel", f.parallel},
           {"positive", f.positive},
           {"supported_at", set_json(f.supported_at)},
           {"symmetric", f.symmetric},
           {"sum_symmetric", f.sum_symmetric},
           {"good", f.good},
           {"simple", f.simple}};
  if (is_nonnegative(k)) {
    auto st = weight_stats(d, k);
    Json per = Json::object();
    for (const auto& [t, c] : st.per_embedding)
      per[t] = Json{{"d", S(c.degree)}, {"norm", S(c.norm)}, {"r", c.r.get_str()}, {"dim", c.dim.get_str()}};
    out["stats"] = Json{{"size", S(st.total)}, {"per_embedding", per}};
    auto depth = admissible_depth(d, k);
    out["admissible_depth"] = depth ? Json(S(*depth)) : Json(nullptr);
  }
  return out;
}

// ---- schur ---------------------------------------------------------------

Json expansion_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms) {
    Json label = Json::array();
    for (const auto& block : t.label) label.push_back(strings(block));
    terms.push_back(Json{{"label", label}, {"mult", S(t.mult)}});
  }
  return Json{{"terms", terms}};
}

Json cmd_schur_dim(const Options& o) {
  auto kappa = parse_tuple(o.kappa);
  int a = o.a > 0 ? o.a : static_cast<int>(kappa.size());
  Json out{{"a", S(a)}, {"kappa", strings(kappa)}, {"dim", weyl_dim(a, kappa).get_str()}};
  if (o.brute) out["brute_force_dim"] = S(brute_force_dim(a, kappa));
  return out;
}

Json cmd_schur_lr(const Options& o) { return expansion_json(lr_multiply(parse_tuple(o.mu), parse_tuple(o.nu))); }

Json cmd_schur_branch(const Options& o) {
  auto kappa = parse_tuple(o.kappa);
  std::vector<int> blocks;
  for (Int x : parse_tuple(o.levi)) blocks.push_back(static_cast<int>(x));
  auto br = branch_to_levi(kappa, blocks);
  Json out = expansion_json(br.expansion);
  Json top = Json::array();
  for (const auto& block : br.top) top.push_back(strings(block));
  out["top"] = top;
  out["det_shift"] = S(br.det_shift);
  out["multiplicity_above_one"] = br.multiplicity_above_one;
  return out;
}

Json cmd_schur_cauchy(const Options& o) {
  auto out = expansion_json(cauchy_sym_power(o.e, o.a, o.b));
  out["total_dim"] = binomial(static_cast<Int>(o.a) * o.b + o.e - 1, o.e).get_str();
  return out;
}

Json cmd_schur_plethysm(const Options& o) {
  auto out = expansion_json(plethysm_sym_sym2(o.e, o.a));
  out["total_dim"] = binomial(static_cast<Int>(o.a) * (o.a + 1) / 2 + o.e - 1, o.e).get_str();
  return out;
}

Json cmd_schur_admissible(const Options& o) {
  auto d = need_datum(o);
  auto k = need_weight(d, o);
  auto depth = admissible_depth(d, k);
  return Json{{"admissible_depth", depth ? Json(S(*depth)) : Json(nullptr)},
              {"in_symmetric_power", in_symmetric_power(d, k)}};
}

Json cmd_schur_detcheck(const Options& o) {
  auto kappa = parse_tuple(o.kappa);
  int a = o.a > 0 ? o.a : static_cast<int>(kappa.size());
  bool ok = det_power_check(a, kappa, o.trials, o.seed);
  return Json{{"a", S(a)}, {"kappa", strings(kappa)}, {"trials", S(o.trials)}, {"holds", ok},
              {"r", tuple_r(kappa).get_str()}};
}

// ---- crystal -------------------------------------------------------------

Json cmd_crystal_show(const Options& o) {
  auto d = need_datum(o);
  Json orbits = Json::array();
  Json vals = Json::object(), c = Json::object(), a = Json::object(), ranks = Json::object();
  Json discrepancies = Json::array();
  for (int i = 0; i < static_cast<int>(d.orbits().size()); ++i) {
    auto cr = standard_crystal(d, i);
    Json eps = Json::array();
    for (const auto& row : cr.epsilon) {
      Json r = Json::array();
      for (int x : row) r.push_back(S(x));
      eps.push_back(r);
    }
    orbits.push_back(Json{{"members", cr.members}, {"epsilon", eps}});
    for (const auto& t : cr.members) {
      vals[t] = strings(phi_valuations(cr, t));
      ranks[t] = strings(slope_graded_ranks(cr, t));
    }
  }
  for (const auto& t : d.embeddings()) {
    if (d.f(t) == 0) continue;
    Int oracle = c_exponent(d, t);
    Int literal = c_exponent_literal(d, t);
    c[t] = S(o.lemma_literal ? literal : oracle);
    if (literal != oracle) discrepancies.push_back(Json{{"tau", t}, {"literal", S(literal)}, {"oracle", S(oracle)}});
    auto m = d.min_positive(d.orbit_of(t));
    if (m && d.f(t) == *m) a[t] = S(a_exponent(d, t));
  }
  Json out{{"orbits", orbits}, {"valuations", vals}, {"c", c}, {"a", a}, {"slope_graded_ranks", ranks},
           {"c_formula", o.lemma_literal ? "orbit-sum" : "valuation"}};
  if (o.lemma_literal) out["discrepancies"] = discrepancies;
  return out;
}

struct VerifyTally {
  Int checks = 0;
  Json failures = Json::array();
  Json literal = Json::array();
};

void verify_datum(const ShimuraDatum& d, const std::string& name, bool lemma_literal, VerifyTally& tally) {
  auto fail = [&](const std::string& what) { tally.failures.push_back(name + ": " + what); };
  auto check = [&](bool ok, const std::string& what) {
    ++tally.checks;
    if (!ok) fail(what);
  };
  for (int i = 0; i < static_cast<int>(d.orbits().size()); ++i) {
    auto cr = standard_crystal(d, i);
    Int fsum = 0, vsum = 0;
    for (const auto& t : cr.members) fsum += d.f(t);
    for (Int v : cr.cycle_valuations()) vsum += v;
    check(fsum == vsum, "crystal slope sum on orbit " + cr.members.front());
    for (const auto& t : cr.members) {
      check(phi_valuations(cr, t) == slope_counts(d, t), "phi valuations vs slope counts at " + t);
      auto ranks = slope_graded_ranks(cr, t);
      check(ranks == filtration_ranks(d, t), "filtration ranks at " + t);
      Int rs = 0;
      for (Int r : ranks) rs += r;
      check(rs == d.f(t), "ranks sum at " + t);
      if (d.f(t) == 0) continue;
      Int c = c_exponent(d, t);
      check(c == c_exponent_slope_sum(d, t), "c exponent vs slope sum at " + t);
      if (d.n() <= 4) check(c == c_exponent_dense(d, t), "c exponent vs dense path at " + t);
      auto m = d.min_positive(i);
      if (m && d.f(t) == *m) {
        Int a = a_exponent(d, t);
        check(c == d.f(t) * a, "c = f a at " + t);
        check(a == phi_valuations(standard_crystal(d, d.orbit_of(d.star(t))), d.star(t)).front(),
              "a exponent vs smallest valuation at " + t);
        for (int j = 1; j <= static_cast<int>(cr.members.size()); ++j)
          check(verschiebung_image_check(d, t, j), "Verschiebung image at " + t + ", j=" + S(j));
      }
      if (lemma_literal) {
        Int lit = c_exponent_literal(d, t);
        if (lit != c) tally.literal.push_back(Json{{"datum", name}, {"tau", t}, {"literal", S(lit)}, {"oracle", S(c)}});
      }
    }
  }
}

Json cmd_crystal_verify(const Options& o) {
  VerifyTally tally;
  if (!o.datum.empty()) verify_datum(need_datum(o), o.datum, o.lemma_literal, tally);
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.random; ++i) verify_datum(random_case_a_datum(rng), "random#" + S(i), o.lemma_literal, tally);
  }
  if (o.datum.empty() && o.random <= 0) throw Error(ErrorCode::ParseError, "--datum or --random is required");
  Json out{{"checks", S(tally.checks)}, {"failures", tally.failures}, {"ok", tally.failures.empty()}};
  if (o.lemma_literal) out["lemma_literal_discrepancies"] = tally.literal;
  return out;
}

// ---- theta ---------------------------------------------------------------

std::vector<OperatorDescriptor> parse_ops(const ShimuraDatum& d, const Options& o) {
  std::vector<OperatorDescriptor> ops;
  for (const auto& text : o.ops) ops.push_back(parse_operator(d, text));
  return ops;
}

Json cmd_theta_apply(const Options& o) {
  auto d = need_datum(o);
  auto k = need_weight(d, o);
  auto ops = parse_ops(d, o);
  if (ops.empty()) throw Error(ErrorCode::ParseError, "--op is required");
  auto results = compose(d, ops, k);
  Json steps = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    Json step{{"op", label(d, ops[i])},
              {"target", weight_to_json(d, r.target)},
              {"lambda_part", weight_to_json(d, r.lambda_part)},
              {"hasse_part", weight_to_json(d, r.hasse_part)},
              {"twist_part", weight_to_json(d, r.twist_part)},
              {"zero_marker", r.zero_marker}};
    if (!r.witnesses.empty()) {
      step["witnesses"] = r.witnesses;
      step["chosen_witness"] = r.chosen_witness;
    }
    steps.push_back(step);
  }
  return Json{{"source", weight_to_json(d, k)},
              {"steps", steps},
              {"target", weight_to_json(d, results.back().target)},
              {"target_text", to_text(d, results.back().target)},
              {"zero_marker", results.back().zero_marker}};
}

Json cmd_theta_check(const Options& o) {
  auto d = need_datum(o);
  auto k = need_weight(d, o);
  Json out = Json::object();
  Json checks = Json::array();
  for (const auto& op : parse_ops(d, o)) {
    auto a = applicable(d, op, k);
    checks.push_back(Json{{"op", label(d, op)}, {"applicable", a.ok}, {"reason", a.reason}});
  }
  out["applicability"] = checks;
  if (!o.compare_tbar.empty()) {
    auto rep = compare_weight_routes(d, k, o.compare_tbar);
    out["consistency"] = Json{{"consistent", rep.consistent},
                              {"theta_route", weight_to_json(d, rep.theta_route)},
                              {"omol_route", weight_to_json(d, rep.omol_route)}};
  }
  if (!o.closure_tbar.empty()) {
    auto sigma = o.sigma.empty() ? parse_sigma(d, "all") : parse_sigma(d, o.sigma);
    out["tilde_closure"] = tilde_closure_check(d, sigma, k, o.closure_tbar);
  }
  return out;
}

CommandResult cmd_theta_cycles(const Options& o) {
  auto d = need_datum(o);
  auto k = need_weight(d, o);
  auto gens = parse_ops(d, o);
  auto g = explore_cycles(d, k, gens, o.depth, o.budget > 0 ? o.budget : default_node_budget());
  CommandResult r;
  if (g.truncated) r.diagnostics.push_back("node budget reached; graph truncated");
  if (o.format == "dot") {
    r.payload = to_dot(d, g);
    return r;
  }
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& w : g.nodes) nodes.push_back(to_text(d, w));
  for (const auto& e : g.edges)
    edges.push_back(Json{{"from", S(static_cast<Int>(e.from))}, {"to", S(static_cast<Int>(e.to))}, {"label", e.label}});
  r.payload = render(Json{{"nodes", nodes}, {"edges", edges}, {"truncated", g.truncated}}, o.format);
  return r;
}

// ---- galois --------------------------------------------------------------

Json cmd_galois_orbit(const Options& o) {
  auto d = need_datum(o);
  auto k = need_weight(d, o);
  auto gens = o.ops.empty() ? default_galois_generators(d, o.height) : parse_ops(d, o);
  auto orbit = modular_weight_orbit(d, k, o.depth, gens, o.budget > 0 ? o.budget : default_node_budget());
  Json states = Json::array();
  for (const auto& s : orbit.states)
    states.push_back(Json{{"weight", weight_to_json(d, s.weight)},
                          {"weight_text", to_text(d, s.weight)},
                          {"exponent", S(s.cyclo_exponent)},
                          {"trail", s.trail},
                          {"note", kNonvanishingNote}});
  return Json{{"states", states}, {"truncated", orbit.truncated}};
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
  Options o;
  CLI::App app{"Weight calculus for mod-p theta operators", "modtheta"};
  app.require_subcommand(1);
  std::function<CommandResult()> action;

  auto json_action = [&](std::function<Json(const Options&)> f) {
    return [&, f] { action = [&, f] { return CommandResult{kExitOk, render(f(o), o.format), {}}; }; };
  };
  auto common = [&](CLI::App* sub, bool weight) {
    sub->add_option("--datum", o.datum, "Datum file (key/value text or canonical JSON)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));
    if (weight) {
      sub->add_option("--weight", o.weight, "Weight, e.g. \"tau:2,2;taustar:5\"");
      sub->add_option("--weight-file", o.weight_file, "Weight as canonical JSON");
    }
  };

  auto* datum = app.add_subcommand("datum", "Validate or dump a datum");
  datum->require_subcommand(1);
  auto* dump = datum->add_subcommand("dump", "Canonical JSON echo");
  common(dump, false);
  dump->callback(json_action(cmd_datum_dump));
  auto* validate = datum->add_subcommand("validate", "Validate and summarize");
  common(validate, false);
  validate->callback(json_action(cmd_datum_validate));

  auto* polygon = app.add_subcommand("polygon", "Newton polygons and slope filtration ranks");
  common(polygon, false);
  polygon->callback(json_action(cmd_polygon));

  auto* cls = app.add_subcommand("classify", "Weight predicates and statistics");
  common(cls, true);
  cls->callback(json_action(cmd_classify));

  auto* schur = app.add_subcommand("schur", "Schur functor combinatorics");
  schur->require_subcommand(1);
  auto* dim = schur->add_subcommand("dim", "Weyl dimension");
  common(dim, false);
  dim->add_option("--a", o.a, "Rank (defaults to the tuple length)");
  dim->add_option("--kappa", o.kappa, "Dominant tuple, e.g. 2,1,0")->required();
  dim->add_flag("--brute", o.brute, "Also compute the Young symmetrizer rank");
  dim->callback(json_action(cmd_schur_dim));
  auto* lr = schur->add_subcommand("lr", "Littlewood-Richardson product");
  common(lr, false);
  lr->add_option("--mu", o.mu, "Partition")->required();
  lr->add_option("--nu", o.nu, "Partition")->required();
  lr->callback(json_action(cmd_schur_lr));
  auto* branch = schur->add_subcommand("branch", "Restriction to a Levi subgroup");
  common(branch, false);
  branch->add_option("--kappa", o.kappa, "Dominant tuple")->required();
  branch->add_option("--levi", o.levi, "Block sizes, e.g. 2,1")->required();
  branch->callback(json_action(cmd_schur_branch));
  auto* cauchy = schur->add_subcommand("cauchy", "Sym^e(V_a (x) V_b)");
  common(cauchy, false);
  cauchy->add_option("--e", o.e)->required();
  cauchy->add_option("--a", o.a)->required();
  cauchy->add_option("--b", o.b)->required();
  cauchy->callback(json_action(cmd_schur_cauchy));
  auto* pleth = schur->add_subcommand("plethysm", "Sym^e(Sym^2 V_a)");
  common(pleth, false);
  pleth->add_option("--e", o.e)->required();
  pleth->add_option("--a", o.a)->required();
  pleth->callback(json_action(cmd_schur_plethysm));
  auto* adm = schur->add_subcommand("admissible", "Admissibility depth of a weight");
  common(adm, true);
  adm->callback(json_action(cmd_schur_admissible));
  auto* det = schur->add_subcommand("detcheck", "Randomized det(S_kappa f) = det(f)^r check");
  common(det, false);
  det->add_option("--a", o.a);
  det->add_option("--kappa", o.kappa)->required();
  det->add_option("--trials", o.trials);
  det->add_option("--seed", o.seed);
  det->callback(json_action(cmd_schur_detcheck));

  auto* crystal = app.add_subcommand("crystal", "Standard mu-ordinary crystal");
  crystal->require_subcommand(1);
  auto* show = crystal->add_subcommand("show", "Exponent matrix, valuations and Hasse exponents");
  common(show, false);
  show->add_flag("--lemma-literal", o.lemma_literal, "Report c from the orbit-sum formula");
  show->callback(json_action(cmd_crystal_show));
  auto* verify = crystal->add_subcommand("verify", "Check valuation identities");
  common(verify, false);
  verify->add_flag("--lemma-literal", o.lemma_literal, "Also report orbit-sum discrepancies");
  verify->add_option("--random", o.random, "Number of random case-A data to check");
  verify->add_option("--seed", o.seed, "Seed for --random");
  verify->callback([&] {
    action = [&] {
      Json j = cmd_crystal_verify(o);
      bool ok = j["ok"].get<bool>();
      return CommandResult{ok ? kExitOk : kExitDomain, render(j, o.format), {}};
    };
  });

  auto* theta = app.add_subcommand("theta", "Theta operator weight maps");
  theta->require_subcommand(1);
  auto* tapply = theta->add_subcommand("apply", "Apply operators left to right");
  common(tapply, true);
  tapply->add_option("--op", o.ops, "Operator, e.g. \"ThetaBasic(sigma={tau,taustar}, tbar=tau)\"");
  tapply->callback(json_action(cmd_theta_apply));
  auto* tcheck = theta->add_subcommand("check", "Applicability and consistency checks");
  common(tcheck, true);
  tcheck->add_option("--op", o.ops, "Operator to test for applicability");
  tcheck->add_option("--compare", o.compare_tbar, "Compare the two weight routes at this tbar");
  tcheck->add_option("--closure", o.closure_tbar, "Check closure of the tilde operator at this tbar");
  tcheck->add_option("--sigma", o.sigma, "Comma-separated Sigma for --closure (default all)");
  tcheck->callback(json_action(cmd_theta_check));
  auto* cycles = theta->add_subcommand("cycles", "Breadth-first theta cycle graph");
  common(cycles, true);
  cycles->add_option("--gen", o.ops, "Generator operator (repeatable)");
  cycles->add_option("--depth", o.depth, "BFS depth");
  cycles->add_option("--budget", o.budget, "Node budget (default THETA_NODE_BUDGET or 10000)");
  cycles->callback([&] { action = [&] { return cmd_theta_cycles(o); }; });

  auto* galois = app.add_subcommand("galois", "Cyclotomic twist bookkeeping");
  galois->require_subcommand(1);
  auto* gorbit = galois->add_subcommand("orbit", "Modular weights reachable by theta operators");
  common(gorbit, true);
  gorbit->add_option("--gen", o.ops, "Generator operator (repeatable; default set if omitted)");
  gorbit->add_option("--depth", o.depth, "BFS depth");
  gorbit->add_option("--height", o.height, "Entry bound for default lambda generators");
  gorbit->add_option("--budget", o.budget, "State budget");
  gorbit->callback(json_action(cmd_galois_orbit));

  std::vector<std::string> args;
  args.push_back("modtheta");
  args.insert(args.end(), argv.begin(), argv.end());
  std::vector<char*> cargs;
  for (auto& s : args) cargs.push_back(s.data());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    CommandResult r;
    r.payload = out.str();
    if (code == 0) return r;
    r.exit_code = kExitUsage;
    if (!err.str().empty()) r.diagnostics.push_back(err.str());
    if (argv.empty()) r.payload = app.help();
    return r;
  }

  try {
    return action();
  } catch (const Error& e) {
    CommandResult r;
    r.exit_code = e.code() == ErrorCode::ParseError ? kExitParse : kExitDomain;
    r.diagnostics.push_back(e.what());
    return r;
  } catch (const std::exception& e) {
    CommandResult r;
    r.exit_code = kExitDomain;
    r.diagnostics.push_back(std::string("internal error: ") + e.what());
    return r;
  }
}

}  // namespace modtheta::cli
