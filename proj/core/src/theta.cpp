#include "modtheta/theta.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

#include "modtheta/errors.hpp"
#include "modtheta/schur.hpp"

namespace modtheta {

const char* to_string(OpKind kind) {
  switch (kind) {
    case OpKind::MaassShimura: return "MaassShimura";
    case OpKind::ThetaBasic: return "ThetaBasic";
    case OpKind::Theta: return "Theta";
    case OpKind::ThetaOMOL: return "ThetaOMOL";
    case OpKind::ThetaTildeBasic: return "ThetaTildeBasic";
    case OpKind::ThetaTilde: return "ThetaTilde";
    case OpKind::HasseMult: return "HasseMult";
    case OpKind::MuOrdinaryProjector: return "MuOrdinaryProjector";
  }
  return "Unknown";
}

namespace {

std::string set_text(const std::set<std::string>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ",";
    out += x;
    first = false;
  }
  return out + "}";
}

Applicability yes() { return {true, ""}; }
Applicability no(std::string reason) { return {false, std::move(reason)}; }

bool orbit_avoids(const ShimuraDatum& d, const std::string& tau, bool avoid_n) {
  for (int v : d.orbit_signature(d.orbit_of(tau)))
    if (v == 0 || (avoid_n && v == d.n())) return false;
  return true;
}

std::optional<std::string> unknown_id(const ShimuraDatum& d, const OperatorDescriptor& op) {
  for (const auto& t : op.sigma)
    if (!d.contains(t)) return t;
  for (const auto& [t, b] : op.hasse_b)
    if (!d.contains(t)) return t;
  if (!op.tbar.empty() && !d.contains(op.tbar)) return op.tbar;
  return std::nullopt;
}

// tbar admits V^2: in the CM type with both signatures positive (case A).
std::optional<std::string> tbar_problem(const ShimuraDatum& d, const std::string& tbar) {
  if (tbar.empty()) return "tbar is missing";
  if (d.kind() == Case::C) return std::nullopt;
  if (!d.in_cm_type(tbar)) return "tbar is not in the CM type";
  if (d.f(tbar) == 0 || d.f(d.star(tbar)) == 0) return "V^2 at tbar is zero";
  return std::nullopt;
}

Int half_size(const Weight& lambda) {
  Int s = 0;
  for (const auto& [t, c] : lambda.components) s = checked_add(s, tuple_sum(c));
  return s / 2;
}

Int weight_size(const Weight& w) {
  Int s = 0;
  for (const auto& [t, c] : w.components) s = checked_add(s, tuple_sum(c));
  return s;
}

std::vector<std::string> sigma_cm(const ShimuraDatum& d, const std::set<std::string>& sigma) {
  std::vector<std::string> out;
  for (const auto& t : d.cm_type())
    if (sigma.count(t)) out.push_back(t);
  return out;
}

struct ThetaWitness {
  std::string name;
  Weight lambda_prime;
  Weight hasse_extra;
};

// Candidates lambda' in {lambda} u {lambda - delta(tau) : tau in Sigma_F n Sigma},
// each required to be a positive good weight.
std::vector<ThetaWitness> theta_witnesses(const ShimuraDatum& d, const OperatorDescriptor& op) {
  std::vector<ThetaWitness> out;
  auto extra = [&](const Weight& lp) {
    std::map<std::string, Int> b;
    for (const auto& t : d.embeddings()) b[t] = tuple_norm(lp.at(t));
    return hasse_weight(d, b);
  };
  const Weight& lambda = *op.lambda;
  if (is_positive(lambda) && is_good(d, lambda)) out.push_back({"lambda", lambda, extra(lambda)});
  for (const auto& t : sigma_cm(d, op.sigma)) {
    if (tbar_problem(d, t)) continue;
    auto lp = subtract_positive(d, lambda, delta(d, t));
    if (lp && is_positive(*lp) && is_good(d, *lp)) out.push_back({t, *lp, extra(*lp)});
  }
  return out;
}

}  // namespace

std::string label(const ShimuraDatum& d, const OperatorDescriptor& op) {
  std::string out = to_string(op.kind);
  std::vector<std::string> args;
  auto lam = [&]() { return "lambda={" + to_text(d, *op.lambda) + "}"; };
  switch (op.kind) {
    case OpKind::MaassShimura:
      args.push_back(lam());
      break;
    case OpKind::ThetaBasic:
    case OpKind::ThetaTildeBasic:
      args.push_back("sigma=" + set_text(op.sigma));
      args.push_back("tbar=" + op.tbar);
      break;
    case OpKind::Theta:
      args.push_back("sigma=" + set_text(op.sigma));
      args.push_back(lam());
      args.push_back(std::string("variant=") + (op.variant == ThetaVariant::General ? "general" : "allgood"));
      break;
    case OpKind::ThetaOMOL:
    case OpKind::ThetaTilde:
      args.push_back("sigma=" + set_text(op.sigma));
      args.push_back(lam());
      break;
    case OpKind::HasseMult:
      if (op.hasse_b.empty()) {
        args.push_back("sigma=" + set_text(op.sigma));
      } else {
        std::string b;
        for (const auto& [t, v] : op.hasse_b) b += (b.empty() ? "" : ";") + t + ":" + std::to_string(v);
        args.push_back("b={" + b + "}");
      }
      break;
    case OpKind::MuOrdinaryProjector:
      break;
  }
  out += "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i];
  return out + ")";
}

bool is_raising_symmetric(const ShimuraDatum& d, const Weight& lambda) {
  return is_nonnegative(lambda) && is_symmetric(d, lambda) && in_symmetric_power(d, lambda);
}

Applicability applicable(const ShimuraDatum& d, const OperatorDescriptor& op, const Weight& kappa) {
  if (auto bad = unknown_id(d, op)) return no("unknown embedding " + *bad);
  const bool needs_lambda = op.kind == OpKind::MaassShimura || op.kind == OpKind::Theta ||
                            op.kind == OpKind::ThetaOMOL || op.kind == OpKind::ThetaTilde;
  if (needs_lambda && !op.lambda) return no("lambda is missing");

  switch (op.kind) {
    case OpKind::MaassShimura:
      if (!is_symmetric(d, *op.lambda)) return no("lambda is not symmetric");
      if (!is_raising_symmetric(d, *op.lambda)) return no("lambda is not in a symmetric power of V^2");
      return yes();

    case OpKind::ThetaBasic:
      if (auto p = tbar_problem(d, op.tbar)) return no(*p);
      if (!is_good(d, kappa)) return no("kappa is not good");
      if (!supported_at(kappa, op.sigma)) return no("kappa is not supported at Sigma");
      return yes();

    case OpKind::Theta: {
      const Weight& lambda = *op.lambda;
      if (!is_positive(lambda)) return no("lambda is not positive");
      if (!is_raising_symmetric(d, lambda)) return no("lambda is not symmetric");
      if (!supported_at(lambda, op.sigma)) return no("lambda is not supported at Sigma");
      if (!is_good(d, kappa)) return no("kappa is not good");
      if (!supported_at(kappa, op.sigma)) return no("kappa is not supported at Sigma");
      if (op.variant == ThetaVariant::AllGood) {
        for (const auto& t : sigma_cm(d, op.sigma)) {
          if (tbar_problem(d, t)) continue;
          if (!is_good(d, delta(d, t))) return no("delta(" + t + ") is not good");
        }
        return yes();
      }
      if (theta_witnesses(d, op).empty()) return no("lambda and lambda-delta(tau) not good");
      return yes();
    }

    case OpKind::ThetaOMOL: {
      for (const auto& t : op.sigma)
        if (!orbit_avoids(d, t, false)) return no("f vanishes on the orbit of " + t);
      const Weight& lambda = *op.lambda;
      if (!is_raising_symmetric(d, lambda)) return no("lambda is not symmetric");
      if (!is_simple(d, lambda)) return no("lambda is not simple");
      if (!supported_at(lambda, op.sigma)) return no("lambda is not supported at Sigma");
      if (!is_simple(d, kappa)) return no("kappa is not simple");
      if (!supported_at(kappa, op.sigma)) return no("kappa is not supported at Sigma");
      return yes();
    }

    case OpKind::ThetaTildeBasic:
      if (upsilon(d).empty()) return no("Upsilon is empty");
      if (auto p = tbar_problem(d, op.tbar)) return no(*p);
      if (!orbit_avoids(d, op.tbar, true)) return no("f takes the value 0 or n on the orbit of tbar");
      if (!is_good(d, kappa)) return no("kappa is not good");
      if (!supported_at(kappa, op.sigma)) return no("kappa is not supported at Sigma");
      return yes();

    case OpKind::ThetaTilde: {
      auto ups = upsilon(d);
      if (ups.empty()) return no("Upsilon is empty");
      for (const auto& t : ups)
        if (!op.sigma.count(t)) return no("Upsilon is not contained in Sigma");
      const Weight& lambda = *op.lambda;
      if (!is_raising_symmetric(d, lambda)) return no("lambda is not symmetric");
      if (!is_simple(d, lambda)) return no("lambda is not simple");
      try {
        upsilon_twist(d, lambda);
      } catch (const Error& e) {
        return no(std::string("Upsilon-twist undefined: ") + e.what());
      }
      if (!is_good(d, kappa)) return no("kappa is not good");
      if (!supported_at(kappa, op.sigma)) return no("kappa is not supported at Sigma");
      return yes();
    }

    case OpKind::HasseMult:
    case OpKind::MuOrdinaryProjector:
      return yes();
  }
  return no("unknown operator");
}

WeightMapResult apply(const ShimuraDatum& d, const OperatorDescriptor& op, const Weight& kappa) {
  auto ok = applicable(d, op, kappa);
  if (!ok.ok) throw Error(ErrorCode::NotApplicable, label(d, op) + ": " + ok.reason);
  WeightMapResult r;
  r.source = kappa;
  r.lambda_part = zero_weight(d);
  r.hasse_part = zero_weight(d);
  r.twist_part = zero_weight(d);

  switch (op.kind) {
    case OpKind::MaassShimura:
    case OpKind::ThetaOMOL:
      r.lambda_part = *op.lambda;
      break;
    case OpKind::ThetaBasic:
      r.lambda_part = delta(d, op.tbar);
      r.hasse_part = hasse_weight(d, op.sigma);
      break;
    case OpKind::Theta: {
      r.lambda_part = *op.lambda;
      r.hasse_part = scale(d, hasse_weight(d, op.sigma), half_size(*op.lambda));
      if (op.variant == ThetaVariant::General) {
        // lambda' = lambda when lambda is good; otherwise the tau witness with the
        // least added Hasse weight, ties resolved by CM-type order.
        auto ws = theta_witnesses(d, op);
        const ThetaWitness* best = nullptr;
        for (const auto& w : ws) {
          r.witnesses.push_back(w.name);
          if (best && best->name == "lambda") continue;
          if (!best || w.name == "lambda" || weight_size(w.hasse_extra) < weight_size(best->hasse_extra)) best = &w;
        }
        r.chosen_witness = best->name;
        r.hasse_part = add(d, r.hasse_part, best->hasse_extra);
      }
      break;
    }
    case OpKind::ThetaTildeBasic:
      r.hasse_part = hasse_weight(d, op.sigma);
      r.twist_part = delta_twist(d, op.tbar);
      break;
    case OpKind::ThetaTilde:
      r.hasse_part = scale(d, hasse_weight(d, op.sigma), half_size(*op.lambda));
      r.twist_part = upsilon_twist(d, *op.lambda);
      break;
    case OpKind::HasseMult:
      r.hasse_part = op.hasse_b.empty() ? hasse_weight(d, op.sigma) : hasse_weight(d, op.hasse_b);
      break;
    case OpKind::MuOrdinaryProjector:
      break;
  }
  r.target = add(d, add(d, add(d, kappa, r.lambda_part), r.hasse_part), r.twist_part);
  return r;
}

std::vector<WeightMapResult> compose(const ShimuraDatum& d, const std::vector<OperatorDescriptor>& ops,
                                     const Weight& kappa) {
  std::vector<WeightMapResult> out;
  Weight cur = kappa;
  bool zero = false;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    auto r = apply(d, ops[i], cur);
    if (ops[i].kind == OpKind::MuOrdinaryProjector && i > 0 && ops[i - 1].kind == OpKind::MaassShimura) zero = true;
    r.zero_marker = zero;
    cur = r.target;
    out.push_back(std::move(r));
  }
  return out;
}

ConsistencyReport compare_weight_routes(const ShimuraDatum& d, const Weight& kappa, const std::string& tbar) {
  auto ups = upsilon(d);
  std::set<std::string> ups_set(ups.begin(), ups.end());
  if (!supported_at(kappa, ups_set)) throw Error(ErrorCode::NotSupported, "kappa is not supported at Upsilon");
  if (!is_nonnegative(kappa)) throw Error(ErrorCode::NotPositive, "kappa has negative entries");
  const std::set<std::string> ups0 = support(kappa);

  // Theta route: Theta_{Upsilon_0, tbar} followed by E^{max(r - 1, 0)} at Upsilon_0.
  OperatorDescriptor basic;
  basic.kind = OpKind::ThetaBasic;
  basic.sigma = ups0;
  basic.tbar = tbar;
  std::map<std::string, Int> lowered;
  for (const auto& t : ups0) lowered[t] = std::max<Int>(to_int(tuple_r(kappa.at(t))) - 1, 0);
  ConsistencyReport rep;
  rep.theta_route = add(d, apply(d, basic, kappa).target, hasse_weight(d, lowered));

  // OMOL route: the graded operator adds delta(tbar); the adjugate of the
  // projection contributes E^{r(kappa)}.
  std::map<std::string, Int> full;
  for (const auto& t : d.embeddings()) full[t] = to_int(tuple_r(kappa.at(t)));
  rep.omol_route = add(d, add(d, kappa, delta(d, tbar)), hasse_weight(d, full));
  rep.consistent = rep.theta_route == rep.omol_route;
  return rep;
}

bool compare_weight_consistency(const ShimuraDatum& d, const Weight& kappa, const std::string& tbar) {
  return compare_weight_routes(d, kappa, tbar).consistent;
}

bool tilde_closure_check(const ShimuraDatum& d, const std::set<std::string>& sigma, const Weight& kappa,
                         const std::string& tbar) {
  auto ups = upsilon(d);
  if (ups.empty()) throw Error(ErrorCode::PreconditionViolated, "Upsilon is empty");
  for (const auto& t : ups)
    if (!sigma.count(t)) throw Error(ErrorCode::PreconditionViolated, "Sigma does not contain Upsilon");
  if (!is_good(d, kappa) || !supported_at(kappa, sigma))
    throw Error(ErrorCode::PreconditionViolated, "kappa must be good and supported at Sigma");
  if (auto p = tbar_problem(d, tbar)) throw Error(ErrorCode::PreconditionViolated, *p);
  Weight next = add(d, add(d, kappa, hasse_weight(d, sigma)), delta_twist(d, tbar));
  return is_good(d, next) && supported_at(next, sigma);
}

std::size_t default_node_budget() {
  if (const char* env = std::getenv("THETA_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

CycleGraph explore_cycles(const ShimuraDatum& d, const Weight& kappa0, const std::vector<OperatorDescriptor>& generators,
                          int depth, std::size_t node_budget) {
  if (depth < 0) throw Error(ErrorCode::PreconditionViolated, "depth must be non-negative");
  CycleGraph g;
  std::map<Weight, std::size_t> index;
  g.nodes.push_back(kappa0);
  index[kappa0] = 0;
  std::vector<std::string> labels;
  for (const auto& op : generators) labels.push_back(label(d, op));

  // Successors of one node, one optional target per generator.
  auto expand = [&](const Weight& w) {
    std::vector<std::optional<Weight>> out(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (!applicable(d, generators[i], w).ok) continue;
      try {
        out[i] = apply(d, generators[i], w).target;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Overflow) throw;
      }
    }
    return out;
  };

  std::vector<std::size_t> frontier{0};
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<std::vector<std::optional<Weight>>> succ(frontier.size());
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (frontier.size() + workers - 1) / workers;
    for (std::size_t start = 0; start < frontier.size(); start += chunk) {
      std::size_t stop = std::min(frontier.size(), start + chunk);
      jobs.push_back(std::async(std::launch::async, [&, start, stop] {
        for (std::size_t i = start; i < stop; ++i) succ[i] = expand(g.nodes[frontier[i]]);
      }));
    }
    for (auto& j : jobs) j.get();

    // Deterministic merge: frontier order, then generator order.
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (std::size_t k = 0; k < generators.size(); ++k) {
        if (!succ[i][k]) {
          continue;
        }
        const Weight& target = *succ[i][k];
        auto it = index.find(target);
        std::size_t to;
        if (it != index.end()) {
          to = it->second;
        } else {
          if (g.nodes.size() >= node_budget) {
            g.truncated = true;
            continue;
          }
          to = g.nodes.size();
          g.nodes.push_back(target);
          index[target] = to;
          next.push_back(to);
        }
        g.edges.push_back({frontier[i], to, labels[k]});
      }
    }
    frontier = std::move(next);
  }
  return g;
}

std::string to_dot(const ShimuraDatum& d, const CycleGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph {\n";
  for (const auto& w : g.nodes) out += "  " + quote(to_text(d, w)) + ";\n";
  for (const auto& e : g.edges)
    out += "  " + quote(to_text(d, g.nodes[e.from])) + " -> " + quote(to_text(d, g.nodes[e.to])) +
           " [label=" + quote(e.label) + "];\n";
  return out + "}\n";
}

}  // namespace modtheta
