#include "modtheta/galois.hpp"

#include <functional>
#include <map>

#include "modtheta/errors.hpp"

namespace modtheta {

Int hecke_exponent(const ShimuraDatum& d, const Weight& lambda) {
  if (!is_raising_symmetric(d, lambda)) throw Error(ErrorCode::NotSymmetric, "lambda is not symmetric");
  Int s = 0;
  for (const auto& [t, c] : lambda.components) s = checked_add(s, tuple_sum(c));
  if (s % 2 != 0) throw std::logic_error("symmetric weight of odd size");
  return s / 2;
}

TwistState galois_edge(const ShimuraDatum& d, const TwistState& state, const OperatorDescriptor& op) {
  Int step = 0;
  switch (op.kind) {
    case OpKind::Theta:
    case OpKind::ThetaTilde:
      if (!op.lambda) throw Error(ErrorCode::NotApplicable, "lambda is missing");
      step = hecke_exponent(d, *op.lambda);
      break;
    case OpKind::ThetaBasic:
    case OpKind::ThetaTildeBasic:
      step = hecke_exponent(d, delta(d, op.tbar));
      break;
    case OpKind::HasseMult:
      break;
    default:
      throw Error(ErrorCode::NotApplicable, std::string(to_string(op.kind)) + " has no Galois edge");
  }
  auto r = apply(d, op, state.weight);
  TwistState next;
  next.weight = r.target;
  next.cyclo_exponent = checked_add(state.cyclo_exponent, step);
  next.trail = state.trail;
  next.trail.push_back(label(d, op));
  return next;
}

std::vector<OperatorDescriptor> default_galois_generators(const ShimuraDatum& d, Int height) {
  std::vector<OperatorDescriptor> out;
  const std::set<std::string> all(d.embeddings().begin(), d.embeddings().end());
  for (const auto& t : d.embeddings()) {
    OperatorDescriptor h;
    h.kind = OpKind::HasseMult;
    h.sigma = {t};
    out.push_back(h);
  }
  auto ups = upsilon(d);
  for (const auto& t : d.cm_type()) {
    if (d.kind() == Case::A && (d.f(t) == 0 || d.f(d.star(t)) == 0)) continue;
    OperatorDescriptor b;
    b.kind = OpKind::ThetaBasic;
    b.sigma = all;
    b.tbar = t;
    out.push_back(b);
    bool avoids = true;
    for (int v : d.orbit_signature(d.orbit_of(t))) avoids = avoids && v != 0 && v != d.n();
    if (!ups.empty() && avoids) {
      b.kind = OpKind::ThetaTildeBasic;
      out.push_back(b);
    }
  }
  // Symmetric lambda on one pair: equal partitions mu at tau and tau*.
  for (const auto& t : d.cm_type()) {
    const std::string& s = d.star(t);
    const int m = d.kind() == Case::A ? std::min(d.f(t), d.f(s)) : d.n();
    if (m == 0) continue;
    std::vector<Int> mu(m, 0);
    std::function<void(int, Int)> rec = [&](int i, Int cap) {
      if (i == m) {
        if (mu[0] == 0) return;
        Weight lambda = zero_weight(d);
        for (int k = 0; k < m; ++k) {
          lambda.components[t][k] = mu[k];
          lambda.components[s][k] = mu[k];
        }
        if (!is_raising_symmetric(d, lambda)) return;
        OperatorDescriptor op;
        op.kind = OpKind::Theta;
        op.sigma = all;
        op.lambda = lambda;
        out.push_back(op);
        if (is_simple(d, lambda)) {
          op.kind = OpKind::ThetaTilde;
          out.push_back(op);
        }
        return;
      }
      for (Int v = cap; v >= 0; --v) {
        mu[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, d.kind() == Case::A ? height : 2 * height);
  }
  return out;
}

WeightOrbit modular_weight_orbit(const ShimuraDatum& d, const Weight& kappa0, int depth,
                                 const std::vector<OperatorDescriptor>& generators, std::size_t budget) {
  if (depth < 0) throw Error(ErrorCode::PreconditionViolated, "depth must be non-negative");
  WeightOrbit out;
  std::map<std::pair<Weight, Int>, std::size_t> seen;
  out.states.push_back({kappa0, 0, {}});
  seen[{kappa0, 0}] = 0;
  std::vector<std::size_t> frontier{0};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (const auto& op : generators) {
        const TwistState cur = out.states[idx];
        if (!applicable(d, op, cur.weight).ok) continue;
        TwistState s;
        try {
          s = galois_edge(d, cur, op);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::Overflow || e.code() == ErrorCode::NotApplicable) continue;
          throw;
        }
        auto key = std::make_pair(s.weight, s.cyclo_exponent);
        if (seen.count(key)) continue;
        if (out.states.size() >= budget) {
          out.truncated = true;
          continue;
        }
        seen[key] = out.states.size();
        next.push_back(out.states.size());
        out.states.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

WeightOrbit modular_weight_orbit(const ShimuraDatum& d, const Weight& kappa0, int depth) {
  return modular_weight_orbit(d, kappa0, depth, default_galois_generators(d));
}

}  // namespace modtheta
