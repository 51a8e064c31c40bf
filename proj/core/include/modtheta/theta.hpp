#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modtheta/datum.hpp"
#include "modtheta/weights.hpp"

namespace modtheta {

enum class OpKind {
  MaassShimura,
  ThetaBasic,
  Theta,
  ThetaOMOL,
  ThetaTildeBasic,
  ThetaTilde,
  HasseMult,
  MuOrdinaryProjector,
};

enum class ThetaVariant { General, AllGood };

struct OperatorDescriptor {
  OpKind kind = OpKind::HasseMult;
  std::set<std::string> sigma;
  std::string tbar;
  std::optional<Weight> lambda;
  ThetaVariant variant = ThetaVariant::General;
  // HasseMult by an exponent vector instead of a set; empty means use sigma.
  std::map<std::string, Int> hasse_b;
};

const char* to_string(OpKind kind);
std::string label(const ShimuraDatum& d, const OperatorDescriptor& op);

struct Applicability {
  bool ok = false;
  std::string reason;
};

Applicability applicable(const ShimuraDatum& d, const OperatorDescriptor& op, const Weight& kappa);

struct WeightMapResult {
  Weight source;
  Weight target;
  Weight lambda_part;
  Weight hasse_part;
  Weight twist_part;
  // Theta (general): "lambda" and/or embeddings tau with lambda - delta(tau) good.
  std::vector<std::string> witnesses;
  std::string chosen_witness;
  bool zero_marker = false;
};

WeightMapResult apply(const ShimuraDatum& d, const OperatorDescriptor& op, const Weight& kappa);
// Applies ops left to right; a projector directly after a Maass-Shimura
// operator sets the zero marker, which then persists.
std::vector<WeightMapResult> compose(const ShimuraDatum& d, const std::vector<OperatorDescriptor>& ops,
                                     const Weight& kappa);

// A symmetric weight usable as a raising weight: symmetric, non-negative and
// a constituent of a symmetric power of V^2.
bool is_raising_symmetric(const ShimuraDatum& d, const Weight& lambda);

struct ConsistencyReport {
  bool consistent = false;
  Weight theta_route;
  Weight omol_route;
};

ConsistencyReport compare_weight_routes(const ShimuraDatum& d, const Weight& kappa, const std::string& tbar);
bool compare_weight_consistency(const ShimuraDatum& d, const Weight& kappa, const std::string& tbar);

bool tilde_closure_check(const ShimuraDatum& d, const std::set<std::string>& sigma, const Weight& kappa,
                         const std::string& tbar);

struct CycleEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string label;
};

struct CycleGraph {
  std::vector<Weight> nodes;
  std::vector<CycleEdge> edges;
  bool truncated = false;
};

std::size_t default_node_budget();
CycleGraph explore_cycles(const ShimuraDatum& d, const Weight& kappa0, const std::vector<OperatorDescriptor>& generators,
                          int depth, std::size_t node_budget = default_node_budget());
std::string to_dot(const ShimuraDatum& d, const CycleGraph& g);

}  // namespace modtheta
