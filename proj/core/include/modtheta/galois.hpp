#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modtheta/theta.hpp"

namespace modtheta {

inline constexpr const char* kNonvanishingNote = "conditional on nonvanishing";

struct TwistState {
  Weight weight;
  Int cyclo_exponent = 0;
  std::vector<std::string> trail;
};

Int hecke_exponent(const ShimuraDatum& d, const Weight& lambda);
TwistState galois_edge(const ShimuraDatum& d, const TwistState& state, const OperatorDescriptor& op);

// Hasse multiplications, basic and tilde theta operators, and Theta / ThetaTilde
// for nonzero symmetric lambda on a single CM pair with entries <= height.
std::vector<OperatorDescriptor> default_galois_generators(const ShimuraDatum& d, Int height = 1);

struct WeightOrbit {
  std::vector<TwistState> states;
  bool truncated = false;
};

WeightOrbit modular_weight_orbit(const ShimuraDatum& d, const Weight& kappa0, int depth,
                                 const std::vector<OperatorDescriptor>& generators,
                                 std::size_t budget = default_node_budget());
WeightOrbit modular_weight_orbit(const ShimuraDatum& d, const Weight& kappa0, int depth);

}  // namespace modtheta
