#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modtheta/arith.hpp"
#include "modtheta/datum.hpp"

namespace modtheta {

// Dominant weight: one non-increasing tuple of length f(tau) per embedding.
// Always normalized so that every embedding of the datum has an entry.
struct Weight {
  std::map<std::string, std::vector<Int>> components;

  const std::vector<Int>& at(const std::string& tau) const;
  bool is_zero() const;
  auto operator<=>(const Weight&) const = default;
};

Weight zero_weight(const ShimuraDatum& d);
// Validates lengths and dominance; ids absent from `components` become zero.
Weight make_weight(const ShimuraDatum& d, const std::map<std::string, std::vector<Int>>& components);
Weight add(const ShimuraDatum& d, const Weight& a, const Weight& b);
Weight scale(const ShimuraDatum& d, const Weight& a, Int k);
// a - b if the difference is dominant with non-negative entries.
std::optional<Weight> subtract_positive(const ShimuraDatum& d, const Weight& a, const Weight& b);

bool is_scalar_tuple(const std::vector<Int>& t);
bool is_scalar(const Weight& k);
bool is_parallel(const Weight& k);
bool is_nonnegative(const Weight& k);
bool is_positive(const Weight& k);
std::set<std::string> support(const Weight& k);
bool supported_at(const Weight& k, const std::set<std::string>& sigma);
bool is_symmetric_at(const ShimuraDatum& d, const Weight& k, const std::string& tau);
bool is_symmetric(const ShimuraDatum& d, const Weight& k);
bool is_sum_symmetric(const ShimuraDatum& d, const Weight& k);
bool is_good(const ShimuraDatum& d, const Weight& k);
bool is_simple(const ShimuraDatum& d, const Weight& k);

struct WeightFlags {
  bool scalar = false;
  bool parallel = false;
  bool positive = false;
  std::set<std::string> supported_at;
  bool symmetric = false;
  bool sum_symmetric = false;
  bool good = false;
  bool simple = false;
};

WeightFlags classify(const ShimuraDatum& d, const Weight& k);

struct ComponentStats {
  Int degree = 0;  // d_{kappa,tau}
  Int norm = 0;    // ||kappa_tau||
  BigInt r;        // r(kappa_tau)
  BigInt dim;      // dim rho_{kappa_tau}
};

struct WeightStats {
  std::map<std::string, ComponentStats> per_embedding;
  Int total = 0;  // |kappa|
};

WeightStats weight_stats(const ShimuraDatum& d, const Weight& k);
// ||t|| for a single tuple of length a.
Int tuple_norm(const std::vector<Int>& t);
// r(t) = |t| dim(rho_t) / a.
BigInt tuple_r(const std::vector<Int>& t);

Weight hasse_weight(const ShimuraDatum& d, const std::set<std::string>& sigma);
// Scalar weight (b_tau (p^{e_tau} - 1))_tau.
Weight hasse_weight(const ShimuraDatum& d, const std::map<std::string, Int>& b);
Int hasse_value(const ShimuraDatum& d, const std::string& tau);

struct HasseConstants {
  Int m0 = 0;
  std::map<std::string, Int> m;
};

HasseConstants hasse_constants(const ShimuraDatum& d);

Weight delta(const ShimuraDatum& d, const std::string& tbar);
Weight delta_twist(const ShimuraDatum& d, const std::string& tbar);
Weight upsilon_twist(const ShimuraDatum& d, const Weight& lambda);

struct GoodSymmetricSearch {
  bool exists = false;
  std::optional<Weight> witness;
};

// Exhaustive search over symmetric weights with entries <= height, one
// CM pair at a time.
GoodSymmetricSearch good_symmetric_exists(const ShimuraDatum& d, Int height = 2);
bool all_weights_good(const ShimuraDatum& d);

}  // namespace modtheta

namespace modtheta {

// Canonical text form "tau:2,2;taustar:5" in datum embedding order.
std::string to_text(const ShimuraDatum& d, const Weight& k);

}  // namespace modtheta
