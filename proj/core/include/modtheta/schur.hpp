#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "modtheta/arith.hpp"
#include "modtheta/datum.hpp"

namespace modtheta {

struct Weight;

// Non-increasing positive parts.
using Partition = std::vector<Int>;
// A label is a list of blocks; a plain partition is a single block.
using SchurLabel = std::vector<std::vector<Int>>;

struct SchurTerm {
  SchurLabel label;
  Int mult = 0;
  bool operator==(const SchurTerm&) const = default;
};

struct SchurExpansion {
  std::vector<SchurTerm> terms;  // sorted by label, multiplicities >= 1
  Int multiplicity(const SchurLabel& label) const;
  Int max_multiplicity() const;
};

Partition strip_zeros(const std::vector<Int>& tuple);
std::vector<Int> pad(const Partition& p, int length);
Int size(const Partition& p);
bool contains_shape(const Partition& outer, const Partition& inner);
// Partitions of n with at most max_len parts, each at most max_part.
std::vector<Partition> partitions_of(Int n, Int max_len, Int max_part);
// Dominance order on tuples of equal total.
bool dominates(const std::vector<Int>& a, const std::vector<Int>& b);

BigInt weyl_dim(int a, const std::vector<Int>& kappa);
BigInt binomial(Int n, Int k);

// Littlewood-Richardson products with a synchronized memo table.
class LittlewoodRichardson {
 public:
  std::map<Partition, Int> multiply(const Partition& mu, const Partition& nu);
  Int coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

 private:
  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, std::map<Partition, Int>> cache_;
};

LittlewoodRichardson& default_lr_engine();

SchurExpansion lr_multiply(const Partition& mu, const Partition& nu);

// Sym^e(V_a (x) V_b); labels are pairs (lambda, lambda).
SchurExpansion cauchy_sym_power(Int e, int a, int b);
// Sym^e(Sym^2 V_a).
SchurExpansion plethysm_sym_sym2(Int e, int a);

struct LeviBranching {
  SchurExpansion expansion;  // labels: one block per Levi factor
  SchurLabel top;            // maximal constituent in dominance order
  Int det_shift = 0;         // k with kappa + k scalar non-negative
  bool multiplicity_above_one = false;
};

LeviBranching branch_to_levi(const std::vector<Int>& kappa, const std::vector<int>& m_parts);

// Least e with rho_kappa inside (V^2)^{(x) e}; nullopt when none.
std::optional<Int> admissible_depth(const ShimuraDatum& d, const Weight& kappa);
// Whether rho_kappa occurs in the symmetric powers of V^2 (multiplicity-one part).
bool in_symmetric_power(const ShimuraDatum& d, const Weight& kappa);
// Whether S_lambda(V) is a constituent of (Sym^2 V)^{(x) |lambda|/2}.
bool in_sym2_tensor_power(const Partition& lambda, int a);

// Rank of a Young symmetrizer on V^{(x)|kappa|}, dim V = a <= 3, |kappa| <= 6.
Int brute_force_dim(int a, const std::vector<Int>& kappa);
// det(S_kappa(f)) == det(f)^r for random invertible rational f.
bool det_power_check(int a, const std::vector<Int>& kappa, int trials, std::uint64_t seed = 1);

}  // namespace modtheta
