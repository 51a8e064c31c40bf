#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modtheta/arith.hpp"

namespace modtheta {

enum class Case { A, C };

// Structurally parsed datum document, before any validation.
struct RawDatum {
  std::string kind;
  Int n = 0;
  Int p = 0;
  std::vector<std::vector<std::string>> orbits;
  std::map<std::string, std::string> star;
  std::vector<std::string> cm_type;
  std::map<std::string, Int> signature;
};

struct Orbit {
  std::vector<std::string> members;  // cyclic order: members[i] o sigma = members[i+1]
  int size() const { return static_cast<int>(members.size()); }
};

// Validated, immutable combinatorial datum.
class ShimuraDatum {
 public:
  Case kind() const { return kind_; }
  int n() const { return n_; }
  Int p() const { return p_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  // All embeddings in canonical order (orbit by orbit, cyclic position).
  const std::vector<std::string>& embeddings() const { return embeddings_; }
  const std::vector<std::string>& cm_type() const { return cm_type_; }

  bool contains(const std::string& tau) const;
  int orbit_of(const std::string& tau) const;
  int position(const std::string& tau) const;
  int orbit_size(const std::string& tau) const;
  int f(const std::string& tau) const;
  const std::string& star(const std::string& tau) const;
  bool in_cm_type(const std::string& tau) const;
  // Index of the orbit containing the conjugates of orbit `o`.
  int star_orbit(int o) const;

  std::vector<int> orbit_signature(int o) const;
  // min of f over the orbit restricted to positive values, if any.
  std::optional<int> min_positive(int o) const;
  // First member (in stored order) attaining the positive minimum of f.
  std::optional<std::string> base_point(int o) const;

  std::string sigma_shift(const std::string& tau, Int j) const;
  int j_index(const std::string& tau, const std::string& base) const;

 private:
  friend ShimuraDatum validate_datum(const RawDatum& raw);
  Case kind_ = Case::A;
  int n_ = 0;
  Int p_ = 0;
  std::vector<Orbit> orbits_;
  std::vector<std::string> embeddings_;
  std::vector<std::string> cm_type_;
  std::map<std::string, int> orbit_index_;
  std::map<std::string, int> position_;
  std::map<std::string, int> signature_;
  std::map<std::string, std::string> star_;
};

ShimuraDatum validate_datum(const RawDatum& raw);

std::string sigma_shift(const ShimuraDatum& d, const std::string& tau, Int j);
int j_index(const ShimuraDatum& d, const std::string& tau, const std::string& base);

// One base point per orbit on which f avoids both 0 and n.
std::vector<std::string> upsilon(const ShimuraDatum& d);

RawDatum to_raw(const ShimuraDatum& d);

}  // namespace modtheta
