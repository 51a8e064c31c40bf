#pragma once

#include <vector>

#include "modtheta/arith.hpp"
#include "modtheta/datum.hpp"

namespace modtheta {

struct NewtonPolygon {
  std::vector<Rational> slopes;  // non-decreasing
  bool operator==(const NewtonPolygon&) const = default;
};

NewtonPolygon orbit_polygon(const ShimuraDatum& d, int orbit);
NewtonPolygon amalgamate(const std::vector<NewtonPolygon>& polygons);
bool is_ordinary(const ShimuraDatum& d);

// a_i = #{tau' in orbit(tau) : f(tau') > n - i}, i = 1..n.
std::vector<Int> slope_counts(const ShimuraDatum& d, const std::string& tau);

// Ranks of the graded pieces of the slope filtration on omega_tau, one entry
// per distinct slope in ascending order. Empty when f(tau) = 0.
std::vector<Int> filtration_ranks(const ShimuraDatum& d, const std::string& tau);

// Breakpoints (x, y) of the polygon, starting at (0, 0).
std::vector<std::pair<Int, Rational>> breakpoints(const NewtonPolygon& poly);

}  // namespace modtheta
