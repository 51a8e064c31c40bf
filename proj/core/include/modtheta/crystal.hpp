#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modtheta/arith.hpp"
#include "modtheta/datum.hpp"

namespace modtheta {

// Standard mu-ordinary crystal of one orbit: basis e_{j,tau}, j = 1..n, with
// F(e_{j,tau}) = p^{eps(tau, j)} e_{j, tau o sigma}, so the Hodge part at tau is ker F mod p.
struct StandardCrystal {
  int orbit = 0;
  std::vector<std::string> members;
  int n = 0;
  Int p = 0;
  std::vector<std::vector<int>> epsilon;  // one row per member, n columns

  int row(const std::string& tau) const;
  // Valuation of F^e on the cycle through e_{j, .}, indexed by j - 1.
  std::vector<Int> cycle_valuations() const;
};

StandardCrystal standard_crystal(const ShimuraDatum& d, int orbit);

std::vector<Int> phi_valuations(const StandardCrystal& c, const std::string& tau);

// Divisibility exponent of the f(tau)-th exterior power of phi at tau*.
Int c_exponent(const ShimuraDatum& d, const std::string& tau);
// Sum of the first f(tau) slope counts at tau*.
Int c_exponent_slope_sum(const ShimuraDatum& d, const std::string& tau);
// Orbit sum over tau' with f(tau') > f(tau) of f(tau') - f(tau).
Int c_exponent_literal(const ShimuraDatum& d, const std::string& tau);
// Same exponent from dense integer matrices in a random Z-basis, n <= 4.
Int c_exponent_dense(const ShimuraDatum& d, const std::string& tau, std::uint64_t seed = 1);

// #{tau' in orbit(tau*) : f(tau') = n}; needs f(tau) = min of positive f on its orbit.
Int a_exponent(const ShimuraDatum& d, const std::string& tau);

std::vector<Int> slope_graded_ranks(const StandardCrystal& c, const std::string& tau);

// Whether V^j from tau o sigma^j reduces mod p into the Hodge part at tau.
bool verschiebung_lands_in_hodge(const StandardCrystal& c, const std::string& tau, int j);
bool verschiebung_image_check(const ShimuraDatum& d, const std::string& tau_o, int j);

}  // namespace modtheta
