#pragma once

#include <map>
#include <vector>

#include "modtheta/arith.hpp"
#include "modtheta/schur.hpp"

namespace oracle {

using modtheta::Int;
using Monomial = std::vector<int>;
// Integer polynomial as exponent vector -> coefficient.
using Poly = std::map<Monomial, Int>;

// Schur polynomial s_lambda(x_1..x_nvars) as a sum over semistandard tableaux.
Poly schur_poly(const std::vector<Int>& lambda, int nvars);
Int ssyt_count(const std::vector<Int>& lambda, int nvars);

Poly multiply(const Poly& a, const Poly& b);
// Product of polynomials in disjoint variable blocks, concatenated.
Poly block_product(const std::vector<Poly>& factors, const std::vector<int>& block_sizes);
// h_e of the given monomials.
Poly complete_homogeneous(const std::vector<Monomial>& monomials, Int e);

// Decomposes a character of GL_{b_1} x ... x GL_{b_m} (non-negative weights)
// into products of Schur polynomials by repeatedly peeling the lex-largest
// monomial. Labels carry one zero-padded block per factor.
std::map<modtheta::SchurLabel, Int> decompose(Poly character, const std::vector<int>& block_sizes);

// Reference expansions built from characters only.
std::map<modtheta::SchurLabel, Int> lr_reference(const std::vector<Int>& mu, const std::vector<Int>& nu);
std::map<modtheta::SchurLabel, Int> cauchy_reference(Int e, int a, int b);
std::map<modtheta::SchurLabel, Int> plethysm_reference(Int e, int a);
std::map<modtheta::SchurLabel, Int> branch_reference(const std::vector<Int>& kappa, const std::vector<int>& blocks);

// Strips zeros in every block, for comparison with stripped labels.
modtheta::SchurLabel strip_label(const modtheta::SchurLabel& label);

}  // namespace oracle
