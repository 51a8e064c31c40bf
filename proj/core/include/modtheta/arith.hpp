#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

namespace modtheta {

using Int = std::int64_t;
using Rational = boost::rational<Int>;
using BigInt = mpz_class;

// Overflow-checked int64 arithmetic; throws Error(Overflow).
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, unsigned exp);
Int to_int(const BigInt& v);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

bool is_dominant(const std::vector<Int>& tuple);
Int tuple_sum(const std::vector<Int>& tuple);

}  // namespace modtheta
