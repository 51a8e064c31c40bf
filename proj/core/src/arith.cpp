#include "modtheta/arith.hpp"

#include <limits>

#include "modtheta/errors.hpp"

namespace modtheta {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer addition");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return out;
}

Int checked_pow(Int base, unsigned exp) {
  Int out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

Int to_int(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::Overflow, "value exceeds 64 bits: " + v.get_str());
  return static_cast<Int>(v.get_si());
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const BigInt& v) { return v.get_str(); }

bool is_dominant(const std::vector<Int>& tuple) {
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i - 1] < tuple[i]) return false;
  return true;
}

Int tuple_sum(const std::vector<Int>& tuple) {
  Int s = 0;
  for (Int x : tuple) s = checked_add(s, x);
  return s;
}

}  // namespace modtheta
