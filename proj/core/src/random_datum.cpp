#include "modtheta/random_datum.hpp"

#include <string>

namespace modtheta {

ShimuraDatum random_case_a_datum(std::mt19937_64& rng, const RandomDatumOptions& opts) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  static const Int primes[] = {2, 3, 5, 7};
  RawDatum raw;
  raw.kind = "A";
  raw.n = uniform(1, opts.max_n);
  raw.p = primes[uniform(0, 3)];
  const int places = uniform(1, opts.max_places);
  for (int k = 0; k < places; ++k) {
    const std::string tag = std::to_string(k);
    const bool inert = !opts.split_only && opts.max_e >= 2 && uniform(0, 1) == 1;
    if (inert) {
      const int e = 2 * uniform(1, opts.max_e / 2);
      std::vector<std::string> o;
      for (int i = 0; i < e; ++i) o.push_back("u" + tag + "_" + std::to_string(i));
      for (int i = 0; i < e / 2; ++i) {
        const std::string& a = o[i];
        const std::string& b = o[i + e / 2];
        raw.star[a] = b;
        raw.star[b] = a;
        Int fa = uniform(0, static_cast<int>(raw.n));
        raw.signature[a] = fa;
        raw.signature[b] = raw.n - fa;
        raw.cm_type.push_back(uniform(0, 1) ? a : b);
      }
      raw.orbits.push_back(o);
    } else {
      const int e = opts.split_only ? 1 : uniform(1, opts.max_e);
      std::vector<std::string> o, os;
      for (int i = 0; i < e; ++i) {
        o.push_back("t" + tag + "_" + std::to_string(i));
        os.push_back("s" + tag + "_" + std::to_string(i));
        raw.star[o[i]] = os[i];
        raw.star[os[i]] = o[i];
        Int fa = uniform(0, static_cast<int>(raw.n));
        raw.signature[o[i]] = fa;
        raw.signature[os[i]] = raw.n - fa;
        raw.cm_type.push_back(uniform(0, 1) ? o[i] : os[i]);
      }
      raw.orbits.push_back(o);
      raw.orbits.push_back(os);
    }
  }
  return validate_datum(raw);
}

}  // namespace modtheta
