#pragma once

#include <algorithm>
#include <map>
#include <string>

#include "modtheta/errors.hpp"
#include "modtheta/io.hpp"
#include "modtheta/weights.hpp"

#ifndef MODTHETA_FIXTURE_DIR
#error "MODTHETA_FIXTURE_DIR must be defined"
#endif

namespace testing_support {

inline std::string fixture_path(const std::string& name) { return std::string(MODTHETA_FIXTURE_DIR) + "/" + name + ".toml"; }

inline modtheta::ShimuraDatum fixture(const std::string& name) { return modtheta::load_datum_file(fixture_path(name)); }

inline modtheta::Weight W(const modtheta::ShimuraDatum& d, const std::string& text) {
  return modtheta::parse_weight(d, text);
}

}  // namespace testing_support

#define EXPECT_MT_ERROR(stmt, ecode)                    \
  EXPECT_THROW(                                         \
      {                                                 \
        try {                                           \
          stmt;                                         \
        } catch (const modtheta::Error& err_) {         \
          EXPECT_EQ(err_.code(), ecode) << err_.what(); \
          throw;                                        \
        }                                               \
      },                                                \
      modtheta::Error)

#include <random>

namespace testing_support {

// Random dominant weight with entries in [0, max_entry].
inline modtheta::Weight random_weight(const modtheta::ShimuraDatum& d, std::mt19937_64& rng, modtheta::Int max_entry) {
  std::uniform_int_distribution<modtheta::Int> dist(0, max_entry);
  std::map<std::string, std::vector<modtheta::Int>> comps;
  for (const auto& t : d.embeddings()) {
    std::vector<modtheta::Int> v(static_cast<std::size_t>(d.f(t)));
    for (auto& x : v) x = dist(rng);
    std::sort(v.rbegin(), v.rend());
    comps[t] = v;
  }
  return modtheta::make_weight(d, comps);
}

// Random good weight: arbitrary at positive minima, scalar elsewhere.
inline modtheta::Weight random_good_weight(const modtheta::ShimuraDatum& d, std::mt19937_64& rng,
                                           modtheta::Int max_entry) {
  std::uniform_int_distribution<modtheta::Int> dist(0, max_entry);
  std::map<std::string, std::vector<modtheta::Int>> comps;
  for (const auto& t : d.embeddings()) {
    auto m = d.min_positive(d.orbit_of(t));
    std::vector<modtheta::Int> v(static_cast<std::size_t>(d.f(t)));
    if (m && d.f(t) == *m) {
      for (auto& x : v) x = dist(rng);
      std::sort(v.rbegin(), v.rend());
    } else {
      std::fill(v.begin(), v.end(), dist(rng));
    }
    comps[t] = v;
  }
  return modtheta::make_weight(d, comps);
}

}  // namespace testing_support

#include <ostream>

namespace modtheta {

inline void PrintTo(const Weight& w, std::ostream* os) {
  bool first = true;
  for (const auto& [t, v] : w.components) {
    *os << (first ? "" : ";") << t << ":";
    for (std::size_t i = 0; i < v.size(); ++i) *os << (i ? "," : "") << v[i];
    first = false;
  }
}

}  // namespace modtheta
