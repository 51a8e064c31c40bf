#pragma once

#include <random>

#include "modtheta/datum.hpp"

namespace modtheta {

struct RandomDatumOptions {
  int max_n = 6;
  int max_e = 4;
  int max_places = 3;
  bool split_only = false;  // every orbit has size 1
};

// Random valid case-A datum built from split places (orbit pairs o, o*) and
// inert places (one orbit of even size with star = sigma^{e/2}).
ShimuraDatum random_case_a_datum(std::mt19937_64& rng, const RandomDatumOptions& opts = {});

}  // namespace modtheta
