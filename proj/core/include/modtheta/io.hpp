#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "modtheta/datum.hpp"
#include "modtheta/theta.hpp"
#include "modtheta/weights.hpp"

namespace modtheta {

using Json = nlohmann::json;

// Datum documents: key/value text (case, n, p, orbits, star, cm_type,
// signature) or the canonical JSON written by datum_to_json.
RawDatum parse_datum_document(const std::string& text);
ShimuraDatum load_datum_file(const std::string& path);
Json datum_to_json(const ShimuraDatum& d);

// "tau:2,2;taustar:5"; omitted embeddings are zero.
Weight parse_weight(const ShimuraDatum& d, const std::string& text);
Weight weight_from_json(const ShimuraDatum& d, const Json& j);
Json weight_to_json(const ShimuraDatum& d, const Weight& w);

// "ThetaBasic(sigma={tau,taustar}, tbar=tau)", the format produced by label().
OperatorDescriptor parse_operator(const ShimuraDatum& d, const std::string& text);

std::string read_file(const std::string& path);

}  // namespace modtheta
