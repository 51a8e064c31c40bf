#include "modtheta/datum.hpp"

#include <algorithm>
#include <set>

#include "modtheta/errors.hpp"

namespace modtheta {

namespace {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool ShimuraDatum::contains(const std::string& tau) const { return orbit_index_.count(tau) != 0; }

int ShimuraDatum::orbit_of(const std::string& tau) const {
  auto it = orbit_index_.find(tau);
  if (it == orbit_index_.end()) throw Error(ErrorCode::UnknownEmbedding, tau);
  return it->second;
}

int ShimuraDatum::position(const std::string& tau) const {
  auto it = position_.find(tau);
  if (it == position_.end()) throw Error(ErrorCode::UnknownEmbedding, tau);
  return it->second;
}

int ShimuraDatum::orbit_size(const std::string& tau) const { return orbits_[orbit_of(tau)].size(); }

int ShimuraDatum::f(const std::string& tau) const {
  auto it = signature_.find(tau);
  if (it == signature_.end()) throw Error(ErrorCode::UnknownEmbedding, tau);
  return it->second;
}

const std::string& ShimuraDatum::star(const std::string& tau) const {
  auto it = star_.find(tau);
  if (it == star_.end()) throw Error(ErrorCode::UnknownEmbedding, tau);
  return it->second;
}

bool ShimuraDatum::in_cm_type(const std::string& tau) const {
  return std::find(cm_type_.begin(), cm_type_.end(), tau) != cm_type_.end();
}

int ShimuraDatum::star_orbit(int o) const { return orbit_of(star(orbits_.at(o).members.front())); }

std::vector<int> ShimuraDatum::orbit_signature(int o) const {
  std::vector<int> out;
  for (const auto& tau : orbits_.at(o).members) out.push_back(f(tau));
  return out;
}

std::optional<int> ShimuraDatum::min_positive(int o) const {
  std::optional<int> best;
  for (int v : orbit_signature(o))
    if (v > 0 && (!best || v < *best)) best = v;
  return best;
}

std::optional<std::string> ShimuraDatum::base_point(int o) const {
  auto m = min_positive(o);
  if (!m) return std::nullopt;
  for (const auto& tau : orbits_.at(o).members)
    if (f(tau) == *m) return tau;
  return std::nullopt;
}

std::string ShimuraDatum::sigma_shift(const std::string& tau, Int j) const {
  const Orbit& o = orbits_[orbit_of(tau)];
  return o.members[mod(position(tau) + mod(j, o.size()), o.size())];
}

int ShimuraDatum::j_index(const std::string& tau, const std::string& base) const {
  if (orbit_of(tau) != orbit_of(base))
    throw Error(ErrorCode::DifferentOrbits, tau + " and " + base);
  return static_cast<int>(mod(position(tau) - position(base), orbit_size(tau)));
}

ShimuraDatum validate_datum(const RawDatum& raw) {
  ShimuraDatum d;
  if (raw.kind == "A") {
    d.kind_ = Case::A;
  } else if (raw.kind == "C") {
    d.kind_ = Case::C;
  } else {
    throw Error(ErrorCode::InvalidDatum, "case must be A or C, got '" + raw.kind + "'");
  }
  if (raw.n <= 0 || raw.n > 64) throw Error(ErrorCode::InvalidDatum, "n must be in 1..64");
  if (!is_prime(raw.p)) throw Error(ErrorCode::InvalidDatum, "p must be prime");
  d.n_ = static_cast<int>(raw.n);
  d.p_ = raw.p;
  if (raw.orbits.empty()) throw Error(ErrorCode::InvalidDatum, "no orbits");

  std::set<std::string> seen;
  for (const auto& members : raw.orbits) {
    if (members.empty()) throw Error(ErrorCode::InvalidDatum, "empty orbit");
    for (const auto& id : members) {
      if (id.empty()) throw Error(ErrorCode::InvalidDatum, "empty embedding id");
      if (!seen.insert(id).second) throw Error(ErrorCode::DuplicateEmbedding, id);
    }
  }

  // Canonical orbit order: by first listed member; cyclic order inside is data.
  std::vector<Orbit> orbits;
  for (const auto& members : raw.orbits) orbits.push_back(Orbit{members});
  std::sort(orbits.begin(), orbits.end(),
            [](const Orbit& a, const Orbit& b) { return a.members.front() < b.members.front(); });
  d.orbits_ = orbits;
  for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
    for (int i = 0; i < orbits[o].size(); ++i) {
      const auto& id = orbits[o].members[i];
      d.orbit_index_[id] = o;
      d.position_[id] = i;
      d.embeddings_.push_back(id);
    }
  }

  for (const auto& [id, v] : raw.signature)
    if (!seen.count(id)) throw Error(ErrorCode::UnknownEmbedding, "signature names " + id);
  for (const auto& id : d.embeddings_) {
    auto it = raw.signature.find(id);
    if (it == raw.signature.end()) throw Error(ErrorCode::InvalidDatum, "missing signature for " + id);
    if (it->second < 0 || it->second > raw.n)
      throw Error(ErrorCode::InvalidDatum, "signature out of range at " + id);
    d.signature_[id] = static_cast<int>(it->second);
  }

  for (const auto& [a, b] : raw.star) {
    if (!seen.count(a) || !seen.count(b)) throw Error(ErrorCode::UnknownEmbedding, "star names " + a + "->" + b);
  }
  if (d.kind_ == Case::C) {
    for (const auto& id : d.embeddings_) {
      auto it = raw.star.find(id);
      if (it != raw.star.end() && it->second != id)
        throw Error(ErrorCode::StarOrbitMismatch, "case C requires star = identity at " + id);
      d.star_[id] = id;
      if (d.signature_[id] != d.n_)
        throw Error(ErrorCode::SignatureMismatch, "case C requires f = n at " + id);
    }
    for (const auto& id : raw.cm_type)
      if (!seen.count(id)) throw Error(ErrorCode::BadCmType, "unknown id " + id);
    d.cm_type_ = d.embeddings_;
    return d;
  }

  for (const auto& id : d.embeddings_) {
    auto it = raw.star.find(id);
    if (it == raw.star.end()) throw Error(ErrorCode::StarOrbitMismatch, "missing star image for " + id);
    if (it->second == id) throw Error(ErrorCode::StarOrbitMismatch, "case A star has a fixed point at " + id);
    d.star_[id] = it->second;
  }
  for (const auto& id : d.embeddings_)
    if (d.star_[d.star_[id]] != id) throw Error(ErrorCode::StarOrbitMismatch, "star is not an involution at " + id);
  for (const auto& id : d.embeddings_) {
    if (d.star_[d.sigma_shift(id, 1)] != d.sigma_shift(d.star_[id], 1))
      throw Error(ErrorCode::StarOrbitMismatch, "star does not commute with sigma at " + id);
  }
  for (const auto& id : d.embeddings_) {
    if (d.signature_[id] + d.signature_[d.star_[id]] != d.n_)
      throw Error(ErrorCode::SignatureMismatch,
                  "f(" + id + ") + f(" + d.star_[id] + ") != n");
  }

  std::set<std::string> cm;
  for (const auto& id : raw.cm_type) {
    if (!seen.count(id)) throw Error(ErrorCode::BadCmType, "unknown id " + id);
    if (!cm.insert(id).second) throw Error(ErrorCode::BadCmType, "duplicate id " + id);
  }
  for (const auto& id : d.embeddings_) {
    bool a = cm.count(id) != 0;
    bool b = cm.count(d.star_[id]) != 0;
    if (a == b) throw Error(ErrorCode::BadCmType, "CM type must contain exactly one of " + id + ", " + d.star_[id]);
  }
  for (const auto& id : d.embeddings_)
    if (cm.count(id)) d.cm_type_.push_back(id);
  return d;
}

std::string sigma_shift(const ShimuraDatum& d, const std::string& tau, Int j) { return d.sigma_shift(tau, j); }

int j_index(const ShimuraDatum& d, const std::string& tau, const std::string& base) {
  return d.j_index(tau, base);
}

std::vector<std::string> upsilon(const ShimuraDatum& d) {
  std::vector<std::string> out;
  for (int o = 0; o < static_cast<int>(d.orbits().size()); ++o) {
    auto sig = d.orbit_signature(o);
    bool excluded = std::any_of(sig.begin(), sig.end(), [&](int v) { return v == 0 || v == d.n(); });
    if (!excluded) out.push_back(*d.base_point(o));
  }
  return out;
}

RawDatum to_raw(const ShimuraDatum& d) {
  RawDatum raw;
  raw.kind = d.kind() == Case::A ? "A" : "C";
  raw.n = d.n();
  raw.p = d.p();
  for (const auto& o : d.orbits()) raw.orbits.push_back(o.members);
  for (const auto& id : d.embeddings()) {
    raw.star[id] = d.star(id);
    raw.signature[id] = d.f(id);
  }
  raw.cm_type = d.cm_type();
  return raw;
}

}  // namespace modtheta
