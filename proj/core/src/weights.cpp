#include "modtheta/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "modtheta/errors.hpp"
#include "modtheta/schur.hpp"

namespace modtheta {

const std::vector<Int>& Weight::at(const std::string& tau) const {
  auto it = components.find(tau);
  if (it == components.end()) throw Error(ErrorCode::UnknownEmbedding, tau);
  return it->second;
}

bool Weight::is_zero() const {
  for (const auto& [tau, t] : components)
    for (Int x : t)
      if (x != 0) return false;
  return true;
}

Weight zero_weight(const ShimuraDatum& d) {
  Weight w;
  for (const auto& tau : d.embeddings()) w.components[tau] = std::vector<Int>(d.f(tau), 0);
  return w;
}

Weight make_weight(const ShimuraDatum& d, const std::map<std::string, std::vector<Int>>& components) {
  Weight w = zero_weight(d);
  for (const auto& [tau, t] : components) {
    if (!d.contains(tau)) throw Error(ErrorCode::UnknownEmbedding, tau);
    if (static_cast<int>(t.size()) != d.f(tau))
      throw Error(ErrorCode::LengthMismatch, "component at " + tau + " has length " + std::to_string(t.size()) +
                                                 ", expected " + std::to_string(d.f(tau)));
    if (!is_dominant(t)) throw Error(ErrorCode::NotDominant, "component at " + tau + " is not non-increasing");
    w.components[tau] = t;
  }
  return w;
}

Weight add(const ShimuraDatum& d, const Weight& a, const Weight& b) {
  Weight out = zero_weight(d);
  for (auto& [tau, t] : out.components) {
    const auto& x = a.at(tau);
    const auto& y = b.at(tau);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = checked_add(x[i], y[i]);
    if (!is_dominant(t)) throw Error(ErrorCode::NotDominant, "sum is not dominant at " + tau);
  }
  return out;
}

Weight scale(const ShimuraDatum& d, const Weight& a, Int k) {
  Weight out = zero_weight(d);
  for (auto& [tau, t] : out.components) {
    const auto& x = a.at(tau);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = checked_mul(x[i], k);
    if (!is_dominant(t)) throw Error(ErrorCode::NotDominant, "scaled weight is not dominant at " + tau);
  }
  return out;
}

std::optional<Weight> subtract_positive(const ShimuraDatum& d, const Weight& a, const Weight& b) {
  Weight out = zero_weight(d);
  for (auto& [tau, t] : out.components) {
    const auto& x = a.at(tau);
    const auto& y = b.at(tau);
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = x[i] - y[i];
      if (t[i] < 0) return std::nullopt;
    }
    if (!is_dominant(t)) return std::nullopt;
  }
  return out;
}

bool is_scalar_tuple(const std::vector<Int>& t) {
  return std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
}

bool is_scalar(const Weight& k) {
  return std::all_of(k.components.begin(), k.components.end(),
                     [](const auto& kv) { return is_scalar_tuple(kv.second); });
}

bool is_parallel(const Weight& k) {
  // Scalar with one common value k at every embedding (different ranks allowed),
  // or all components equal after padding with zeros. Empty components impose nothing.
  std::optional<Int> common;
  bool scalar_common = true;
  for (const auto& [tau, t] : k.components) {
    if (t.empty()) continue;
    if (!is_scalar_tuple(t) || (common && *common != t.front())) {
      scalar_common = false;
      break;
    }
    common = t.front();
  }
  if (scalar_common) return true;
  std::size_t len = 0;
  for (const auto& [tau, t] : k.components) len = std::max(len, t.size());
  std::optional<std::vector<Int>> first;
  for (const auto& [tau, t] : k.components) {
    if (t.empty()) continue;
    std::vector<Int> padded = t;
    padded.resize(len, 0);
    if (!first) {
      first = padded;
    } else if (*first != padded) {
      return false;
    }
  }
  return true;
}

bool is_nonnegative(const Weight& k) {
  for (const auto& [tau, t] : k.components)
    for (Int x : t)
      if (x < 0) return false;
  return true;
}

bool is_positive(const Weight& k) { return is_nonnegative(k) && !k.is_zero(); }

std::set<std::string> support(const Weight& k) {
  std::set<std::string> out;
  for (const auto& [tau, t] : k.components)
    if (std::any_of(t.begin(), t.end(), [](Int x) { return x != 0; })) out.insert(tau);
  return out;
}

bool supported_at(const Weight& k, const std::set<std::string>& sigma) {
  for (const auto& tau : support(k))
    if (!sigma.count(tau)) return false;
  return true;
}

bool is_symmetric_at(const ShimuraDatum& d, const Weight& k, const std::string& tau) {
  const auto& x = k.at(tau);
  const auto& y = k.at(d.star(tau));
  std::size_t m = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < m; ++i)
    if (x[i] != y[i]) return false;
  for (std::size_t i = m; i < x.size(); ++i)
    if (x[i] != 0) return false;
  for (std::size_t i = m; i < y.size(); ++i)
    if (y[i] != 0) return false;
  return true;
}

bool is_symmetric(const ShimuraDatum& d, const Weight& k) {
  for (const auto& tau : d.cm_type())
    if (!is_symmetric_at(d, k, tau)) return false;
  return true;
}

bool is_sum_symmetric(const ShimuraDatum& d, const Weight& k) {
  if (!is_positive(k)) return false;
  for (const auto& tau : d.cm_type())
    if (tuple_sum(k.at(tau)) != tuple_sum(k.at(d.star(tau)))) return false;
  return true;
}

bool is_good(const ShimuraDatum& d, const Weight& k) {
  for (const auto& tau : d.embeddings()) {
    auto m = d.min_positive(d.orbit_of(tau));
    if (m && d.f(tau) == *m) continue;
    if (!is_scalar_tuple(k.at(tau))) return false;
  }
  return true;
}

bool is_simple(const ShimuraDatum& d, const Weight& k) {
  for (const auto& tau : d.embeddings()) {
    auto sig = d.orbit_signature(d.orbit_of(tau));
    const auto& t = k.at(tau);
    int lo = *std::min_element(sig.begin(), sig.end());
    std::size_t keep = lo == 0 ? 0 : static_cast<std::size_t>(lo);
    for (std::size_t i = keep; i < t.size(); ++i)
      if (t[i] != 0) return false;
  }
  return true;
}

WeightFlags classify(const ShimuraDatum& d, const Weight& k) {
  WeightFlags f;
  f.scalar = is_scalar(k);
  f.parallel = is_parallel(k);
  f.positive = is_positive(k);
  f.supported_at = support(k);
  f.symmetric = is_symmetric(d, k);
  f.sum_symmetric = is_sum_symmetric(d, k);
  f.good = is_good(d, k);
  f.simple = is_simple(d, k);
  return f;
}

Int tuple_norm(const std::vector<Int>& t) {
  Int s = tuple_sum(t);
  if (t.empty()) return 0;
  if (is_scalar_tuple(t)) return s / static_cast<Int>(t.size());
  return s;
}

BigInt tuple_r(const std::vector<Int>& t) {
  if (t.empty()) return 0;
  BigInt num = BigInt(static_cast<long>(tuple_sum(t))) * weyl_dim(static_cast<int>(t.size()), t);
  BigInt a = static_cast<long>(t.size());
  if (num % a != 0) throw std::logic_error("r(kappa) is not an integer");
  return num / a;
}

WeightStats weight_stats(const ShimuraDatum& d, const Weight& k) {
  if (!is_nonnegative(k)) throw Error(ErrorCode::NotPositive, "weight statistics need non-negative entries");
  WeightStats out;
  for (const auto& tau : d.embeddings()) {
    const auto& t = k.at(tau);
    ComponentStats c;
    c.degree = tuple_sum(t);
    c.norm = tuple_norm(t);
    c.dim = t.empty() ? BigInt(1) : weyl_dim(static_cast<int>(t.size()), t);
    c.r = tuple_r(t);
    out.total = checked_add(out.total, c.degree);
    out.per_embedding[tau] = c;
  }
  return out;
}

Int hasse_value(const ShimuraDatum& d, const std::string& tau) {
  return checked_pow(d.p(), static_cast<unsigned>(d.orbit_size(tau))) - 1;
}

Weight hasse_weight(const ShimuraDatum& d, const std::set<std::string>& sigma) {
  std::map<std::string, Int> b;
  for (const auto& tau : sigma) b[tau] = 1;
  return hasse_weight(d, b);
}

Weight hasse_weight(const ShimuraDatum& d, const std::map<std::string, Int>& b) {
  Weight w = zero_weight(d);
  for (const auto& [tau, coeff] : b) {
    if (!d.contains(tau)) throw Error(ErrorCode::UnknownEmbedding, tau);
    Int v = checked_mul(coeff, hasse_value(d, tau));
    for (Int& x : w.components[tau]) x = v;
  }
  return w;
}

HasseConstants hasse_constants(const ShimuraDatum& d) {
  HasseConstants out;
  out.m0 = 1;
  for (const auto& tau : d.embeddings()) {
    Int v = hasse_value(d, tau);
    out.m0 = checked_mul(out.m0 / std::gcd(out.m0, v), v);
  }
  for (const auto& tau : d.embeddings()) out.m[tau] = out.m0 / hasse_value(d, tau);
  return out;
}

Weight delta(const ShimuraDatum& d, const std::string& tbar) {
  if (!d.contains(tbar)) throw Error(ErrorCode::UnknownEmbedding, tbar);
  Weight w = zero_weight(d);
  if (d.kind() == Case::C) {
    w.components[tbar][0] = 2;
    return w;
  }
  if (!d.in_cm_type(tbar)) throw Error(ErrorCode::NotInCmType, tbar);
  const std::string& s = d.star(tbar);
  if (d.f(tbar) == 0 || d.f(s) == 0)
    throw Error(ErrorCode::ZeroSignature, "V^2 at " + tbar + " is zero since one signature vanishes");
  w.components[tbar][0] = 1;
  w.components[s][0] = 1;
  return w;
}

Weight upsilon_twist(const ShimuraDatum& d, const Weight& lambda) {
  if (!is_simple(d, lambda)) throw Error(ErrorCode::NotSimple, "Upsilon-twist needs a simple weight");
  auto ups = upsilon(d);
  auto supp = support(lambda);
  Weight out = zero_weight(d);
  for (int o = 0; o < static_cast<int>(d.orbits().size()); ++o) {
    const auto& members = d.orbits()[o].members;
    bool supported = std::any_of(members.begin(), members.end(),
                                 [&](const std::string& t) { return supp.count(t) != 0; });
    if (!supported) continue;
    auto base = d.base_point(o);
    if (!base || std::find(ups.begin(), ups.end(), *base) == ups.end())
      throw Error(ErrorCode::UpsilonEmpty, "orbit of " + members.front() + " has no Upsilon base point");
    const int len = d.f(*base);
    auto& target = out.components[*base];
    Int pj = 1;
    for (int j = 0; j < d.orbits()[o].size(); ++j) {
      const auto& comp = lambda.at(d.sigma_shift(*base, j));
      for (int i = 0; i < len; ++i) target[i] = checked_add(target[i], checked_mul(pj, comp[i]));
      pj = checked_mul(pj, d.p());
    }
    if (!is_dominant(target)) throw std::logic_error("Upsilon-twist produced a non-dominant tuple");
  }
  return out;
}

Weight delta_twist(const ShimuraDatum& d, const std::string& tbar) {
  auto sig = d.orbit_signature(d.orbit_of(tbar));
  if (std::any_of(sig.begin(), sig.end(), [&](int v) { return v == 0 || v == d.n(); }))
    throw Error(ErrorCode::UpsilonEmpty, "f takes the value 0 or n on the orbit of " + tbar);
  return upsilon_twist(d, delta(d, tbar));
}

GoodSymmetricSearch good_symmetric_exists(const ShimuraDatum& d, Int height) {
  GoodSymmetricSearch out;
  if (d.kind() == Case::C) {
    // Every weight is good in case C; (1,...,1) at one embedding is symmetric.
    Weight w = zero_weight(d);
    auto& t = w.components[d.embeddings().front()];
    std::fill(t.begin(), t.end(), 1);
    out.exists = true;
    out.witness = w;
    return out;
  }
  for (const auto& tau : d.cm_type()) {
    const std::string& s = d.star(tau);
    const int m = std::min(d.f(tau), d.f(s));
    if (m == 0) continue;
    // Enumerate non-increasing mu of length m with entries in [0, height], mu != 0.
    std::vector<Int> mu(m, 0);
    std::function<bool(int, Int)> rec = [&](int i, Int cap) -> bool {
      if (i == m) {
        if (mu[0] == 0) return false;
        Weight w = zero_weight(d);
        for (int k = 0; k < m; ++k) {
          w.components[tau][k] = mu[k];
          w.components[s][k] = mu[k];
        }
        if (is_symmetric(d, w) && is_good(d, w)) {
          out.exists = true;
          out.witness = w;
          return true;
        }
        return false;
      }
      for (Int v = cap; v >= 0; --v) {
        mu[i] = v;
        if (rec(i + 1, v)) return true;
      }
      return false;
    };
    if (rec(0, height)) return out;
  }
  return out;
}

bool all_weights_good(const ShimuraDatum& d) {
  if (d.kind() == Case::C) return true;
  for (int o = 0; o < static_cast<int>(d.orbits().size()); ++o) {
    std::set<int> interior;
    for (int v : d.orbit_signature(o))
      if (v != 0 && v != d.n()) interior.insert(v);
    if (interior.size() > 1) return false;
  }
  return true;
}

}  // namespace modtheta

namespace modtheta {

std::string to_text(const ShimuraDatum& d, const Weight& k) {
  std::string out;
  for (const auto& tau : d.embeddings()) {
    if (!out.empty()) out += ";";
    out += tau + ":";
    const auto& t = k.at(tau);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(t[i]);
    }
  }
  return out;
}

}  // namespace modtheta
