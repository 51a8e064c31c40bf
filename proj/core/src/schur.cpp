#include "modtheta/schur.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "modtheta/errors.hpp"
#include "modtheta/weights.hpp"

namespace modtheta {

Int SchurExpansion::multiplicity(const SchurLabel& label) const {
  for (const auto& t : terms)
    if (t.label == label) return t.mult;
  return 0;
}

Int SchurExpansion::max_multiplicity() const {
  Int m = 0;
  for (const auto& t : terms) m = std::max(m, t.mult);
  return m;
}

Partition strip_zeros(const std::vector<Int>& tuple) {
  Partition out;
  for (Int x : tuple)
    if (x != 0) out.push_back(x);
  return out;
}

std::vector<Int> pad(const Partition& p, int length) {
  std::vector<Int> out(p.begin(), p.end());
  if (static_cast<int>(out.size()) > length) throw Error(ErrorCode::LengthMismatch, "partition longer than block");
  out.resize(length, 0);
  return out;
}

Int size(const Partition& p) { return tuple_sum(p); }

bool contains_shape(const Partition& outer, const Partition& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

std::vector<Partition> partitions_of(Int n, Int max_len, Int max_part) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(Int, Int)> rec = [&](Int remaining, Int cap) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<Int>(cur.size()) >= max_len) return;
    for (Int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, max_part);
  std::sort(out.begin(), out.end());
  return out;
}

bool dominates(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int sa = 0, sb = 0;
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return sa == sb;
}

BigInt weyl_dim(int a, const std::vector<Int>& kappa) {
  if (static_cast<int>(kappa.size()) != a)
    throw Error(ErrorCode::LengthMismatch, "weight length differs from a");
  if (!is_dominant(kappa)) throw Error(ErrorCode::NotDominant, "weight is not non-increasing");
  BigInt num = 1, den = 1;
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) {
      num *= BigInt(static_cast<long>(kappa[i] - kappa[j] + j - i));
      den *= BigInt(j - i);
    }
  return num / den;
}

BigInt binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

// Enumerates LR tableaux of shape lambda/mu with content nu, row by row.
// c[r][k] is the number of letters k+1 placed in row r.
std::map<Partition, Int> lr_compute(const Partition& mu, const Partition& nu) {
  std::map<Partition, Int> out;
  if (nu.empty()) {
    out[mu] = 1;
    return out;
  }
  if (mu.empty()) {
    out[nu] = 1;
    return out;
  }
  const int L = static_cast<int>(nu.size());
  const int R = static_cast<int>(mu.size()) + L;
  std::vector<Int> m(R, 0);
  for (std::size_t i = 0; i < mu.size(); ++i) m[i] = mu[i];

  std::vector<std::vector<Int>> c(R, std::vector<Int>(L, 0));
  std::vector<Int> cum(L, 0);  // letters placed in rows before the current one
  Int total_left = size(nu);

  std::function<void(int, int, Int)> place = [&](int r, int k, Int row_sum) {
    if (k == L) {
      for (int i = 0; i < L; ++i) cum[i] += c[r][i];
      total_left -= row_sum;
      if (total_left == 0) {
        Partition lambda;
        for (int i = 0; i < R; ++i) {
          Int len = m[i];
          if (i <= r)
            for (int j = 0; j < L; ++j) len += c[i][j];
          if (len > 0) lambda.push_back(len);
        }
        ++out[lambda];
      } else if (r + 1 < R) {
        place(r + 1, 0, 0);
      }
      total_left += row_sum;
      for (int i = 0; i < L; ++i) cum[i] -= c[r][i];
      return;
    }
    Int hi = nu[k] - cum[k];
    if (k >= 1) hi = std::min(hi, cum[k - 1] - cum[k]);
    if (r >= 1) {
      Int above = m[r - 1];
      for (int j = 0; j < k; ++j) above += c[r - 1][j];
      hi = std::min(hi, above - m[r] - row_sum);
    }
    for (Int v = 0; v <= hi; ++v) {
      c[r][k] = v;
      place(r, k + 1, row_sum + v);
    }
    c[r][k] = 0;
  };
  place(0, 0, 0);
  return out;
}

}  // namespace

std::map<Partition, Int> LittlewoodRichardson::multiply(const Partition& mu, const Partition& nu) {
  auto key = std::make_pair(mu, nu);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto result = lr_compute(mu, nu);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, result);
  return result;
}

Int LittlewoodRichardson::coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (size(lambda) != size(mu) + size(nu)) return 0;
  if (!contains_shape(lambda, mu) || !contains_shape(lambda, nu)) return 0;
  auto prod = multiply(mu, nu);
  auto it = prod.find(lambda);
  return it == prod.end() ? 0 : it->second;
}

LittlewoodRichardson& default_lr_engine() {
  static LittlewoodRichardson engine;
  return engine;
}

SchurExpansion lr_multiply(const Partition& mu, const Partition& nu) {
  if (!is_dominant(mu) || !is_dominant(nu) || (!mu.empty() && mu.back() <= 0) || (!nu.empty() && nu.back() <= 0))
    throw Error(ErrorCode::BadPartition, "parts must be positive and non-increasing");
  SchurExpansion out;
  for (const auto& [lambda, mult] : default_lr_engine().multiply(mu, nu)) out.terms.push_back({{lambda}, mult});
  return out;
}

SchurExpansion cauchy_sym_power(Int e, int a, int b) {
  if (e < 0 || a < 0 || b < 0) throw Error(ErrorCode::BadPartition, "negative argument");
  SchurExpansion out;
  BigInt total = 0;
  for (const auto& lambda : partitions_of(e, std::min(a, b), e)) {
    out.terms.push_back({{lambda, lambda}, 1});
    total += weyl_dim(a, pad(lambda, a)) * weyl_dim(b, pad(lambda, b));
  }
  if (a * b > 0 && total != binomial(static_cast<Int>(a) * b + e - 1, e))
    throw std::logic_error("Cauchy dimension identity failed");
  std::sort(out.terms.begin(), out.terms.end(), [](const auto& x, const auto& y) { return x.label < y.label; });
  return out;
}

SchurExpansion plethysm_sym_sym2(Int e, int a) {
  if (e < 0 || a < 0) throw Error(ErrorCode::BadPartition, "negative argument");
  SchurExpansion out;
  BigInt total = 0;
  for (const auto& mu : partitions_of(e, a, e)) {
    Partition lambda;
    for (Int x : mu) lambda.push_back(2 * x);
    out.terms.push_back({{lambda}, 1});
    total += weyl_dim(a, pad(lambda, a));
  }
  Int sym2 = static_cast<Int>(a) * (a + 1) / 2;
  if (a > 0 && total != binomial(sym2 + e - 1, e)) throw std::logic_error("plethysm dimension identity failed");
  std::sort(out.terms.begin(), out.terms.end(), [](const auto& x, const auto& y) { return x.label < y.label; });
  return out;
}

namespace {

std::map<SchurLabel, Int> restrict_levi(const Partition& kappa, int a, const std::vector<int>& blocks,
                                        std::size_t i) {
  std::map<SchurLabel, Int> out;
  const int m = blocks[i];
  if (i + 1 == blocks.size()) {
    out[{pad(kappa, m)}] = 1;
    return out;
  }
  const int rest = a - m;
  const Int total = size(kappa);
  const Int cap = kappa.empty() ? 0 : kappa.front();
  auto& lr = default_lr_engine();
  for (Int s = 0; s <= total; ++s) {
    for (const auto& nu : partitions_of(s, m, cap)) {
      if (!contains_shape(kappa, nu)) continue;
      for (const auto& rho : partitions_of(total - s, rest, cap)) {
        if (!contains_shape(kappa, rho)) continue;
        Int c = lr.coefficient(kappa, nu, rho);
        if (c == 0) continue;
        for (const auto& [label, mult] : restrict_levi(rho, rest, blocks, i + 1)) {
          SchurLabel full{pad(nu, m)};
          full.insert(full.end(), label.begin(), label.end());
          out[full] += c * mult;
        }
      }
    }
  }
  return out;
}

}  // namespace

LeviBranching branch_to_levi(const std::vector<Int>& kappa, const std::vector<int>& m_parts) {
  if (!is_dominant(kappa)) throw Error(ErrorCode::NotDominant, "weight is not non-increasing");
  Int a = 0;
  for (int m : m_parts) {
    if (m <= 0) throw Error(ErrorCode::BadPartition, "Levi block sizes must be positive");
    a += m;
  }
  if (m_parts.empty() || a != static_cast<Int>(kappa.size()))
    throw Error(ErrorCode::BadPartition, "block sizes must sum to the weight length");

  LeviBranching out;
  out.det_shift = kappa.empty() ? 0 : std::max<Int>(0, -kappa.back());
  std::vector<Int> shifted = kappa;
  for (Int& x : shifted) x += out.det_shift;

  for (const auto& [key, mult] : restrict_levi(strip_zeros(shifted), static_cast<int>(a), m_parts, 0)) {
    SchurLabel label = key;
    for (auto& block : label)
      for (Int& x : block) x -= out.det_shift;
    out.expansion.terms.push_back({label, mult});
    if (mult > 1) out.multiplicity_above_one = true;
  }

  std::size_t offset = 0;
  for (int m : m_parts) {
    out.top.emplace_back(kappa.begin() + offset, kappa.begin() + offset + m);
    offset += m;
  }

  BigInt total = 0;
  for (const auto& t : out.expansion.terms) {
    BigInt prod = t.mult;
    for (std::size_t b = 0; b < t.label.size(); ++b) prod *= weyl_dim(m_parts[b], t.label[b]);
    total += prod;
  }
  if (total != weyl_dim(static_cast<int>(a), kappa)) throw std::logic_error("branching dimension identity failed");
  if (out.expansion.multiplicity(out.top) != 1) throw std::logic_error("top Levi constituent missing");
  return out;
}

bool in_sym2_tensor_power(const Partition& lambda, int a) {
  Int total = size(lambda);
  if (total % 2 != 0 || static_cast<int>(lambda.size()) > a) return false;
  std::set<Partition> level{{}};
  for (Int step = 0; step < total / 2; ++step) {
    std::set<Partition> next;
    for (const auto& mu : level) {
      // Add a horizontal strip of size 2 that stays inside lambda.
      std::vector<Int> base = mu;
      base.resize(lambda.size(), 0);
      std::vector<Int> nu = base;
      std::function<void(std::size_t, Int)> rec = [&](std::size_t row, Int left) {
        if (row == lambda.size()) {
          if (left == 0) next.insert(strip_zeros(nu));
          return;
        }
        Int hi = lambda[row] - base[row];
        if (row > 0) hi = std::min(hi, base[row - 1] - base[row]);
        hi = std::min(hi, left);
        for (Int v = 0; v <= hi; ++v) {
          nu[row] = base[row] + v;
          rec(row + 1, left - v);
        }
        nu[row] = base[row];
      };
      rec(0, 2);
    }
    level = std::move(next);
  }
  return level.count(lambda) != 0;
}

std::optional<Int> admissible_depth(const ShimuraDatum& d, const Weight& kappa) {
  if (!is_nonnegative(kappa)) throw Error(ErrorCode::NotPositive, "admissibility needs non-negative entries");
  Int depth = 0;
  if (d.kind() == Case::A) {
    for (const auto& t : d.cm_type()) {
      Int s = tuple_sum(kappa.at(t));
      if (s != tuple_sum(kappa.at(d.star(t)))) return std::nullopt;
      depth += s;
    }
    return depth;
  }
  for (const auto& t : d.embeddings()) {
    Partition lambda = strip_zeros(kappa.at(t));
    if (size(lambda) % 2 != 0) return std::nullopt;
    if (!in_sym2_tensor_power(lambda, d.n())) return std::nullopt;
    depth += size(lambda) / 2;
  }
  return depth;
}

bool in_symmetric_power(const ShimuraDatum& d, const Weight& kappa) {
  if (!is_nonnegative(kappa)) return false;
  if (d.kind() == Case::A) {
    for (const auto& t : d.cm_type()) {
      Partition lambda = strip_zeros(kappa.at(t));
      Partition mu = strip_zeros(kappa.at(d.star(t)));
      if (lambda != mu) return false;
      auto exp = cauchy_sym_power(size(lambda), d.f(t), d.f(d.star(t)));
      if (exp.multiplicity({lambda, lambda}) != 1) return false;
    }
    return true;
  }
  for (const auto& t : d.embeddings()) {
    Partition lambda = strip_zeros(kappa.at(t));
    if (size(lambda) % 2 != 0) return false;
    if (plethysm_sym_sym2(size(lambda) / 2, d.n()).multiplicity({lambda}) != 1) return false;
  }
  return true;
}

}  // namespace modtheta
