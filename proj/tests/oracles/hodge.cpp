#include "hodge.hpp"

#include <algorithm>
#include <bit>
#include <gmpxx.h>
#include <limits>
#include <random>
#include <stdexcept>

namespace oracle {

std::vector<Rational> averaged_hodge_slopes(const modtheta::ShimuraDatum& d, int orbit) {
  const auto& members = d.orbits().at(orbit).members;
  const int n = d.n();
  std::vector<Rational> out(n, Rational(0));
  for (const auto& tau : members) {
    for (int i = n - d.f(tau); i < n; ++i) out[i] += Rational(1);
  }
  for (auto& s : out) s /= static_cast<Int>(members.size());
  return out;
}

namespace {

using QMat = std::vector<std::vector<mpq_class>>;

QMat mul(const QMat& a, const QMat& b) {
  const std::size_t n = a.size();
  QMat c(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Product of random elementary integer matrices and its inverse.
std::pair<QMat, QMat> random_unimodular(int n, std::mt19937_64& rng) {
  QMat u(n, std::vector<mpq_class>(n, 0)), inv(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = inv[i][i] = 1;
  if (n < 2) return {u, inv};
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-3, 3);
  for (int step = 0; step < 3 * n; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    int c = coef(rng);
    // u <- u E, E = I + c e_{ij}; inv <- E^{-1} inv.
    for (int r = 0; r < n; ++r) u[r][j] += c * u[r][i];
    for (int col = 0; col < n; ++col) inv[i][col] -= c * inv[j][col];
  }
  return {u, inv};
}

int val(mpz_class x, Int p) {
  if (x == 0) return std::numeric_limits<int>::max();
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int val(const mpq_class& q, Int p) { return val(q.get_num(), p) - val(q.get_den(), p); }

}  // namespace

std::vector<Int> frobenius_elementary_divisors(const modtheta::ShimuraDatum& d, const std::string& tau,
                                               std::uint64_t seed) {
  const int n = d.n();
  const Int p = d.p();
  const int e = d.orbit_size(tau);
  std::mt19937_64 rng(seed);
  // One random basis per member; F_t : H_t -> H_{t o sigma}.
  std::vector<std::pair<QMat, QMat>> bases;
  std::vector<std::string> path;
  for (int i = 0; i < e; ++i) {
    path.push_back(d.sigma_shift(tau, i));
    bases.push_back(random_unimodular(n, rng));
  }
  QMat phi(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i) phi[i][i] = 1;
  for (int i = 0; i < e; ++i) {
    const std::string& t = path[i];
    QMat diag(n, std::vector<mpq_class>(n, 0));
    for (int j = 1; j <= n; ++j) {
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), d.f(t) > n - j ? 1 : 0);
      diag[j - 1][j - 1] = pw;
    }
    // In the random bases: B_{next}^{-1} D B_t.
    const auto& [bt, bt_inv] = bases[i];
    const auto& [bn, bn_inv] = bases[(i + 1) % e];
    QMat step = mul(bn_inv, mul(diag, bt));
    phi = mul(step, phi);
  }
  // Minimal-valuation pivoting; each pivot valuation is an elementary divisor.
  std::vector<Int> out;
  QMat m = phi;
  std::vector<bool> row_used(n, false), col_used(n, false);
  for (int step = 0; step < n; ++step) {
    int best = std::numeric_limits<int>::max(), br = -1, bc = -1;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!row_used[r] && !col_used[c] && m[r][c] != 0 && val(m[r][c], p) < best) {
          best = val(m[r][c], p);
          br = r;
          bc = c;
        }
    if (br < 0) throw std::logic_error("Frobenius composite is singular");
    out.push_back(best);
    row_used[br] = col_used[bc] = true;
    for (int r = 0; r < n; ++r) {
      if (r == br || m[r][bc] == 0) continue;
      mpq_class factor = m[r][bc] / m[br][bc];
      for (int c = 0; c < n; ++c) m[r][c] -= factor * m[br][c];
    }
    for (int c = 0; c < n; ++c) {
      if (c == bc || m[br][c] == 0) continue;
      mpq_class factor = m[br][c] / m[br][bc];
      for (int r = 0; r < n; ++r) m[r][c] -= factor * m[r][bc];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int min_subset_sum(const std::vector<Int>& values, int k) {
  const int n = static_cast<int>(values.size());
  if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
  Int best = std::numeric_limits<Int>::max();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
    Int s = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s += values[i];
    best = std::min(best, s);
  }
  return best;
}

}  // namespace oracle
