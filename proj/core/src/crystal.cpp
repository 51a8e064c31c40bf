#include "modtheta/crystal.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "modtheta/errors.hpp"
#include "modtheta/polygon.hpp"

namespace modtheta {

int StandardCrystal::row(const std::string& tau) const {
  auto it = std::find(members.begin(), members.end(), tau);
  if (it == members.end()) throw Error(ErrorCode::UnknownEmbedding, tau + " is not in this orbit");
  return static_cast<int>(it - members.begin());
}

std::vector<Int> StandardCrystal::cycle_valuations() const {
  std::vector<Int> out(n, 0);
  for (const auto& r : epsilon)
    for (int j = 0; j < n; ++j) out[j] += r[j];
  return out;
}

StandardCrystal standard_crystal(const ShimuraDatum& d, int orbit) {
  if (d.kind() != Case::A) throw Error(ErrorCode::CaseCUnsupported, "standard crystal is modeled in case A only");
  StandardCrystal c;
  c.orbit = orbit;
  c.members = d.orbits().at(orbit).members;
  c.n = d.n();
  c.p = d.p();
  for (const auto& tau : c.members) {
    std::vector<int> r(c.n, 0);
    for (int j = 1; j <= c.n; ++j) r[j - 1] = d.f(tau) > d.n() - j ? 1 : 0;
    c.epsilon.push_back(r);
  }
  return c;
}

std::vector<Int> phi_valuations(const StandardCrystal& c, const std::string& tau) {
  c.row(tau);
  // phi_tau = F^e maps e_{j,tau} to p^{sum of the j-th column} e_{j,tau}.
  auto v = c.cycle_valuations();
  std::sort(v.begin(), v.end());
  return v;
}

Int c_exponent(const ShimuraDatum& d, const std::string& tau) {
  if (d.f(tau) == 0) throw Error(ErrorCode::ZeroSignature, "f(" + tau + ") = 0");
  const std::string& s = d.star(tau);
  auto vals = phi_valuations(standard_crystal(d, d.orbit_of(s)), s);
  Int c = 0;
  for (int i = 0; i < d.f(tau); ++i) c += vals[i];
  return c;
}

Int c_exponent_slope_sum(const ShimuraDatum& d, const std::string& tau) {
  if (d.f(tau) == 0) throw Error(ErrorCode::ZeroSignature, "f(" + tau + ") = 0");
  auto counts = slope_counts(d, d.star(tau));
  Int c = 0;
  for (int i = 0; i < d.f(tau); ++i) c += counts[i];
  return c;
}

Int c_exponent_literal(const ShimuraDatum& d, const std::string& tau) {
  if (d.f(tau) == 0) throw Error(ErrorCode::ZeroSignature, "f(" + tau + ") = 0");
  Int c = 0;
  for (const auto& t : d.orbits()[d.orbit_of(tau)].members)
    if (d.f(t) > d.f(tau)) c += d.f(t) - d.f(tau);
  return c;
}

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat identity(int n) {
  ZMat m(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat multiply(const ZMat& a, const ZMat& b) {
  std::size_t n = a.size();
  ZMat out(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Bareiss fraction-free determinant.
mpz_class det(ZMat m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int valuation(mpz_class x, Int p) {
  Int v = 0;
  mpz_class pp = static_cast<long>(p);
  while (x % pp == 0) {
    x /= pp;
    ++v;
  }
  return v;
}

// Random unimodular matrix and its inverse, built from elementary operations.
std::pair<ZMat, ZMat> random_unimodular(int n, std::mt19937_64& rng) {
  ZMat u = identity(n), inv = identity(n);
  if (n < 2) return {u, inv};
  std::uniform_int_distribution<int> idx(0, n - 1), coeff(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    int c = coeff(rng);
    // u <- E u with E = I + c e_{ij}; inv <- inv E^{-1}.
    for (int k = 0; k < n; ++k) u[i][k] += c * u[j][k];
    for (int k = 0; k < n; ++k) inv[k][j] -= c * inv[k][i];
  }
  return {u, inv};
}

}  // namespace

Int c_exponent_dense(const ShimuraDatum& d, const std::string& tau, std::uint64_t seed) {
  if (d.f(tau) == 0) throw Error(ErrorCode::ZeroSignature, "f(" + tau + ") = 0");
  if (d.n() > 4) throw Error(ErrorCode::BoundsExceeded, "dense path needs n <= 4");
  const std::string& s = d.star(tau);
  auto c = standard_crystal(d, d.orbit_of(s));
  const int n = d.n();
  const int e = static_cast<int>(c.members.size());
  std::mt19937_64 rng(seed);
  std::vector<std::pair<ZMat, ZMat>> bases;
  for (int i = 0; i < e; ++i) bases.push_back(random_unimodular(n, rng));

  // phi at s as a product of Frobenius steps, each written in a random basis.
  ZMat phi = identity(n);
  const int start = c.row(s);
  for (int step = 0; step < e; ++step) {
    int from = (start + step) % e;
    int to = (from + 1) % e;
    ZMat diag(n, std::vector<mpz_class>(n, 0));
    mpz_class pp = static_cast<long>(d.p());
    for (int j = 0; j < n; ++j) diag[j][j] = c.epsilon[to][j] ? pp : mpz_class(1);
    phi = multiply(multiply(multiply(bases[to].first, diag), bases[from].second), phi);
  }

  const int k = d.f(tau);
  Int best = -1;
  std::vector<int> rsel(n, 0);
  std::fill(rsel.end() - k, rsel.end(), 1);
  do {
    std::vector<int> csel(n, 0);
    std::fill(csel.end() - k, csel.end(), 1);
    do {
      ZMat minor;
      for (int i = 0; i < n; ++i) {
        if (!rsel[i]) continue;
        minor.emplace_back();
        for (int j = 0; j < n; ++j)
          if (csel[j]) minor.back().push_back(phi[i][j]);
      }
      mpz_class m = det(minor);
      if (m != 0) {
        Int v = valuation(m, d.p());
        if (best < 0 || v < best) best = v;
      }
    } while (std::next_permutation(csel.begin(), csel.end()));
  } while (std::next_permutation(rsel.begin(), rsel.end()));
  return best;
}

Int a_exponent(const ShimuraDatum& d, const std::string& tau) {
  auto m = d.min_positive(d.orbit_of(tau));
  if (!m || d.f(tau) != *m)
    throw Error(ErrorCode::PreconditionViolated, "f(" + tau + ") is not the positive minimum on its orbit");
  const std::string& s = d.star(tau);
  Int a = 0;
  for (const auto& t : d.orbits()[d.orbit_of(s)].members)
    if (d.f(t) == d.n()) ++a;
  return a;
}

std::vector<Int> slope_graded_ranks(const StandardCrystal& c, const std::string& tau) {
  const int r = c.row(tau);
  std::vector<Int> ranks;
  int hodge = 0;
  for (int x : c.epsilon[r]) hodge += x;
  if (hodge == 0) return ranks;
  std::map<Int, Int> by_valuation;
  auto vals = c.cycle_valuations();
  for (int j = 0; j < c.n; ++j) by_valuation[vals[j]] += c.epsilon[r][j];
  for (const auto& [v, count] : by_valuation) ranks.push_back(count);
  return ranks;
}

bool verschiebung_lands_in_hodge(const StandardCrystal& c, const std::string& tau, int j) {
  const int r = c.row(tau);
  const int e = static_cast<int>(c.members.size());
  // Hodge part at t is ker F mod p, so V(e_{k, t o sigma}) = p^{1 - eps(t, k)} e_{k, t};
  // the j-fold composite survives mod p exactly on those k with eps = 1 at t o sigma^i, 0 <= i < j.
  for (int k = 0; k < c.n; ++k) {
    bool survives = true;
    for (int i = 0; i < j && survives; ++i) survives = c.epsilon[(r + i) % e][k] == 1;
    if (survives && c.epsilon[r][k] != 1) return false;
  }
  return true;
}

bool verschiebung_image_check(const ShimuraDatum& d, const std::string& tau_o, int j) {
  const int o = d.orbit_of(tau_o);
  const int e = d.orbits()[o].size();
  if (j < 1 || j > e) throw Error(ErrorCode::PreconditionViolated, "j must lie in 1..e");
  auto m = d.min_positive(o);
  if (m && d.f(tau_o) != *m)
    throw Error(ErrorCode::PreconditionViolated, "f(" + tau_o + ") is not the positive minimum on its orbit");
  return verschiebung_lands_in_hodge(standard_crystal(d, o), tau_o, j);
}

}  // namespace modtheta
