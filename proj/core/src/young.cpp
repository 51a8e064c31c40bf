#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "modtheta/errors.hpp"
#include "modtheta/schur.hpp"

namespace modtheta {

namespace {

using Perm = std::vector<int>;
using QVec = std::vector<mpq_class>;

void check_bounds(int a, const std::vector<Int>& kappa) {
  if (a < 1 || a > 3) throw Error(ErrorCode::BoundsExceeded, "brute force needs 1 <= a <= 3");
  if (static_cast<int>(kappa.size()) != a) throw Error(ErrorCode::LengthMismatch, "weight length differs from a");
  if (!is_dominant(kappa)) throw Error(ErrorCode::NotDominant, "weight is not non-increasing");
  if (!kappa.empty() && kappa.back() < 0) throw Error(ErrorCode::NotPositive, "brute force needs a partition");
  if (tuple_sum(kappa) > 6) throw Error(ErrorCode::BoundsExceeded, "brute force needs |kappa| <= 6");
}

int sign_of(const Perm& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

// All permutations of {0..d-1} preserving each block.
std::vector<Perm> block_group(const std::vector<std::vector<int>>& blocks, int d) {
  std::vector<Perm> out{Perm(d)};
  std::iota(out[0].begin(), out[0].end(), 0);
  for (const auto& block : blocks) {
    std::vector<Perm> next;
    std::vector<int> images = block;
    std::sort(images.begin(), images.end());
    do {
      for (const auto& base : out) {
        Perm p = base;
        for (std::size_t i = 0; i < block.size(); ++i) p[block[i]] = images[i];
        next.push_back(p);
      }
    } while (std::next_permutation(images.begin(), images.end()));
    out = std::move(next);
  }
  return out;
}

// Young symmetrizer sum_{p in rows, q in cols} sgn(q) p q of the row-reading tableau.
std::vector<std::pair<Perm, int>> young_symmetrizer(const Partition& lambda) {
  int d = static_cast<int>(size(lambda));
  std::vector<std::vector<int>> rows, cols;
  int next = 0;
  for (Int len : lambda) {
    rows.emplace_back();
    for (Int c = 0; c < len; ++c) {
      rows.back().push_back(next);
      if (static_cast<Int>(cols.size()) <= c) cols.emplace_back();
      cols[c].push_back(next);
      ++next;
    }
  }
  auto P = block_group(rows, d);
  auto Q = block_group(cols, d);
  std::vector<std::pair<Perm, int>> out;
  out.reserve(P.size() * Q.size());
  for (const auto& p : P)
    for (const auto& q : Q) {
      Perm pq(d);
      for (int i = 0; i < d; ++i) pq[i] = p[q[i]];
      out.emplace_back(pq, sign_of(q));
    }
  return out;
}

// Words of length d over {0..a-1} grouped by content; each group is stable under c.
std::map<std::vector<int>, std::vector<std::vector<int>>> words_by_content(int a, int d) {
  std::map<std::vector<int>, std::vector<std::vector<int>>> out;
  std::vector<int> w(d, 0);
  Int total = 1;
  for (int i = 0; i < d; ++i) total *= a;
  for (Int idx = 0; idx < total; ++idx) {
    Int x = idx;
    for (int i = d - 1; i >= 0; --i) {
      w[i] = static_cast<int>(x % a);
      x /= a;
    }
    std::vector<int> content(a, 0);
    for (int v : w) ++content[v];
    out[content].push_back(w);
  }
  return out;
}

Int word_index(const std::vector<int>& w, int a) {
  Int idx = 0;
  for (int v : w) idx = idx * a + v;
  return idx;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t ncols = rows[0].size(), r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    mpq_class inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class factor = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

mpq_class determinant(std::vector<QVec> m) {
  std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class factor = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  return det;
}

struct ImageBasis {
  Int ambient = 0;                    // a^d
  std::vector<std::vector<std::pair<Int, mpq_class>>> vectors;  // sparse, global indices
  std::vector<Int> pivots;            // global pivot index of each vector
};

// Basis of the image of the Young symmetrizer, normalized so that vector i is
// 1 at pivots[i] and every other basis vector vanishes there.
ImageBasis image_basis(int a, const std::vector<Int>& kappa) {
  Partition lambda = strip_zeros(kappa);
  int d = static_cast<int>(size(lambda));
  ImageBasis out;
  out.ambient = 1;
  for (int i = 0; i < d; ++i) out.ambient *= a;
  auto c = young_symmetrizer(lambda);
  for (const auto& [content, words] : words_by_content(a, d)) {
    std::map<std::vector<int>, std::size_t> local;
    for (std::size_t i = 0; i < words.size(); ++i) local[words[i]] = i;
    std::vector<QVec> rows;
    for (const auto& w : words) {
      QVec v(words.size(), 0);
      std::vector<int> moved(d);
      for (const auto& [perm, sgn] : c) {
        for (int i = 0; i < d; ++i) moved[perm[i]] = w[i];
        v[local[moved]] += sgn;
      }
      rows.push_back(std::move(v));
    }
    auto piv = rref(rows);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<std::pair<Int, mpq_class>> sparse;
      for (std::size_t j = 0; j < rows[r].size(); ++j)
        if (rows[r][j] != 0) sparse.emplace_back(word_index(words[j], a), rows[r][j]);
      out.vectors.push_back(std::move(sparse));
      out.pivots.push_back(word_index(words[piv[r]], a));
    }
  }
  return out;
}

// Applies f to every tensor factor of a vector in (Q^a)^{(x) d}.
QVec apply_tensor_power(const std::vector<QVec>& f, QVec v, int a, int d) {
  Int stride = 1;
  for (int pos = d - 1; pos >= 0; --pos) {
    QVec next(v.size(), 0);
    for (Int idx = 0; idx < static_cast<Int>(v.size()); ++idx) {
      if (v[idx] == 0) continue;
      int s = static_cast<int>((idx / stride) % a);
      Int base = idx - s * stride;
      for (int r = 0; r < a; ++r)
        if (f[r][s] != 0) next[base + r * stride] += f[r][s] * v[idx];
    }
    v = std::move(next);
    stride *= a;
  }
  return v;
}

}  // namespace

Int brute_force_dim(int a, const std::vector<Int>& kappa) {
  check_bounds(a, kappa);
  return static_cast<Int>(image_basis(a, kappa).vectors.size());
}

bool det_power_check(int a, const std::vector<Int>& kappa, int trials, std::uint64_t seed) {
  check_bounds(a, kappa);
  const int d = static_cast<int>(tuple_sum(kappa));
  auto basis = image_basis(a, kappa);
  const Int dim = static_cast<Int>(basis.vectors.size());
  if ((d * dim) % a != 0) return false;
  const Int r = d * dim / a;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  for (int t = 0; t < trials; ++t) {
    std::vector<QVec> f(a, QVec(a));
    mpq_class det_f = 0;
    while (det_f == 0) {
      for (auto& row : f)
        for (auto& x : row) {
          x = mpq_class(num(rng), den(rng));
          x.canonicalize();
        }
      det_f = determinant(f);
    }
    std::vector<QVec> m(dim, QVec(dim));
    for (Int j = 0; j < dim; ++j) {
      QVec v(basis.ambient, 0);
      for (const auto& [idx, val] : basis.vectors[j]) v[idx] = val;
      QVec image = apply_tensor_power(f, v, a, d);
      for (Int i = 0; i < dim; ++i) m[i][j] = image[basis.pivots[i]];
      // The image must lie in the span of the basis.
      for (Int i = 0; i < dim; ++i)
        for (const auto& [idx, val] : basis.vectors[i]) image[idx] -= m[i][j] * val;
      for (const auto& x : image)
        if (x != 0) return false;
    }
    mpq_class expected = 1;
    for (Int k = 0; k < r; ++k) expected *= det_f;
    if (determinant(m) != expected) return false;
  }
  return true;
}

}  // namespace modtheta
