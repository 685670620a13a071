#pragma once
// Brute-force Witt equivalence over F_p for small diagonal forms. Knows nothing
// about the library: plain long arithmetic, isotropic vector search to peel off
// hyperbolic planes, then an exhaustive isometry search between the
// anisotropic remainders.

#include <vector>

namespace oracle {

using Gram = std::vector<std::vector<long>>;

inline long md(long x, long p) { return ((x % p) + p) % p; }

inline long inv_mod(long x, long p) {
  long r = 1, b = md(x, p), e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline long bilinear(const Gram& g, const std::vector<long>& u, const std::vector<long>& v, long p) {
  long s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) s = (s + u[i] * g[i][j] % p * v[j]) % p;
  return s;
}

// Next vector in lexicographic order; false after wrapping around.
inline bool next_vector(std::vector<long>& v, long p) {
  for (auto& c : v) {
    if (++c < p) return true;
    c = 0;
  }
  return false;
}

inline bool find_isotropic(const Gram& g, long p, std::vector<long>& out) {
  std::vector<long> v(g.size(), 0);
  while (next_vector(v, p))
    if (bilinear(g, v, v, p) == 0) {
      out = v;
      return true;
    }
  return false;
}

// Basis of {u : B(u, a) = B(u, b) = 0} by Gaussian elimination.
inline std::vector<std::vector<long>> orthogonal_complement(const Gram& g, const std::vector<long>& a,
                                                            const std::vector<long>& b, long p) {
  std::size_t n = g.size();
  std::vector<std::vector<long>> rows(2, std::vector<long>(n));
  for (std::size_t j = 0; j < n; ++j) {
    long ra = 0, rb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ra = (ra + a[i] * g[i][j]) % p;
      rb = (rb + b[i] * g[i][j]) % p;
    }
    rows[0][j] = ra;
    rows[1][j] = rb;
  }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < 2; ++c) {
    std::size_t k = r;
    while (k < 2 && rows[k][c] == 0) ++k;
    if (k == 2) continue;
    std::swap(rows[k], rows[r]);
    long iv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * iv % p;
    for (std::size_t o = 0; o < 2; ++o)
      if (o != r && rows[o][c]) {
        long f = rows[o][c];
        for (std::size_t j = 0; j < n; ++j) rows[o][j] = md(rows[o][j] - f * rows[r][j], p);
      }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<long>> basis;
  for (std::size_t c = 0; c < n; ++c) {
    bool is_pivot = false;
    for (int pc : pivot_col) is_pivot = is_pivot || pc == static_cast<int>(c);
    if (is_pivot) continue;
    std::vector<long> v(n, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = md(-rows[i][c], p);
    basis.push_back(v);
  }
  return basis;
}

inline Gram restrict_form(const Gram& g, const std::vector<std::vector<long>>& basis, long p) {
  Gram out(basis.size(), std::vector<long>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) out[i][j] = bilinear(g, basis[i], basis[j], p);
  return out;
}

inline Gram anisotropic_part(Gram g, long p) {
  std::vector<long> v;
  while (!g.empty() && find_isotropic(g, p, v)) {
    // partner w with B(v, w) != 0 among the unit vectors
    std::vector<long> w(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::fill(w.begin(), w.end(), 0);
      w[i] = 1;
      if (bilinear(g, v, w, p) != 0) break;
    }
    g = restrict_form(g, orthogonal_complement(g, v, w, p), p);
  }
  return g;
}

inline bool isometric(const Gram& a, const Gram& b, long p) {
  std::size_t n = a.size();
  if (n != b.size()) return false;
  if (n == 0) return true;
  std::vector<long> entries(n * n, 0);
  while (next_vector(entries, p)) {
    // M^T A M == B with M invertible (columns = images of the basis)
    std::vector<std::vector<long>> cols(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cols[j][i] = entries[i * n + j];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = bilinear(a, cols[i], cols[j], p) == md(b[i][j], p);
    if (!ok) continue;
    long det = n == 1 ? cols[0][0] : md(cols[0][0] * cols[1][1] - cols[0][1] * cols[1][0], p);
    if (n > 2) return true;  // not reached: anisotropic forms over F_p have rank <= 2
    if (det != 0) return true;
  }
  return false;
}

inline Gram diagonal(const std::vector<long>& d, long p) {
  Gram g(d.size(), std::vector<long>(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = md(d[i], p);
  return g;
}

// Witt equivalence of two diagonal forms.
inline bool witt_equivalent(const std::vector<long>& x, const std::vector<long>& y, long p) {
  return isometric(anisotropic_part(diagonal(x, p), p), anisotropic_part(diagonal(y, p), p), p);
}

}  // namespace oracle
