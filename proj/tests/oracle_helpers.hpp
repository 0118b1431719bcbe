#pragma once

// Test-only oracles, deliberately independent of the library's enumeration
// and elimination paths: the box oracle walks the full coefficient box with
// incremental partial sums (no branch-and-bound, no Gram-Schmidt data) and
// carries its own Gauss-Jordan inverse for the certified box radius.

#include "oglat/int_types.hpp"
#include "oglat/linalg.hpp"
#include "oglat/matrix.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using oglat::Int;
using oglat::IntMatrix;
using oglat::Rat;

// Plain rational Gauss-Jordan inverse, kept separate from oglat::rat_inverse.
inline std::vector<std::vector<Rat>> invert(const IntMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(g(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw std::domain_error("oracle invert: singular");
    std::swap(a[k], a[piv]);
    Rat p = a[k][k];
    for (auto& x : a[k]) x /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

inline Int isqrt_floor(const Rat& q) {
  if (q < 0) return 0;
  Int fl = oglat::floor_rat(q);
  Int r = boost::multiprecision::sqrt(fl);
  while ((r + 1) * (r + 1) <= fl) ++r;
  return r;
}

// Counts of nonzero vectors (both signs) with x G x^T <= bound, by exhaustive
// scan of the certified coefficient box |x_i| <= sqrt(bound * (G^{-1})_ii).
// G must be positive definite.
inline std::map<Int, std::size_t> box_counts(const IntMatrix& g, const Int& bound) {
  const std::size_t n = g.rows();
  auto inv = invert(g);
  std::vector<Int> radius(n);
  for (std::size_t i = 0; i < n; ++i) radius[i] = isqrt_floor(Rat(bound) * inv[i][i]);

  std::map<Int, std::size_t> counts;
  std::vector<Int> x(n);
  // walk the box; partial[i] = contribution of coordinates < i is not used --
  // recompute norms incrementally along the last coordinate instead
  std::vector<Int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = -radius[i];
    hi[i] = radius[i];
  }
  // odometer loop
  for (std::size_t i = 0; i < n; ++i) x[i] = lo[i];
  for (;;) {
    // norm = x G x^T, computed directly (exhaustive oracle, no shortcuts)
    Int norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (x[j] == 0) continue;
        norm += x[i] * g(i, j) * x[j];
      }
    }
    bool zero = true;
    for (const auto& c : x)
      if (c != 0) zero = false;
    if (!zero && norm <= bound) ++counts[norm];
    std::size_t k = 0;
    while (k < n && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  return counts;
}

// Deterministic pseudo-random helpers.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline IntMatrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols,
                               int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(gen);
  return m;
}

// Product of random elementary shears and swaps; |det| = 1 by construction.
inline IntMatrix random_unimodular(std::mt19937_64& gen, std::size_t n, int ops, int coef = 3) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> c(-coef, coef);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int t = 0; t < ops; ++t) {
    std::size_t i = idx(gen), j = idx(gen);
    if (i == j) continue;
    if (kind(gen) == 0)
      u.swap_rows(i, j);
    else
      u.add_row(i, j, Int(c(gen)));
  }
  return u;
}

// Random positive definite Gram: R R^T + diag boost.
inline IntMatrix random_pos_def(std::mt19937_64& gen, std::size_t n, int entry = 2) {
  IntMatrix r = random_matrix(gen, n, n, -entry, entry);
  IntMatrix g = r * r.transposed();
  for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;
  return g;
}

// Random even symmetric nondegenerate Gram (any signature).
inline IntMatrix random_even_gram(std::mt19937_64& gen, std::size_t n, int entry = 4) {
  for (;;) {
    IntMatrix m = random_matrix(gen, n, n, -entry, entry);
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = m(i, j) + m(j, i);
    bool nondeg = true;
    try {
      if (oglat::det_exact(g) == 0) nondeg = false;
    } catch (...) {
      nondeg = false;
    }
    if (nondeg) return g;
  }
}

}  // namespace oracle
