#pragma once

#include "oglat/int_types.hpp"
#include "oglat/lattice.hpp"
#include "oglat/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oglat {

// Fraction-free Gram-Schmidt data for a positive definite integral Gram:
//   minors[k]   = k-th leading principal minor (minors[0] = 1),
//   lam[i][k]   = integral Gram-Schmidt coefficient, mu_ik = lam[i][k] / minors[k+1],
//   |b_k*|^2    = minors[k+1] / minors[k].
// All quantities are exact integers (Bareiss elimination).
struct GramSchmidtExact {
  bool positive_definite = false;
  std::vector<Int> minors;
  std::vector<std::vector<Int>> lam;
};

inline GramSchmidtExact gram_schmidt_exact(const IntMatrix& g) {
  const std::size_t n = g.rows();
  GramSchmidtExact gs;
  gs.minors.assign(n + 1, Int(1));
  gs.lam.assign(n, std::vector<Int>());
  for (std::size_t i = 0; i < n; ++i) gs.lam[i].assign(i, Int(0));
  IntMatrix a = g;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return gs;  // not positive definite
    gs.minors[k + 1] = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) gs.lam[i][k] = a(i, k);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j <= i; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / gs.minors[k];
        a(j, i) = a(i, j);
      }
  }
  gs.positive_definite = true;
  return gs;
}

// +1 for positive definite, -1 for negative definite; throws on indefinite or
// degenerate input. Rank 0 counts as definite.
inline int definite_sign(const IntMatrix& gram) {
  if (gram.rows() == 0) return 1;
  if (gram_schmidt_exact(gram).positive_definite) return 1;
  IntMatrix neg = gram;
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
  if (gram_schmidt_exact(neg).positive_definite) return -1;
  throw std::invalid_argument("definite_sign: lattice is not definite");
}

struct LllResult {
  Lattice reduced;
  IntMatrix transform;  // unimodular, reduced.gram == T * G * T^T
};

namespace detail {

// LLL on a positive definite Gram. Size reductions update the integral GS
// coefficients in place; swaps trigger a full recomputation.
inline std::pair<IntMatrix, IntMatrix> lll_posdef(IntMatrix w, const Rat& delta) {
  const std::size_t n = w.rows();
  IntMatrix t = IntMatrix::identity(n);
  if (n < 2) return {std::move(w), std::move(t)};
  GramSchmidtExact gs = gram_schmidt_exact(w);
  if (!gs.positive_definite) throw std::invalid_argument("lll: input not positive definite");

  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Int q = round_div(gs.lam[k][jj], gs.minors[jj + 1]);
      if (q == 0) continue;
      w.add_row(k, jj, -q);
      w.add_col(k, jj, -q);
      t.add_row(k, jj, -q);
      for (std::size_t tt = 0; tt < jj; ++tt) gs.lam[k][tt] -= q * gs.lam[jj][tt];
      gs.lam[k][jj] -= q * gs.minors[jj + 1];
    }
    // Lovasz: |b_k*|^2 >= (delta - mu^2) |b_{k-1}*|^2
    Rat lhs(gs.minors[k + 1], gs.minors[k]);
    Rat mu(gs.lam[k][k - 1], gs.minors[k]);
    Rat rhs = (delta - mu * mu) * Rat(gs.minors[k], gs.minors[k - 1]);
    if (lhs >= rhs) {
      ++k;
    } else {
      w.swap_rows(k, k - 1);
      w.swap_cols(k, k - 1);
      t.swap_rows(k, k - 1);
      gs = gram_schmidt_exact(w);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return {std::move(w), std::move(t)};
}

}  // namespace detail

// Exact LLL reduction of a definite lattice given by its Gram matrix only.
inline LllResult lll(const Lattice& a, const Rat& delta = Rat(3, 4)) {
  if (!(delta > Rat(1, 4) && delta < 1)) throw std::invalid_argument("lll: delta out of (1/4,1)");
  const int sign = definite_sign(a.gram());
  IntMatrix w = a.gram();
  if (sign < 0)
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = -w(i, j);
  auto [red, t] = detail::lll_posdef(std::move(w), delta);
  if (sign < 0)
    for (std::size_t i = 0; i < red.rows(); ++i)
      for (std::size_t j = 0; j < red.cols(); ++j) red(i, j) = -red(i, j);
  return {Lattice(std::move(red), a.label()), std::move(t)};
}

}  // namespace oglat
