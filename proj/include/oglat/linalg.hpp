#pragma once

#include "oglat/int_types.hpp"
#include "oglat/matrix.hpp"
#include "oglat/normal_form.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace oglat {

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det_exact(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: non-square input");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

// Basis of {x integer row : x * m == 0}. The result is saturated (primitive)
// and in canonical HNF form: rows of U matching zero rows of H = U*m span the
// kernel, and the kernel is the intersection of a Q-subspace with Z^rows.
inline IntMatrix integral_kernel(const IntMatrix& m) {
  HnfResult res = hnf(m);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < res.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < res.h.cols(); ++j)
      if (res.h(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) ++rank;
  }
  IntMatrix ker(m.rows() - rank, m.rows());
  std::size_t r = 0;
  for (std::size_t i = 0; i < res.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < res.h.cols(); ++j)
      if (res.h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) ker.set_row(r++, res.u.row(i));
  }
  return hnf(ker).h;  // canonical basis
}

struct Signature {
  std::size_t pos = 0;
  std::size_t neg = 0;
};

// Exact signature of a nondegenerate symmetric form via rational congruent
// diagonalization. Zero diagonal pivots are handled by adding the partner row
// of a nonzero off-diagonal pair (the x^2 - y^2 split), never numerically.
inline Signature signature(const IntMatrix& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("signature: non-symmetric input");
  const std::size_t n = g.rows();
  RatMatrix a(g);
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swp = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a(i, i) != 0) {
          swp = i;
          break;
        }
      if (swp != n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swp, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, swp));
      } else {
        std::size_t part = n;
        for (std::size_t i = k + 1; i < n; ++i)
          if (a(k, i) != 0) {
            part = i;
            break;
          }
        if (part == n) throw std::domain_error("signature: degenerate form");
        // b_k += b_part gives diagonal entry 2*a(k,part) != 0
        for (std::size_t j = 0; j < n; ++j) a(k, j) += a(part, j);
        for (std::size_t i = 0; i < n; ++i) a(i, k) += a(i, part);
      }
    }
    const Rat piv = a(k, k);
    if (piv > 0)
      ++sig.pos;
    else
      ++sig.neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / piv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return sig;
}

// Exact inverse by Gauss-Jordan over the rationals.
inline RatMatrix rat_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("rat_inverse: non-square input");
  const std::size_t n = m.rows();
  RatMatrix a(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (a(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv == n) throw std::domain_error("rat_inverse: singular matrix");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    Rat p = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// Solves X * b = r exactly over Q for each row of r, where the rows of b are
// linearly independent. Throws if some row of r lies outside the row span.
inline RatMatrix solve_in_row_span(const IntMatrix& b, const RatMatrix& r) {
  if (b.cols() != r.cols()) throw std::invalid_argument("solve_in_row_span: shape mismatch");
  const std::size_t k = b.rows(), n = b.cols();
  // Augmented elimination on [b^T | r^T] columns.
  RatMatrix a(n, k + r.rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = Rat(b(j, i));
    for (std::size_t j = 0; j < r.rows(); ++j) a(i, k + j) = r(j, i);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_col(k, n);
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = row; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == n) throw std::domain_error("solve_in_row_span: dependent rows in b");
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(piv, j));
    Rat p = a(row, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivot_of_col[c] = row;
    ++row;
  }
  // rows >= k of the reduced system must have zero right-hand sides
  for (std::size_t i = row; i < n; ++i)
    for (std::size_t j = 0; j < r.rows(); ++j)
      if (a(i, k + j) != 0) throw std::domain_error("solve_in_row_span: not in row span");
  RatMatrix x(r.rows(), k);
  for (std::size_t j = 0; j < r.rows(); ++j)
    for (std::size_t c = 0; c < k; ++c) x(j, c) = a(pivot_of_col[c], k + j);
  return x;
}

}  // namespace oglat
