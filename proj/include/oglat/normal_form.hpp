#pragma once

#include "oglat/int_types.hpp"
#include "oglat/matrix.hpp"

#include <cstddef>
#include <tuple>
#include <utility>

namespace oglat {

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
};

// Row HNF: upper echelon, positive pivots, entries above each pivot reduced
// into [0, pivot). Zero rows sink to the bottom.
inline HnfResult hnf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // pick the smallest nonzero |entry| in this column as pivot
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (h(i, c) == 0) continue;
      if (piv == rows || abs_int(h(i, c)) < abs_int(h(piv, c))) piv = i;
    }
    if (piv == rows) continue;
    h.swap_rows(r, piv);
    u.swap_rows(r, piv);
    // clear below with gcd row combinations
    for (std::size_t i = r + 1; i < rows; ++i) {
      while (h(i, c) != 0) {
        Int q = round_div(h(i, c), h(r, c));
        if (q != 0) {
          h.add_row(i, r, -q);
          u.add_row(i, r, -q);
        }
        if (h(i, c) == 0) break;
        h.swap_rows(r, i);
        u.swap_rows(r, i);
      }
    }
    if (h(r, c) < 0) {
      h.scale_row(r, Int(-1));
      u.scale_row(r, Int(-1));
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        h.add_row(i, r, -q);
        u.add_row(i, r, -q);
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

struct SnfResult {
  IntMatrix d;  // diagonal, d_i >= 0, d_i | d_{i+1}
  IntMatrix u;  // unimodular row transform
  IntMatrix v;  // unimodular column transform, u * m * v == d
};

// Smith normal form by repeated gcd elimination. Pivot selection: smallest
// nonzero |entry| of the trailing block, ties broken by lowest row then column.
inline SnfResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const std::size_t nmin = rows < cols ? rows : cols;

  for (std::size_t t = 0; t < nmin; ++t) {
    for (;;) {
      // locate pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (pr == rows || abs_int(d(i, j)) < abs_int(d(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) {
        pr = t;  // trailing block is zero; d(t,t) stays 0
        pc = t;
        break;
      }
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);
      if (d(t, t) < 0) {
        d.scale_row(t, Int(-1));
        u.scale_row(t, Int(-1));
      }

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) dirty = true;  // remainder smaller than pivot; iterate
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // row/col t clean; enforce divisibility of the trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, Int(1));
            u.add_row(t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

}  // namespace oglat
