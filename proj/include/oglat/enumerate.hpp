#pragma once

#include "oglat/int_types.hpp"
#include "oglat/lattice.hpp"
#include "oglat/matrix.hpp"
#include "oglat/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace oglat {

// Complete list of short vectors up to sign. Vectors are reported in the
// lattice's own basis coordinates, one canonical representative per +- pair
// (first nonzero coordinate positive), sorted lexicographically.
struct ShortVectorReport {
  Int bound;
  std::vector<LatticeVector> vectors;
  std::vector<Int> norms;                // |norm| of vectors[i]
  std::map<Int, std::size_t> counts_by_norm;  // |norm| -> count, both signs
  std::size_t total_pairs() const { return vectors.size(); }
};

namespace detail {

// Branch-and-bound over the exact Gram-Schmidt data. Level k contributes
// (minors[k+1]*x_k + N_k)^2 / (minors[k]*minors[k+1]) to the norm, where
// N_k = sum_{i>k} x_i lam[i][k]; candidates are scanned zig-zag from the
// rational center, so completeness needs no radicals. Vectors are produced
// with their highest-index nonzero reduced coordinate positive, exactly one
// per +- pair.
class Enumerator {
 public:
  Enumerator(const GramSchmidtExact& gs, Int bound)
      : gs_(gs), n_(gs.lam.size()), bound_(std::move(bound)) {
    x_.assign(n_, Int(0));
    sig_.assign(n_ + 1, std::vector<Int>(n_, Int(0)));
    level_den_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) level_den_[k] = gs_.minors[k] * gs_.minors[k + 1];
  }

  // stop_norm: abort the whole search once a nonzero vector with norm <=
  // stop_norm has been recorded (0 disables early stop).
  void run(const Int& stop_norm = 0) {
    stop_norm_ = stop_norm;
    aborted_ = false;
    if (n_ == 0) return;
    descend(static_cast<long>(n_) - 1, Rat(bound_), true);
  }

  // Enumerate only the subtree with fixed top-level value x_{n-1} = top.
  // Returns false when the top value itself is out of bound.
  bool run_subtree(const Int& top) {
    stop_norm_ = 0;
    aborted_ = false;
    if (n_ == 0) return false;
    const std::size_t k = n_ - 1;
    Int lhs = gs_.minors[k + 1] * top;
    if (lhs * lhs > bound_ * level_den_[k]) return false;
    if (n_ == 1) {
      if (top > 0) record(std::vector<Int>{top}, Rat(bound_) - Rat(lhs * lhs, level_den_[k]));
      return true;
    }
    x_[k] = top;
    for (std::size_t j = 0; j < k; ++j) sig_[k][j] = top * gs_.lam[k][j];
    descend(static_cast<long>(k) - 1, Rat(bound_) - Rat(lhs * lhs, level_den_[k]), top == 0);
    return true;
  }

  std::vector<std::pair<std::vector<Int>, Int>>& found() { return found_; }
  bool aborted() const { return aborted_; }

 private:
  void record(const std::vector<Int>& coords, const Rat& rem) {
    Rat norm_rat = Rat(bound_) - rem;
    if (rat_den(norm_rat) != 1)
      throw std::logic_error("enumerate: non-integral norm");  // invariant breach
    Int norm = rat_num(norm_rat);
    found_.emplace_back(coords, norm);
    if (stop_norm_ > 0 && norm <= stop_norm_) aborted_ = true;
  }

  void descend(long k, Rat rem, bool zero_above) {
    if (aborted_) return;
    if (k < 0) {
      if (!zero_above) record(x_, rem);
      return;
    }
    const std::size_t ku = static_cast<std::size_t>(k);
    const Int& den = gs_.minors[ku + 1];
    const Int& nk = sig_[ku + 1][ku];
    const Int rn = rat_num(rem) * level_den_[ku];
    const Int rd = rat_den(rem);
    auto admissible = [&](const Int& xv) {
      Int lhs = den * xv + nk;
      return lhs * lhs * rd <= rn;
    };
    auto enter = [&](const Int& xv) {
      x_[ku] = xv;
      Int lhs = den * xv + nk;
      Rat child_rem = rem - Rat(lhs * lhs, level_den_[ku]);
      for (std::size_t j = 0; j < ku; ++j) sig_[ku][j] = sig_[ku + 1][j] + xv * gs_.lam[ku][j];
      descend(k - 1, std::move(child_rem), zero_above && xv == 0);
    };

    if (zero_above) {
      // all higher coordinates are zero: restrict to x_k >= 0 (one vector
      // per +- pair) and scan upward from the center 0
      for (Int xv = 0; admissible(xv); ++xv) {
        enter(xv);
        if (aborted_) return;
      }
      return;
    }
    Int x0 = round_div(-nk, den);
    if (!admissible(x0)) return;  // interval empty (center misses => all miss)
    enter(x0);
    if (aborted_) return;
    for (Int xv = x0 + 1; admissible(xv); ++xv) {
      enter(xv);
      if (aborted_) return;
    }
    for (Int xv = x0 - 1; admissible(xv); --xv) {
      enter(xv);
      if (aborted_) return;
    }
  }

  const GramSchmidtExact& gs_;
  std::size_t n_;
  Int bound_;
  Int stop_norm_;
  bool aborted_ = false;
  std::vector<Int> x_;
  std::vector<std::vector<Int>> sig_;
  std::vector<Int> level_den_;
  std::vector<std::pair<std::vector<Int>, Int>> found_;
};

struct PreparedDefinite {
  int sign = 1;              // original Gram = sign * (positive definite form)
  IntMatrix transform;       // reduced coords -> original coords (row * T)
  GramSchmidtExact gs;       // of the reduced positive definite Gram
};

inline PreparedDefinite prepare_definite(const Lattice& a) {
  PreparedDefinite p;
  p.sign = definite_sign(a.gram());
  IntMatrix w = a.gram();
  if (p.sign < 0)
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = -w(i, j);
  auto [red, t] = detail::lll_posdef(std::move(w), Rat(3, 4));
  p.gs = gram_schmidt_exact(red);
  p.transform = std::move(t);
  return p;
}

inline void canonicalize_sign(std::vector<Int>& v) {
  for (const auto& c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& x : v) x = -x;
    return;
  }
}

inline bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

inline ShortVectorReport finalize_report(const PreparedDefinite& p, const Int& bound,
                                         std::vector<std::pair<std::vector<Int>, Int>> raw) {
  std::vector<std::pair<std::vector<Int>, Int>> out;
  out.reserve(raw.size());
  for (auto& [coords, norm] : raw) {
    std::vector<Int> orig = vec_mat(coords, p.transform);
    canonicalize_sign(orig);
    out.emplace_back(std::move(orig), norm);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  ShortVectorReport rep;
  rep.bound = bound;
  rep.vectors.reserve(out.size());
  rep.norms.reserve(out.size());
  for (auto& [v, norm] : out) {
    rep.counts_by_norm[norm] += 2;
    rep.vectors.push_back(std::move(v));
    rep.norms.push_back(norm);
  }
  return rep;
}

}  // namespace detail

// Complete short-vector enumeration: all nonzero vectors with |norm| <= bound,
// one representative per +- pair. The enumeration tree may be split at the top
// coordinate across workers; the merged report is canonical regardless.
inline ShortVectorReport short_vectors(const Lattice& a, const Int& bound,
                                       unsigned threads = 1) {
  if (bound <= 0 || bound % 2 != 0)
    throw std::invalid_argument("short_vectors: bound must be a positive even integer");
  detail::PreparedDefinite p = detail::prepare_definite(a);
  const std::size_t n = a.rank();
  if (n == 0) return detail::finalize_report(p, bound, {});

  std::vector<std::pair<std::vector<Int>, Int>> raw;
  if (threads <= 1) {
    detail::Enumerator e(p.gs, bound);
    e.run();
    raw = std::move(e.found());
  } else {
    // top-level values 0,1,2,... are independent subtrees
    std::vector<Int> tops;
    for (Int top = 0;; ++top) {
      Int lhs = p.gs.minors[n] * top;
      if (lhs * lhs > bound * p.gs.minors[n - 1] * p.gs.minors[n]) break;
      tops.push_back(top);
    }
    std::vector<std::vector<std::pair<std::vector<Int>, Int>>> buckets(tops.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tops.size()) return;
        detail::Enumerator e(p.gs, bound);
        e.run_subtree(tops[i]);
        buckets[i] = std::move(e.found());
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& b : buckets)
      for (auto& item : b) raw.push_back(std::move(item));
  }
  return detail::finalize_report(p, bound, std::move(raw));
}

// Least |norm| of a nonzero vector, by doubling the enumeration bound from 2.
// A scan that proved |norm| > prev lets the next scan stop at the first hit
// of prev+2 (even lattice) since nothing smaller can remain.
inline Int minimal_norm(const Lattice& a) {
  if (a.rank() == 0) throw std::invalid_argument("minimal_norm: rank 0 lattice");
  detail::PreparedDefinite p = detail::prepare_definite(a);
  const Int step = is_even(a) ? 2 : 1;
  Int proven_floor = 0;  // minimal norm is known to be > proven_floor
  for (Int bound = 2;; bound *= 2) {
    detail::Enumerator e(p.gs, bound);
    e.run(proven_floor + step);
    Int best = 0;
    for (const auto& [coords, norm] : e.found())
      if (best == 0 || norm < best) best = norm;
    if (e.aborted()) return best;  // hit the provable floor
    if (best != 0) return best;    // completed scan, best is exact
    proven_floor = bound;
  }
}

// Number of vectors (both signs) with |norm| = 2.
inline std::size_t count_roots(const Lattice& a) {
  ShortVectorReport rep = short_vectors(a, 2);
  auto it = rep.counts_by_norm.find(Int(2));
  return it == rep.counts_by_norm.end() ? 0 : it->second;
}

// Number of vectors (both signs) at the minimal norm.
inline std::size_t kissing_number(const Lattice& a, unsigned threads = 1) {
  Int mu = minimal_norm(a);
  ShortVectorReport rep = short_vectors(a, mu % 2 == 0 ? mu : mu + 1, threads);
  return rep.counts_by_norm.at(mu);
}

}  // namespace oglat
