#pragma once

#include "oglat/int_types.hpp"
#include "oglat/linalg.hpp"
#include "oglat/matrix.hpp"
#include "oglat/normal_form.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oglat {

using LatticeVector = std::vector<Int>;

// Even or odd nondegenerate integral lattice, given by an exact symmetric
// Gram matrix on a fixed basis. Vectors are integer rows in that basis.
// Immutable after construction.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram, std::optional<std::string> label = std::nullopt)
      : gram_(std::move(gram)), label_(std::move(label)) {
    if (!gram_.is_symmetric()) throw std::invalid_argument("Lattice: Gram not symmetric");
    det_ = det_exact(gram_);
    if (rank() > 0 && det_ == 0) throw std::invalid_argument("Lattice: degenerate Gram");
  }

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const Int& det() const { return det_; }
  Int abs_det() const { return abs_int(det_); }
  const std::optional<std::string>& label() const { return label_; }

  Lattice with_label(std::string l) const {
    Lattice c = *this;
    c.label_ = std::move(l);
    return c;
  }

 private:
  IntMatrix gram_;
  Int det_;
  std::optional<std::string> label_;
};

// Sublattice of an ambient lattice, rows of `basis` are generators in ambient
// coordinates and must be linearly independent over Q.
class Sublattice {
 public:
  Sublattice(Lattice ambient, IntMatrix basis)
      : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    if (basis_.cols() != ambient_.rank())
      throw std::invalid_argument("Sublattice: basis width != ambient rank");
    HnfResult h = hnf(basis_);
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.h.rows(); ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < h.h.cols(); ++j)
        if (h.h(i, j) != 0) zero = false;
      if (!zero) ++r;
    }
    if (r != basis_.rows())
      throw std::invalid_argument("Sublattice: basis rows linearly dependent");
  }

  const Lattice& ambient() const { return ambient_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }

 private:
  Lattice ambient_;
  IntMatrix basis_;
};

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  std::optional<std::string> label;
  if (a.label() && b.label()) label = *a.label() + " + " + *b.label();
  return Lattice(block_diag(a.gram(), b.gram()), label);
}

inline Lattice rescale(const Lattice& a, const Int& n) {
  if (n == 0) throw std::invalid_argument("rescale: zero scale");
  IntMatrix g = a.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= n;
  std::optional<std::string> label;
  if (a.label()) label = *a.label() + "(" + n.str() + ")";
  return Lattice(std::move(g), label);
}

// For an integral Gram, evenness of all vectors reduces to even diagonal.
inline bool is_even(const Lattice& a) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a.gram()(i, i) % 2 != 0) return false;
  return true;
}

inline Int pairing(const Lattice& a, const LatticeVector& v, const LatticeVector& w) {
  if (v.size() != a.rank() || w.size() != a.rank())
    throw std::invalid_argument("pairing: rank mismatch");
  return dot(vec_mat(v, a.gram()), w);
}

inline Int norm(const Lattice& a, const LatticeVector& v) { return pairing(a, v, v); }

inline bool is_zero_vec(const LatticeVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// (v, L) = gcd of the pairings of v with a basis of L.
inline Int divisibility(const Lattice& a, const LatticeVector& v) {
  if (v.size() != a.rank()) throw std::invalid_argument("divisibility: rank mismatch");
  if (is_zero_vec(v)) throw std::invalid_argument("divisibility: zero vector");
  std::vector<Int> p = vec_mat(v, a.gram());
  Int g = 0;
  for (const auto& x : p) g = gcd_int(g, x);
  return g;
}

inline RatMatrix dual_gram(const Lattice& a) { return rat_inverse(a.gram()); }

// Saturated basis of {x in ambient : x . b = 0 for all rows b of s}.
inline Sublattice orthogonal_complement(const Sublattice& s) {
  const Lattice& amb = s.ambient();
  IntMatrix m = amb.gram() * s.basis().transposed();  // n x k
  return Sublattice(amb, integral_kernel(m));
}

// Smallest primitive sublattice with the same rational span: intersect the
// span with the ambient Z-module via a double kernel.
inline Sublattice saturate(const Sublattice& s) {
  IntMatrix perp = integral_kernel(s.basis().transposed());  // vectors std-orthogonal to span
  return Sublattice(s.ambient(), integral_kernel(perp.transposed()));
}

inline bool is_primitive(const Sublattice& s) {
  SnfResult r = snf(s.basis());
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (r.d(i, i) != 1) return false;
  return true;
}

inline bool same_row_span(const IntMatrix& a, const IntMatrix& b) {
  return hnf(a).h == hnf(b).h;
}

// Restriction of the ambient form to the sublattice basis; degenerate
// restrictions are rejected rather than silently quotiented.
inline Lattice sublattice_lattice(const Sublattice& s,
                                  std::optional<std::string> label = std::nullopt) {
  IntMatrix g = s.basis() * s.ambient().gram() * s.basis().transposed();
  if (s.rank() > 0 && det_exact(g) == 0)
    throw std::domain_error("sublattice_lattice: degenerate restricted form");
  return Lattice(std::move(g), std::move(label));
}

}  // namespace oglat
