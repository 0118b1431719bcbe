#pragma once

#include "oglat/catalog.hpp"
#include "oglat/golay.hpp"
#include "oglat/int_types.hpp"
#include "oglat/lattice.hpp"
#include "oglat/linalg.hpp"
#include "oglat/matrix.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oglat {

// Finite-order isometry of a lattice. Row-vector convention project-wide:
// vectors act on the right, x -> x * M, so preserving the form means
// M * G * M^T == G.
class Isometry {
 public:
  Isometry(Lattice lattice, IntMatrix matrix, unsigned order)
      : lattice_(std::move(lattice)), matrix_(std::move(matrix)), order_(order) {}

  const Lattice& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return matrix_; }
  unsigned order() const { return order_; }

  LatticeVector apply(const LatticeVector& v) const { return vec_mat(v, matrix_); }

 private:
  Lattice lattice_;
  IntMatrix matrix_;
  unsigned order_;
};

inline constexpr unsigned kDefaultOrderCap = 120;

inline Isometry check_isometry(const Lattice& a, const IntMatrix& m,
                               unsigned order_cap = kDefaultOrderCap) {
  if (m.rows() != a.rank() || m.cols() != a.rank())
    throw std::invalid_argument("check_isometry: matrix size != lattice rank");
  if (m * a.gram() * m.transposed() != a.gram())
    throw std::invalid_argument("check_isometry: Gram matrix not preserved");
  IntMatrix p = m;
  unsigned order = 1;
  while (!p.is_identity()) {
    p = p * m;
    ++order;
    if (order > order_cap) throw std::domain_error("check_isometry: order cap exceeded");
  }
  return Isometry(a, m, order);
}

inline Isometry identity_isometry(const Lattice& a) {
  return Isometry(a, IntMatrix::identity(a.rank()), 1);
}

inline Isometry minus_identity_isometry(const Lattice& a) {
  IntMatrix m(a.rank(), a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) m(i, i) = -1;
  return Isometry(a, m, a.rank() == 0 ? 1 : 2);
}

// L^g: fixed sublattice, the saturated integral kernel of (M - I).
inline Sublattice invariant_sublattice(const Isometry& g) {
  IntMatrix d = g.matrix() - IntMatrix::identity(g.lattice().rank());
  return Sublattice(g.lattice(), integral_kernel(d));
}

// L_g = (L^g)^perp.
inline Sublattice coinvariant_sublattice(const Isometry& g) {
  return orthogonal_complement(invariant_sublattice(g));
}

// For an involution: does g restrict to -1 on the coinvariant sublattice?
inline bool involution_action_check(const Isometry& g) {
  if (g.order() != 2) throw std::invalid_argument("involution_action_check: order != 2");
  Sublattice co = coinvariant_sublattice(g);
  if (co.rank() == 0) return true;
  RatMatrix image(co.rank(), co.basis().cols());
  IntMatrix im = co.basis() * g.matrix();
  for (std::size_t i = 0; i < im.rows(); ++i)
    for (std::size_t j = 0; j < im.cols(); ++j) image(i, j) = Rat(im(i, j));
  RatMatrix x = solve_in_row_span(co.basis(), image);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != Rat(i == j ? -1 : 0)) return false;
  return true;
}

// The involution of L = 3U + 2E8 + A2 exchanging the two E8 blocks and fixing
// everything else (block layout of make_OG10_L).
inline Isometry e8_swap_involution() {
  Lattice l = make_OG10_L();
  IntMatrix m = IntMatrix::identity(24);
  for (std::size_t i = 0; i < 8; ++i) {
    m(6 + i, 6 + i) = 0;
    m(14 + i, 14 + i) = 0;
    m(6 + i, 14 + i) = 1;
    m(14 + i, 6 + i) = 1;
  }
  return check_isometry(l, m);
}

// Reflection x -> x - (2(x,v)/v^2) v; requires integrality on the whole basis.
inline Isometry reflection_in_vector(const Lattice& a, const LatticeVector& v) {
  if (v.size() != a.rank()) throw std::invalid_argument("reflection_in_vector: rank mismatch");
  Int vv = norm(a, v);
  if (vv == 0) throw std::domain_error("reflection_in_vector: isotropic vector");
  std::vector<Int> gv = vec_mat(v, a.gram());  // pairings (e_i, v)
  RatMatrix m(a.rank(), a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j)
      m(i, j) = Rat(i == j ? 1 : 0) - make_rat(2 * gv[i], vv) * Rat(v[j]);
  }
  if (!m.is_integral()) throw std::domain_error("reflection_in_vector: non-integral reflection");
  return check_isometry(a, m.to_int());
}

// Transport of a coordinate permutation of the Leech x-description to the
// model basis; valid only when the permutation fixes the Golay code.
inline Isometry leech_permutation_isometry(const std::array<int, 24>& perm) {
  const LeechModel& model = make_leech_model();
  if (!model.code->permutation_preserves(perm))
    throw std::domain_error("leech_permutation_isometry: permutation does not fix the code");
  IntMatrix p(24, 24);
  for (std::size_t i = 0; i < 24; ++i) p(i, static_cast<std::size_t>(perm[i])) = 1;
  RatMatrix rp(model.basis_x * p);
  RatMatrix rinv = rat_inverse(model.basis_x);
  RatMatrix m = rp * rinv;
  if (!m.is_integral())
    throw std::domain_error("leech_permutation_isometry: permutation leaves the lattice");
  return check_isometry(model.lattice, m.to_int());
}

// Sample isometries of the Leech lattice: -id plus the two stored Golay
// automorphism generators (a 23-cycle and a product of 12 transpositions).
inline std::vector<Isometry> leech_sample_isometries() {
  std::vector<Isometry> out;
  out.push_back(minus_identity_isometry(make_leech()));
  out.push_back(leech_permutation_isometry(golay_cycle_permutation()));
  out.push_back(leech_permutation_isometry(golay_involution_permutation()));
  return out;
}

}  // namespace oglat
