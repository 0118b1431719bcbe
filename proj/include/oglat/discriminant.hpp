#pragma once

#include "oglat/int_types.hpp"
#include "oglat/lattice.hpp"
#include "oglat/matrix.hpp"
#include "oglat/normal_form.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oglat {

// Discriminant group L#/L as a finite quadratic form. Elements are residue
// vectors in generator coordinates (one residue mod d_i per invariant factor
// d_i > 1); rational lifts into the lattice basis are kept for the quadratic
// form and for transporting isometry actions.
class DiscriminantGroup {
 public:
  DiscriminantGroup(Lattice source, std::vector<Int> factors, RatMatrix lifts, IntMatrix v)
      : source_(std::move(source)),
        factors_(std::move(factors)),
        lifts_(std::move(lifts)),
        v_(std::move(v)) {}

  const Lattice& source() const { return source_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }
  const RatMatrix& generator_lifts() const { return lifts_; }

  Int order() const {
    Int o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
  }

  std::size_t length() const { return factors_.size(); }

  std::size_t p_length(const Int& p) const {
    std::size_t c = 0;
    for (const auto& d : factors_)
      if (d % p == 0) ++c;
    return c;
  }

  // Generator coordinates of a dual vector y (rational row in the lattice
  // basis with y*G integral): c = y*G*V read off modulo the invariant factors.
  std::vector<Int> coords_of(const std::vector<Rat>& dual_vec) const {
    std::vector<Rat> w = vec_mat(dual_vec, source_.gram());
    for (const auto& q : w)
      if (rat_den(q) != 1) throw std::invalid_argument("coords_of: vector not in the dual");
    std::vector<Rat> c = vec_mat(w, v_);
    const std::size_t n = source_.rank();
    const std::size_t trivial = n - factors_.size();
    std::vector<Int> out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out[i] = mod_floor(rat_num(c[trivial + i]), factors_[i]);
    return out;
  }

  std::vector<Rat> lift(const std::vector<Int>& coords) const {
    if (coords.size() != factors_.size()) throw std::invalid_argument("lift: bad coords");
    std::vector<Rat> y(source_.rank(), Rat(0));
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t j = 0; j < source_.rank(); ++j) y[j] += Rat(coords[i]) * lifts_(i, j);
    return y;
  }

  std::vector<Int> reduce(std::vector<Int> coords) const {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], factors_[i]);
    return coords;
  }

  // All group elements in generator coordinates; guarded by an order cap.
  std::vector<std::vector<Int>> all_elements(const Int& cap = 10000) const {
    if (order() > cap) throw std::domain_error("all_elements: group too large");
    std::vector<std::vector<Int>> out{std::vector<Int>(factors_.size(), Int(0))};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::vector<std::vector<Int>> next;
      for (const auto& base : out)
        for (Int r = 0; r < factors_[i]; ++r) {
          auto e = base;
          e[i] = r;
          next.push_back(std::move(e));
        }
      out = std::move(next);
    }
    return out;
  }

 private:
  Lattice source_;
  std::vector<Int> factors_;
  RatMatrix lifts_;  // rows = generator lifts, rational coords in lattice basis
  IntMatrix v_;      // SNF column transform of the Gram, for coords_of
};

// L#/L via SNF of the Gram: with U*G*V = D, the dual is spanned by the rows of
// G^{-1} = V D^{-1} U, so the classes of (1/d_i) u_i generate with orders d_i.
inline DiscriminantGroup discriminant_group(const Lattice& a) {
  SnfResult s = snf(a.gram());
  const std::size_t n = a.rank();
  std::vector<Int> factors;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < n; ++i)
    if (s.d(i, i) != 1) {
      factors.push_back(s.d(i, i));
      rows.push_back(i);
    }
  RatMatrix lifts(factors.size(), n);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) lifts(i, j) = Rat(s.u(rows[i], j), factors[i]);
  return DiscriminantGroup(a, std::move(factors), std::move(lifts), std::move(s.v));
}

// q(x) in Q/2Z represented in [0,2); requires an even source lattice.
inline Rat disc_quadratic(const DiscriminantGroup& d, const std::vector<Int>& coords) {
  if (!is_even(d.source())) throw std::domain_error("disc_quadratic: source lattice is odd");
  std::vector<Rat> y = d.lift(coords);
  std::vector<Rat> gy = vec_mat(y, d.source().gram());
  Rat q = 0;
  for (std::size_t j = 0; j < y.size(); ++j) q += y[j] * gy[j];
  return mod_rat(q, Rat(2));
}

// b(x,y) in Q/Z represented in [0,1).
inline Rat disc_bilinear(const DiscriminantGroup& d, const std::vector<Int>& xc,
                         const std::vector<Int>& yc) {
  std::vector<Rat> x = d.lift(xc);
  std::vector<Rat> gy = vec_mat(d.lift(yc), d.source().gram());
  Rat b = 0;
  for (std::size_t j = 0; j < x.size(); ++j) b += x[j] * gy[j];
  return mod_rat(b, Rat(1));
}

enum class DiscActionClass { Identity, NegIdentity, Other };

inline std::string to_string(DiscActionClass c) {
  switch (c) {
    case DiscActionClass::Identity: return "Identity";
    case DiscActionClass::NegIdentity: return "NegIdentity";
    default: return "Other";
  }
}

// Induced map on generators: row i holds the generator coordinates of the
// image of generator i (entries reduced mod d_j).
struct DiscAction {
  IntMatrix matrix;
  DiscActionClass classification = DiscActionClass::Identity;
};

inline DiscAction induced_disc_action(const Lattice& a, const IntMatrix& iso) {
  if (iso.rows() != a.rank() || iso.cols() != a.rank())
    throw std::invalid_argument("induced_disc_action: shape mismatch");
  if (iso * a.gram() * iso.transposed() != a.gram())
    throw std::invalid_argument("induced_disc_action: matrix is not an isometry");
  DiscriminantGroup d = discriminant_group(a);
  const auto& factors = d.invariant_factors();
  const std::size_t k = factors.size();
  DiscAction act;
  act.matrix = IntMatrix(k, k);
  bool all_id = true, all_neg = true;
  for (std::size_t i = 0; i < k; ++i) {
    // image of generator i under x -> x * M
    std::vector<Int> unit(k, Int(0));
    unit[i] = 1;
    std::vector<Rat> img = vec_mat(d.lift(unit), iso);
    std::vector<Int> c = d.coords_of(img);
    for (std::size_t j = 0; j < k; ++j) {
      act.matrix(i, j) = c[j];
      Int want_id = mod_floor(Int(i == j ? 1 : 0), factors[j]);
      Int want_neg = mod_floor(Int(i == j ? -1 : 0), factors[j]);
      if (c[j] != want_id) all_id = false;
      if (c[j] != want_neg) all_neg = false;
    }
  }
  // the trivial group and 2-elementary quirks make both flags true; prefer Identity
  act.classification = all_id      ? DiscActionClass::Identity
                       : all_neg   ? DiscActionClass::NegIdentity
                                   : DiscActionClass::Other;
  return act;
}

// Image of an element under the action, in generator coordinates.
inline std::vector<Int> apply_disc_action(const DiscriminantGroup& d, const DiscAction& act,
                                          const std::vector<Int>& coords) {
  std::vector<Int> out(d.invariant_factors().size(), Int(0));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coords[i] * act.matrix(i, j);
  return d.reduce(std::move(out));
}

}  // namespace oglat
