#pragma once

#include "oglat/catalog.hpp"
#include "oglat/discriminant.hpp"
#include "oglat/enumerate.hpp"
#include "oglat/int_types.hpp"
#include "oglat/isometry.hpp"
#include "oglat/lattice.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oglat {

// Wall vectors of the OG10 lattice L:
//   W^pex = {v^2 = -2} u {v^2 = -6, (v,L) = 3}
//   W     = W^pex u {v^2 = -4} u {v^2 = -24, (v,L) = 3}
enum class WallClass { PexRoot, PexDiv3, Wall4, Wall24Div3, NotWall };

inline std::string to_string(WallClass c) {
  switch (c) {
    case WallClass::PexRoot: return "PexRoot(-2)";
    case WallClass::PexDiv3: return "PexDiv3(-6,div 3)";
    case WallClass::Wall4: return "Wall4(-4)";
    case WallClass::Wall24Div3: return "Wall24Div3(-24,div 3)";
    default: return "NotWall";
  }
}

inline bool in_pex_set(WallClass c) {
  return c == WallClass::PexRoot || c == WallClass::PexDiv3;
}
inline bool in_wall_set(WallClass c) { return c != WallClass::NotWall; }

inline WallClass classify_wall(const Lattice& l, const LatticeVector& v) {
  if (is_zero_vec(v)) throw std::invalid_argument("classify_wall: zero vector");
  Int n = norm(l, v);
  if (n == -2) return WallClass::PexRoot;
  if (n == -4) return WallClass::Wall4;
  if (n == -6 && divisibility(l, v) == 3) return WallClass::PexDiv3;
  if (n == -24 && divisibility(l, v) == 3) return WallClass::Wall24Div3;
  return WallClass::NotWall;
}

// Scan of all coinvariant vectors with |norm| <= 24, classified in ambient
// coordinates (the wall sets are defined through ambient pairings).
struct WallScan {
  ShortVectorReport report;                     // coordinates in the coinvariant basis
  std::vector<LatticeVector> ambient_vectors;   // same order as report.vectors
  std::vector<WallClass> classes;
  bool pex_empty = true;
  bool wall_empty = true;
  std::optional<std::size_t> pex_witness;
  std::optional<std::size_t> wall_witness;
};

inline WallScan coinvariant_wall_scan(const Isometry& g, unsigned threads = 1) {
  WallScan scan;
  Sublattice co = coinvariant_sublattice(g);
  if (co.rank() == 0) {
    scan.report.bound = 24;
    return scan;
  }
  Lattice co_lat = sublattice_lattice(co);
  if (definite_sign(co_lat.gram()) != -1)
    throw std::domain_error("coinvariant_wall_scan: coinvariant lattice not negative definite");
  scan.report = short_vectors(co_lat, 24, threads);
  const Lattice& amb = g.lattice();
  for (std::size_t i = 0; i < scan.report.vectors.size(); ++i) {
    LatticeVector av = vec_mat(scan.report.vectors[i], co.basis());
    WallClass c = classify_wall(amb, av);
    if (in_pex_set(c) && !scan.pex_witness) {
      scan.pex_empty = false;
      scan.pex_witness = i;
    }
    if (in_wall_set(c) && !scan.wall_witness) {
      scan.wall_empty = false;
      scan.wall_witness = i;
    }
    scan.ambient_vectors.push_back(std::move(av));
    scan.classes.push_back(c);
  }
  return scan;
}

// Lattice-side conditions of the two Torelli-type statements: the coinvariant
// lattice must be negative definite and miss the respective wall set.
struct ConditionVerdict {
  bool neg_definite = false;
  bool intersection_empty = false;
  std::optional<LatticeVector> witness;  // ambient coordinates of a wall vector
  bool pass() const { return neg_definite && intersection_empty; }
};

inline ConditionVerdict symplectic_automorphism_condition(const Isometry& g,
                                                          unsigned threads = 1) {
  ConditionVerdict v;
  Sublattice co = coinvariant_sublattice(g);
  if (co.rank() == 0) {
    v.neg_definite = true;
    v.intersection_empty = true;
    return v;
  }
  try {
    v.neg_definite = definite_sign(sublattice_lattice(co).gram()) == -1;
  } catch (const std::invalid_argument&) {
    v.neg_definite = false;
  }
  if (!v.neg_definite) return v;
  WallScan scan = coinvariant_wall_scan(g, threads);
  v.intersection_empty = scan.wall_empty;
  if (scan.wall_witness) v.witness = scan.ambient_vectors[*scan.wall_witness];
  return v;
}

inline ConditionVerdict symplectic_birational_condition(const Isometry& g,
                                                        unsigned threads = 1) {
  ConditionVerdict v;
  Sublattice co = coinvariant_sublattice(g);
  if (co.rank() == 0) {
    v.neg_definite = true;
    v.intersection_empty = true;
    return v;
  }
  try {
    v.neg_definite = definite_sign(sublattice_lattice(co).gram()) == -1;
  } catch (const std::invalid_argument&) {
    v.neg_definite = false;
  }
  if (!v.neg_definite) return v;
  WallScan scan = coinvariant_wall_scan(g, threads);
  v.intersection_empty = scan.pex_empty;
  if (scan.pex_witness) v.witness = scan.ambient_vectors[*scan.pex_witness];
  return v;
}

// The inequality instance of Nikulin's primitive-embedding criterion used in
// the proof: the signature fits componentwise and rank + length of the
// discriminant group is strictly below the target rank.
inline bool nikulin_embedding_sufficient(const Lattice& a, std::size_t pos, std::size_t neg) {
  if (a.rank() == 0) return true;
  Signature s = signature(a.gram());
  if (s.pos > pos || s.neg > neg) return false;
  std::size_t len = discriminant_group(a).length();
  return a.rank() + len < pos + neg;
}

// Gluing arithmetic |H|^2 |det L| = |det L^g| |det L_g| for the overlattice
// L of L^g + L_g.
struct GluingReport {
  Int det_l;       // |det L|
  Int det_inv;     // |det L^g|
  Int det_coinv;   // |det L_g|
  Int h_order;     // |H|
  bool h_power_of_two = false;
  Int coinv_index; // [L_g# : H'] = |det L_g| / |H|
  bool index_le_3 = false;
  bool h_divides_both = false;
};

inline GluingReport gluing_determinant_check(const Isometry& g) {
  GluingReport r;
  r.det_l = g.lattice().abs_det();
  Sublattice inv = invariant_sublattice(g);
  Sublattice co = orthogonal_complement(inv);
  r.det_inv = inv.rank() == 0 ? Int(1) : sublattice_lattice(inv).abs_det();
  r.det_coinv = co.rank() == 0 ? Int(1) : sublattice_lattice(co).abs_det();
  Int prod = r.det_inv * r.det_coinv;
  if (prod % r.det_l != 0)
    throw std::logic_error("gluing_determinant_check: |det L| does not divide the product");
  r.h_order = exact_sqrt(prod / r.det_l);  // throws if not a perfect square
  r.h_power_of_two = is_power_of_two(r.h_order);
  r.h_divides_both = (r.det_inv % r.h_order == 0) && (r.det_coinv % r.h_order == 0);
  if (r.det_coinv % r.h_order != 0)
    throw std::logic_error("gluing_determinant_check: |H| does not divide |L_g#|");
  r.coinv_index = r.det_coinv / r.h_order;
  r.index_le_3 = r.coinv_index <= 3;
  return r;
}

// rho^2 = mu/4 of the positive definite model of a definite lattice.
inline Rat packing_radius_sq(const Lattice& a) { return Rat(minimal_norm(a), 4); }

// delta^2 = rho^{2n} / |det|; comparisons against the Rogers bounds are done
// on squares to stay rational.
inline Rat center_density_sq(const Lattice& a) {
  Rat rho2 = packing_radius_sq(a);
  return pow_rat(rho2, static_cast<unsigned>(a.rank())) / Rat(a.abs_det());
}

// Rogers' upper bounds b_n on center density (as computed by Leech), read as
// exact rationals over 10^5.
inline Rat rogers_bound(unsigned n) {
  static constexpr std::array<long, 24> kTimes1e5 = {
      50000, 28868, 18470, 13127, 9987,  8112,  6981,  6326,
      6007,  5953,  6136,  6559,  7253,  8278,  9735,  11774,
      14624, 18629, 24308, 32454, 44289, 61722, 87767, 127241};
  if (n < 1 || n > 24) throw std::out_of_range("rogers_bound: n out of 1..24");
  return Rat(Int(kTimes1e5[n - 1]), Int(100000));
}

// One row of the section-3.2 contradiction: upper bound 3*2^min(n,24-n) from
// the gluing argument against the packing lower bound 3^n / (2^n b_n^2).
struct BoundsRow {
  unsigned n = 0;
  Rat b_n;
  Int upper;
  Rat lower;
  bool strict = false;  // upper < lower
  bool equal = false;   // upper == lower
};

struct ContradictionTable {
  std::vector<BoundsRow> rows;           // Table-1 values as printed
  std::vector<BoundsRow> rows_inflated;  // b_n multiplied by the safety factor
  Rat safety;
  bool printed_ok = false;   // equality at n=1, strict for n in 2..21
  bool inflated_ok = false;  // strict for n in 2..21 under inflation
};

inline BoundsRow bounds_row(unsigned n, const Rat& b) {
  BoundsRow r;
  r.n = n;
  r.b_n = b;
  unsigned m = n < 24 - n ? n : 24 - n;
  r.upper = 3 * pow_int(2, m);
  r.lower = Rat(pow_int(3, n), pow_int(2, n)) / (b * b);
  r.strict = Rat(r.upper) < r.lower;
  r.equal = Rat(r.upper) == r.lower;
  return r;
}

inline ContradictionTable contradiction_table(const Rat& safety = Rat(1001, 1000)) {
  if (safety < 1) throw std::invalid_argument("contradiction_table: safety factor < 1");
  ContradictionTable t;
  t.safety = safety;
  t.printed_ok = true;
  t.inflated_ok = true;
  for (unsigned n = 1; n <= 21; ++n) {
    BoundsRow printed = bounds_row(n, rogers_bound(n));
    BoundsRow inflated = bounds_row(n, rogers_bound(n) * safety);
    if (n == 1) {
      if (!printed.equal) t.printed_ok = false;
    } else {
      if (!printed.strict) t.printed_ok = false;
      if (!inflated.strict) t.inflated_ok = false;
    }
    t.rows.push_back(std::move(printed));
    t.rows_inflated.push_back(std::move(inflated));
  }
  return t;
}

// Single named sub-check with an exact witness string.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;
};

namespace detail {

inline std::string vec_to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

}  // namespace detail

// The section-3.2 rank-one endgame: the reflection in the A2 vector (1,-1)
// of L has order 2, coinvariant [-6], divisibility 3, wall class PexDiv3,
// and the half-sum identity holds on every basis vector.
inline std::vector<CheckItem> rank_one_divisibility_check() {
  std::vector<CheckItem> out;
  Lattice l = make_OG10_L();
  LatticeVector v(24, Int(0));
  v[22] = 1;
  v[23] = -1;
  Isometry g = reflection_in_vector(l, v);

  out.push_back({"rank-one.order", g.order() == 2, "order=" + std::to_string(g.order())});

  Sublattice co = coinvariant_sublattice(g);
  Lattice co_lat = sublattice_lattice(co);
  bool gram_ok = co.rank() == 1 && co_lat.gram()(0, 0) == -6;
  out.push_back({"rank-one.coinvariant-gram", gram_ok,
                 "rank=" + std::to_string(co.rank()) + " gram=" + co_lat.gram().to_string()});

  Int div = divisibility(l, v);
  out.push_back({"rank-one.divisibility", div == 3, "(v,L)=" + div.str()});

  WallClass wc = classify_wall(l, v);
  out.push_back({"rank-one.wall-class", wc == WallClass::PexDiv3, to_string(wc)});

  bool half_sum_ok = true, six_ok = true, fixed_part_ok = true;
  for (std::size_t i = 0; i < 24; ++i) {
    LatticeVector w(24, Int(0));
    w[i] = 1;
    LatticeVector gw = g.apply(w);
    LatticeVector plus(24), minus(24);
    for (std::size_t j = 0; j < 24; ++j) {
      plus[j] = w[j] + gw[j];
      minus[j] = w[j] - gw[j];
    }
    Int vw = pairing(l, v, w);
    Int vp = pairing(l, v, plus);
    Int vm = pairing(l, v, minus);
    if (Rat(vw) != Rat(vp, 2) + Rat(vm, 2)) half_sum_ok = false;
    if (vm % 6 != 0) six_ok = false;
    if (vp != 0) fixed_part_ok = false;
  }
  out.push_back({"rank-one.half-sum-identity", half_sum_ok && fixed_part_ok,
                 std::string("(v,w) = (v,w-g(w))/2 and (v,w+g(w)) = 0 on all 24 basis vectors: ") +
                     (half_sum_ok && fixed_part_ok ? "holds" : "violated")});
  out.push_back({"rank-one.coinvariant-pairings-in-6Z", six_ok,
                 six_ok ? "(v,w-g(w)) in 6Z for all basis w" : "violated"});

  ConditionVerdict aut = symplectic_automorphism_condition(g);
  out.push_back({"rank-one.automorphism-condition-fails", !aut.pass(),
                 aut.witness ? "lattice-side condition violated by wall vector " +
                                   detail::vec_to_string(*aut.witness)
                             : "no witness"});

  DiscAction act = induced_disc_action(l, g.matrix());
  out.push_back({"rank-one.disc-action", act.classification == DiscActionClass::NegIdentity,
                 to_string(act.classification)});
  return out;
}

// The section-3.1 chain for an isometry acting trivially on the discriminant
// group: length chain, embedding inequality into Lambda(1,25), root-freeness,
// and (optionally) the minimal-norm-4 consequence that violates the wall
// condition.
inline std::vector<CheckItem> trivial_disc_case_pipeline(const Isometry& g,
                                                         bool expect_min4 = true,
                                                         unsigned threads = 1) {
  std::vector<CheckItem> out;
  const Lattice& l = g.lattice();
  DiscAction act = induced_disc_action(l, g.matrix());
  // O(L#) = {id, -id} for the OG10 lattice; anything else means the input
  // does not belong to this pipeline
  if (act.classification == DiscActionClass::Other)
    throw std::domain_error("trivial_disc_case_pipeline: discriminant action is neither id nor -id");
  out.push_back({"trivial-disc.action-is-identity",
                 act.classification == DiscActionClass::Identity, to_string(act.classification)});

  Sublattice inv = invariant_sublattice(g);
  Sublattice co = orthogonal_complement(inv);
  if (co.rank() == 0) {
    out.push_back({"trivial-disc.vacuous", true, "coinvariant rank 0"});
    return out;
  }
  Lattice co_lat = sublattice_lattice(co);
  Lattice inv_lat = sublattice_lattice(inv);
  out.push_back({"trivial-disc.coinvariant-negative-definite",
                 definite_sign(co_lat.gram()) == -1, "rank " + std::to_string(co.rank())});

  std::size_t l_co = discriminant_group(co_lat).length();
  std::size_t l_inv = discriminant_group(inv_lat).length();
  std::size_t l_amb = discriminant_group(l).length();
  {
    std::ostringstream w;
    w << "l(L_g#)=" << l_co << " <= l((L^g)#)+l(L#)=" << l_inv << "+" << l_amb;
    out.push_back({"trivial-disc.length-chain", l_co <= l_inv + l_amb, w.str()});
  }
  {
    std::ostringstream w;
    w << "l((L^g)#)=" << l_inv << " <= rank(L^g)=" << inv.rank();
    out.push_back({"trivial-disc.length-vs-rank", l_inv <= inv.rank(), w.str()});
  }
  {
    std::ostringstream w;
    w << "rank(L^g)+l(L#)=" << inv.rank() + l_amb << " < 26-rank(L_g)=" << 26 - co.rank();
    out.push_back(
        {"trivial-disc.strict-chain", inv.rank() + l_amb < 26 - co.rank(), w.str()});
  }
  out.push_back({"trivial-disc.embedding-sufficient",
                 nikulin_embedding_sufficient(co_lat, 1, 25),
                 "rank+l = " + std::to_string(co.rank() + l_co) + " < 26"});
  std::size_t roots = count_roots(co_lat);
  out.push_back({"trivial-disc.root-free", roots == 0, std::to_string(roots) + " roots"});
  if (expect_min4) {
    Int mu = minimal_norm(co_lat);
    out.push_back({"trivial-disc.minimal-norm-4", mu == 4, "mu=" + mu.str()});
    if (mu == 4) {
      WallScan scan = coinvariant_wall_scan(g, threads);
      bool has_wall4 = false;
      for (WallClass c : scan.classes)
        if (c == WallClass::Wall4) has_wall4 = true;
      out.push_back({"trivial-disc.norm-minus-4-wall-vector", has_wall4,
                     has_wall4 ? "W_OG10 intersection nonempty" : "missing"});
    }
  }
  return out;
}

}  // namespace oglat
