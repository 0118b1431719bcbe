#pragma once

#include "oglat/enumerate.hpp"
#include "oglat/golay.hpp"
#include "oglat/int_types.hpp"
#include "oglat/lattice.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oglat {

// Gram conventions follow the negative definite choice for E8, A2 and Leech;
// U is the hyperbolic plane.

inline Lattice make_U() { return Lattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

inline Lattice make_A2() { return Lattice(IntMatrix{{-2, 1}, {1, -2}}, "A2"); }

inline Lattice make_E8() {
  // Bourbaki E8 Cartan matrix, negated (signature (0,8), det 1).
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  const std::array<std::pair<int, int>, 7> edges = {
      {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}};
  for (auto [a, b] : edges) {
    g(a, b) = 1;
    g(b, a) = 1;
  }
  return Lattice(std::move(g), "E8");
}

// L = 3U + 2E8 + A2, rank 24, signature (3,21), |det| 3. Block layout:
// coordinates 0..5 the three U, 6..13 and 14..21 the two E8, 22..23 the A2.
inline Lattice make_OG10_L() {
  Lattice u = make_U(), e8 = make_E8();
  Lattice l = direct_sum(direct_sum(direct_sum(u, u), u),
                         direct_sum(direct_sum(e8, e8), make_A2()));
  return l.with_label("L(OG10)");
}

// Leech lattice model built from the Golay code: integer 24-tuples x with all
// coordinates congruent mod 2, {i : x_i = m+2 mod 4} a codeword, and
// sum(x) = 4m mod 8; the form is (x.y)/8, negated.
struct LeechModel {
  Lattice lattice;       // negative definite Gram, |det| 1, no roots
  IntMatrix basis_x;     // 24 basis rows in the x-coordinate description
  const GolayCode* code; // Golay code the model is built from
};

inline bool leech_x_member(const GolayCode& code, const std::vector<Int>& x) {
  if (x.size() != 24) return false;
  Int m = mod_floor(x[0], 2);
  Int sum = 0;
  std::uint32_t pattern = 0;
  for (std::size_t i = 0; i < 24; ++i) {
    if (mod_floor(x[i], 2) != m) return false;
    if (mod_floor(x[i], 4) == mod_floor(m + 2, 4)) pattern |= 1u << i;
    sum += x[i];
  }
  if (!code.contains(pattern)) return false;
  return mod_floor(sum - 4 * m, 8) == 0;
}

namespace detail {

inline LeechModel build_leech_model() {
  const GolayCode& code = make_golay();

  std::vector<std::vector<Int>> gens;
  for (std::uint32_t g : code.generator()) {
    std::vector<Int> row(24, Int(0));
    for (int j = 0; j < 24; ++j)
      if (g & (1u << j)) row[j] = 2;
    gens.push_back(std::move(row));
  }
  for (int j = 1; j < 24; ++j) {
    std::vector<Int> row(24, Int(0));
    row[0] = 4;
    row[j] = 4;
    gens.push_back(std::move(row));
  }
  {
    std::vector<Int> row(24, Int(0));
    row[0] = 8;
    gens.push_back(std::move(row));
  }
  {
    std::vector<Int> row(24, Int(1));
    row[0] = -3;
    gens.push_back(std::move(row));
  }

  IntMatrix gen_mat(gens.size(), 24);
  for (std::size_t i = 0; i < gens.size(); ++i) gen_mat.set_row(i, gens[i]);
  for (const auto& g : gens)
    if (!leech_x_member(code, g))
      throw std::logic_error("Leech model: generator fails membership");

  IntMatrix h = hnf(gen_mat).h;
  IntMatrix basis(24, 24);
  for (std::size_t i = 0; i < 24; ++i) basis.set_row(i, h.row(i));
  for (std::size_t i = 0; i < 24; ++i)
    if (basis(i, i) == 0) throw std::logic_error("Leech model: basis not full rank");
  // index in Z^24 must be 8^12
  if (abs_int(det_exact(basis)) != pow_int(2, 36))
    throw std::logic_error("Leech model: wrong covolume");
  for (std::size_t i = 0; i < 24; ++i)
    if (!leech_x_member(code, basis.row(i)))
      throw std::logic_error("Leech model: basis row fails membership");

  IntMatrix gx = basis * basis.transposed();
  IntMatrix gram(24, 24);
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j) {
      if (gx(i, j) % 8 != 0) throw std::logic_error("Leech model: Gram not divisible by 8");
      gram(i, j) = -gx(i, j) / 8;
    }

  Lattice lat(std::move(gram), "Leech");
  if (!is_even(lat) || lat.abs_det() != 1)
    throw std::logic_error("Leech model: not even unimodular");
  // enumeration self-checks: no roots, minimal |norm| exactly 4
  if (count_roots(lat) != 0) throw std::logic_error("Leech model: contains roots");
  if (minimal_norm(lat) != 4) throw std::logic_error("Leech model: minimal norm != 4");
  return LeechModel{std::move(lat), std::move(basis), &code};
}

}  // namespace detail

inline const LeechModel& make_leech_model() {
  static const LeechModel model = detail::build_leech_model();
  return model;
}

inline const Lattice& make_leech() { return make_leech_model().lattice; }

inline Lattice make_lambda_1_25() {
  return direct_sum(make_leech(), make_U()).with_label("Lambda(1,25)");
}

}  // namespace oglat
