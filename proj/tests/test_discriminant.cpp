#include "oglat/catalog.hpp"
#include "oglat/discriminant.hpp"
#include "oglat/isometry.hpp"

#include "oracle_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace oglat;

TEST_CASE("discriminant groups of the named lattices") {
  DiscriminantGroup a2 = discriminant_group(make_A2());
  REQUIRE(a2.invariant_factors().size() == 1);
  CHECK(a2.invariant_factors()[0] == 3);
  CHECK(a2.order() == 3);

  DiscriminantGroup e8 = discriminant_group(make_E8());
  CHECK(e8.length() == 0);
  CHECK(e8.order() == 1);

  DiscriminantGroup e8_2 = discriminant_group(rescale(make_E8(), 2));
  CHECK(e8_2.length() == 8);
  for (const auto& d : e8_2.invariant_factors()) CHECK(d == 2);
  CHECK(e8_2.order() == 256);

  DiscriminantGroup l = discriminant_group(make_OG10_L());
  CHECK(l.order() == 3);
  CHECK(l.length() == 1);
}

TEST_CASE("lengths and p-lengths") {
  DiscriminantGroup e8_2 = discriminant_group(rescale(make_E8(), 2));
  CHECK(e8_2.length() == 8);
  CHECK(e8_2.p_length(2) == 8);
  CHECK(e8_2.p_length(3) == 0);

  DiscriminantGroup a2 = discriminant_group(make_A2());
  CHECK(a2.length() == 1);

  // Z/6 from [-6]: one invariant factor divisible by both 2 and 3
  DiscriminantGroup z6 = discriminant_group(Lattice{IntMatrix{{-6}}});
  REQUIRE(z6.invariant_factors().size() == 1);
  CHECK(z6.invariant_factors()[0] == 6);
  CHECK(z6.p_length(2) == 1);
  CHECK(z6.p_length(3) == 1);
}

TEST_CASE("quadratic form values") {
  DiscriminantGroup a2 = discriminant_group(make_A2());
  // q(generator) = -2/3 mod 2Z, represented as 4/3 in [0,2)
  Rat q = disc_quadratic(a2, {Int(1)});
  CHECK(q == Rat(4, 3));
  CHECK(disc_quadratic(a2, {Int(0)}) == 0);

  // E8(2): the half-class of a norm -4 vector has q = -(4)/4 = -1 mod 2Z -> 1
  Lattice e8_2 = rescale(make_E8(), 2);
  DiscriminantGroup d = discriminant_group(e8_2);
  std::vector<Rat> half(8, Rat(0));
  half[0] = Rat(1, 2);  // (1/2) e_1, e_1^2 = -4 in E8(2)
  std::vector<Int> coords = d.coords_of(half);
  CHECK(disc_quadratic(d, coords) == 1);

  CHECK_THROWS_AS(disc_quadratic(discriminant_group(Lattice{IntMatrix{{5}}}), {Int(1)}),
                  std::domain_error);
}

TEST_CASE("bilinear form and lift independence") {
  DiscriminantGroup a2 = discriminant_group(make_A2());
  Rat b = disc_bilinear(a2, {Int(1)}, {Int(1)});
  // b(g,g) = q-values' polarization; for Z/3 with q = -2/3 it is -2/3 mod Z -> 1/3
  CHECK(b == Rat(1, 3));

  // shifting a lift by lattice vectors leaves q unchanged
  auto gen = oracle::rng(0x11F7);
  Lattice e8_2 = rescale(make_E8(), 2);
  DiscriminantGroup d = discriminant_group(e8_2);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<Int> coords(d.length());
    for (auto& c : coords) c = Int(static_cast<int>(gen() % 2));
    std::vector<Rat> lift = d.lift(coords);
    IntMatrix shift = oracle::random_matrix(gen, 1, 8, -3, 3);
    std::vector<Rat> shifted = lift;
    for (std::size_t j = 0; j < 8; ++j) shifted[j] += Rat(shift(0, j));
    CHECK(d.coords_of(shifted) == d.reduce(coords));
    std::vector<Rat> y = shifted;
    // recompute q directly from the shifted lift
    std::vector<Rat> gy = vec_mat(y, e8_2.gram());
    Rat q = 0;
    for (std::size_t j = 0; j < 8; ++j) q += y[j] * gy[j];
    CHECK(mod_rat(q, Rat(2)) == disc_quadratic(d, coords));
  }
}

TEST_CASE("generator lifts have the right order") {
  // d_i * lift_i must land back in the lattice (integral coordinates)
  for (const Lattice& a : {make_A2(), rescale(make_E8(), 2), make_OG10_L()}) {
    DiscriminantGroup d = discriminant_group(a);
    for (std::size_t i = 0; i < d.length(); ++i) {
      std::vector<Int> unit(d.length(), Int(0));
      unit[i] = 1;
      std::vector<Rat> lift = d.lift(unit);
      for (const auto& c : lift) {
        Rat scaled = c * Rat(d.invariant_factors()[i]);
        CHECK(rat_den(scaled) == 1);
      }
      // and the lift itself is a genuine dual vector
      CHECK(d.coords_of(lift) == unit);
    }
  }
}

TEST_CASE("order equals |det| on random even lattices") {
  auto gen = oracle::rng(0x0DD5);
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t n = 1 + iter % 5;
    Lattice a{oracle::random_even_gram(gen, n)};
    CHECK(discriminant_group(a).order() == a.abs_det());
  }
}

TEST_CASE("induced actions") {
  Lattice a2 = make_A2();
  DiscAction id = induced_disc_action(a2, IntMatrix::identity(2));
  CHECK(id.classification == DiscActionClass::Identity);

  DiscAction neg = induced_disc_action(a2, minus_identity_isometry(a2).matrix());
  CHECK(neg.classification == DiscActionClass::NegIdentity);

  Lattice l = make_OG10_L();
  DiscAction swap_action = induced_disc_action(l, e8_swap_involution().matrix());
  CHECK(swap_action.classification == DiscActionClass::Identity);

  LatticeVector v(24, Int(0));
  v[22] = 1;
  v[23] = -1;
  DiscAction refl_action = induced_disc_action(l, reflection_in_vector(l, v).matrix());
  CHECK(refl_action.classification == DiscActionClass::NegIdentity);

  CHECK_THROWS_AS(induced_disc_action(a2, IntMatrix{{1, 1}, {0, 1}}), std::invalid_argument);

  // U(2): discriminant (Z/2)^2, and swapping the two basis vectors permutes
  // the generators, which is neither id nor -id
  Lattice u2 = rescale(make_U(), 2);
  DiscAction other = induced_disc_action(u2, IntMatrix{{0, 1}, {1, 0}});
  CHECK(other.classification == DiscActionClass::Other);
}

TEST_CASE("actions preserve the quadratic form") {
  Lattice l = make_OG10_L();
  DiscriminantGroup d = discriminant_group(l);
  for (const IntMatrix& m : {e8_swap_involution().matrix(),
                             minus_identity_isometry(l).matrix(),
                             IntMatrix::identity(24)}) {
    DiscAction act = induced_disc_action(l, m);
    for (const auto& x : d.all_elements())
      CHECK(disc_quadratic(d, apply_disc_action(d, act, x)) == disc_quadratic(d, x));
  }
  // an order-3 isometry of A2 also preserves q (classification Other is fine)
  Lattice a2 = make_A2();
  IntMatrix rot{{0, 1}, {-1, -1}};
  DiscriminantGroup da = discriminant_group(a2);
  DiscAction act = induced_disc_action(a2, rot);
  for (const auto& x : da.all_elements())
    CHECK(disc_quadratic(da, apply_disc_action(da, act, x)) == disc_quadratic(da, x));
}

TEST_CASE("length chain on the paper involutions") {
  Lattice l = make_OG10_L();
  for (const Isometry& g : {e8_swap_involution(),
                            reflection_in_vector(l, [] {
                              LatticeVector v(24, Int(0));
                              v[22] = 1;
                              v[23] = -1;
                              return v;
                            }())}) {
    Sublattice inv = invariant_sublattice(g);
    Sublattice co = orthogonal_complement(inv);
    std::size_t lc = discriminant_group(sublattice_lattice(co)).length();
    std::size_t li = discriminant_group(sublattice_lattice(inv)).length();
    CHECK(lc <= li + 1);
  }
}
