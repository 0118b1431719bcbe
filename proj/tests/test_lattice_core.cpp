#include "oglat/catalog.hpp"
#include "oglat/lattice.hpp"

#include "oracle_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace oglat;

TEST_CASE("lattice construction validates its invariants") {
  CHECK_THROWS_AS((Lattice{IntMatrix{{0, 1}, {2, 0}}}), std::invalid_argument);  // not symmetric
  CHECK_THROWS_AS((Lattice{IntMatrix{{1, 1}, {1, 1}}}), std::invalid_argument);  // degenerate
  CHECK_THROWS_AS((Sublattice(make_U(), IntMatrix{{1, 1}, {2, 2}})), std::invalid_argument);
}

TEST_CASE("direct sums") {
  Lattice u = make_U();
  Lattice uu = direct_sum(u, u);
  CHECK(uu.rank() == 4);
  CHECK(uu.abs_det() == 1);

  Lattice l = make_OG10_L();
  CHECK(l.rank() == 24);
  CHECK(l.abs_det() == 3);
  Signature s = signature(l.gram());
  CHECK(s.pos == 3);
  CHECK(s.neg == 21);

  Lattice empty{IntMatrix(0, 0)};
  Lattice same = direct_sum(u, empty);
  CHECK(same.gram() == u.gram());
}

TEST_CASE("direct sum multiplies determinants and adds signatures") {
  auto gen = oracle::rng(0xD1CE);
  for (int iter = 0; iter < 20; ++iter) {
    Lattice a{oracle::random_even_gram(gen, 2 + iter % 3)};
    Lattice b{oracle::random_even_gram(gen, 1 + iter % 3)};
    Lattice s = direct_sum(a, b);
    CHECK(s.abs_det() == a.abs_det() * b.abs_det());
    Signature sa = signature(a.gram()), sb = signature(b.gram()), ss = signature(s.gram());
    CHECK(ss.pos == sa.pos + sb.pos);
    CHECK(ss.neg == sa.neg + sb.neg);
  }
}

TEST_CASE("rescale") {
  Lattice e8_2 = rescale(make_E8(), 2);
  CHECK(e8_2.abs_det() == 256);
  CHECK(rescale(make_A2(), 1).gram() == make_A2().gram());
  Signature s = signature(rescale(make_U(), -1).gram());
  CHECK(s.pos == 1);
  CHECK(s.neg == 1);
  CHECK_THROWS_AS(rescale(make_U(), 0), std::invalid_argument);
}

TEST_CASE("evenness") {
  CHECK(is_even(make_A2()));
  CHECK_FALSE(is_even(Lattice{IntMatrix{{1}}}));
  CHECK(is_even(make_E8()));
}

TEST_CASE("norms and pairings") {
  Lattice a2 = make_A2();
  CHECK(norm(a2, {Int(1), Int(-1)}) == -6);
  CHECK(norm(a2, {Int(0), Int(0)}) == 0);
  Lattice u = make_U();
  CHECK(pairing(u, {Int(1), Int(0)}, {Int(0), Int(1)}) == 1);
  CHECK_THROWS_AS(norm(u, LatticeVector{Int(1)}), std::invalid_argument);
}

TEST_CASE("divisibility") {
  Lattice a2 = make_A2();
  CHECK(divisibility(a2, {Int(1), Int(-1)}) == 3);
  CHECK_THROWS_AS(divisibility(a2, LatticeVector{Int(0), Int(0)}), std::invalid_argument);

  // A2 vector (1,-1) extended by zeros inside L: pairings with the other
  // blocks vanish, so (v, L) = 3
  Lattice l = make_OG10_L();
  LatticeVector v(24, Int(0));
  v[22] = 1;
  v[23] = -1;
  CHECK(norm(l, v) == -6);
  CHECK(divisibility(l, v) == 3);
}

TEST_CASE("primitive vectors of unimodular lattices have divisibility 1") {
  Lattice u = make_U();
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      if (a == 0 && b == 0) continue;
      if (gcd_int(Int(a), Int(b)) != 1) continue;
      CHECK(divisibility(u, {Int(a), Int(b)}) == 1);
    }
  Lattice e8 = make_E8();
  auto gen = oracle::rng(0x5EED);
  for (int iter = 0; iter < 50; ++iter) {
    IntMatrix row = oracle::random_matrix(gen, 1, 8, -3, 3);
    LatticeVector v = row.row(0);
    if (is_zero_vec(v)) continue;
    Int content = 0;
    for (auto& c : v) content = gcd_int(content, c);
    for (auto& c : v) c /= content;
    CHECK(divisibility(e8, v) == 1);
  }
}

TEST_CASE("dual grams") {
  CHECK(dual_gram(make_U()) == RatMatrix(IntMatrix{{0, 1}, {1, 0}}));
  RatMatrix a2d = dual_gram(make_A2());
  CHECK(a2d(0, 0) == Rat(-2, 3));
  CHECK(a2d(1, 0) == Rat(-1, 3));
  CHECK(dual_gram(make_E8()).is_integral());
}

TEST_CASE("orthogonal complements") {
  Lattice uu = direct_sum(make_U(), make_U());
  IntMatrix first(2, 4);
  first(0, 0) = 1;
  first(1, 1) = 1;
  Sublattice s(uu, first);
  Sublattice c = orthogonal_complement(s);
  REQUIRE(c.rank() == 2);
  IntMatrix expected(2, 4);
  expected(0, 2) = 1;
  expected(1, 3) = 1;
  CHECK(same_row_span(c.basis(), expected));

  // diagonal E8 inside E8 + E8: complement is the antidiagonal, Gram 2*E8
  Lattice ee = direct_sum(make_E8(), make_E8());
  IntMatrix diag(8, 16);
  for (std::size_t i = 0; i < 8; ++i) {
    diag(i, i) = 1;
    diag(i, 8 + i) = 1;
  }
  Sublattice d(ee, diag);
  Sublattice anti = orthogonal_complement(d);
  REQUIRE(anti.rank() == 8);
  Lattice anti_lat = sublattice_lattice(anti);
  Lattice e8_2 = rescale(make_E8(), 2);
  CHECK(anti_lat.abs_det() == e8_2.abs_det());
  CHECK(is_even(anti_lat));

  // complement of everything is rank 0
  Sublattice full(uu, IntMatrix::identity(4));
  CHECK(orthogonal_complement(full).rank() == 0);
}

TEST_CASE("saturation") {
  Lattice u = make_U();
  IntMatrix twice(1, 2);
  twice(0, 0) = 2;
  Sublattice s(u, twice);
  Sublattice sat = saturate(s);
  IntMatrix e1(1, 2);
  e1(0, 0) = 1;
  CHECK(same_row_span(sat.basis(), e1));

  // index-12 example from HNF: span{(2,2),(0,6)} saturates to span{(1,1),(0,1)}
  IntMatrix b{{2, 2}, {0, 6}};
  Sublattice t(u, b);
  Sublattice tsat = saturate(t);
  CHECK(same_row_span(tsat.basis(), IntMatrix{{1, 1}, {0, 1}}));
  CHECK(is_primitive(tsat));

  // idempotence on an already primitive sublattice
  Sublattice again = saturate(tsat);
  CHECK(same_row_span(again.basis(), tsat.basis()));
}

TEST_CASE("restricted forms") {
  Lattice ee = direct_sum(make_E8(), make_E8());
  IntMatrix diag(8, 16);
  for (std::size_t i = 0; i < 8; ++i) {
    diag(i, i) = 1;
    diag(i, 8 + i) = 1;
  }
  Lattice restr = sublattice_lattice(Sublattice(ee, diag));
  IntMatrix doubled = rescale(make_E8(), 2).gram();
  CHECK(restr.gram() == doubled);

  Lattice l = make_OG10_L();
  IntMatrix vrow(1, 24);
  vrow(0, 22) = 1;
  vrow(0, 23) = -1;
  Lattice rank1 = sublattice_lattice(Sublattice(l, vrow));
  CHECK(rank1.gram() == IntMatrix{{-6}});

  Lattice full = sublattice_lattice(Sublattice(l, IntMatrix::identity(24)));
  CHECK(full.gram() == l.gram());

  // isotropic span is rejected
  Lattice u = make_U();
  IntMatrix iso(1, 2);
  iso(0, 0) = 1;
  CHECK_THROWS_AS(sublattice_lattice(Sublattice(u, iso)), std::domain_error);
}

TEST_CASE("double complement equals saturation") {
  auto gen = oracle::rng(0xD0D0);
  int done = 0;
  while (done < 30) {
    std::size_t n = 2 + done % 4;
    IntMatrix g = oracle::random_even_gram(gen, n);
    Lattice amb{g};
    std::size_t k = 1 + done % (n - 1);
    IntMatrix basis = oracle::random_matrix(gen, k, n, -4, 4);
    try {
      Sublattice s(amb, basis);
      Sublattice dc = orthogonal_complement(orthogonal_complement(s));
      Sublattice sat = saturate(s);
      CHECK(same_row_span(dc.basis(), sat.basis()));
      ++done;
    } catch (const std::invalid_argument&) {
      continue;  // dependent random rows; try again
    }
  }
}

TEST_CASE("rank additivity for nondegenerate restrictions") {
  auto gen = oracle::rng(0xFACE);
  int done = 0;
  while (done < 30) {
    std::size_t n = 2 + done % 4;
    Lattice amb{oracle::random_even_gram(gen, n)};
    std::size_t k = 1 + done % n;
    IntMatrix basis = oracle::random_matrix(gen, k, n, -3, 3);
    try {
      Sublattice s(amb, basis);
      sublattice_lattice(s);  // throws when degenerate
      CHECK(s.rank() + orthogonal_complement(s).rank() == amb.rank());
      ++done;
    } catch (const std::exception&) {
      continue;
    }
  }
}
