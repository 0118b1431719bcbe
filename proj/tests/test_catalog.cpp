#include "oglat/catalog.hpp"
#include "oglat/enumerate.hpp"
#include "oglat/golay.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace oglat;

TEST_CASE("named small lattices") {
  Lattice a2 = make_A2();
  CHECK(is_even(a2));
  CHECK(a2.abs_det() == 3);
  Signature sa = signature(a2.gram());
  CHECK(sa.pos == 0);
  CHECK(sa.neg == 2);

  Lattice e8 = make_E8();
  CHECK(is_even(e8));
  CHECK(e8.abs_det() == 1);
  Signature se = signature(e8.gram());
  CHECK(se.pos == 0);
  CHECK(se.neg == 8);

  Lattice l = make_OG10_L();
  CHECK(is_even(l));
  CHECK(l.rank() == 24);
  CHECK(l.abs_det() == 3);
  Signature sl = signature(l.gram());
  CHECK(sl.pos == 3);
  CHECK(sl.neg == 21);
}

TEST_CASE("golay code") {
  const GolayCode& c = make_golay();
  auto dist = c.weight_distribution();
  CHECK(dist == std::map<int, int>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
  CHECK(c.codewords().size() == 4096);
  CHECK(c.contains(0xFFFFFFu >> 0));  // all-ones word (24 bits)
  int min_nonzero = 24;
  for (auto& [w, n] : dist)
    if (w > 0 && w < min_nonzero) min_nonzero = w;
  CHECK(min_nonzero == 8);
}

TEST_CASE("golay stored permutations preserve the code") {
  const GolayCode& c = make_golay();
  CHECK(c.permutation_preserves(golay_cycle_permutation()));
  CHECK(c.permutation_preserves(golay_involution_permutation()));
  // a transposition of two coordinates is not an automorphism
  std::array<int, 24> swap01{};
  for (int i = 0; i < 24; ++i) swap01[i] = i;
  std::swap(swap01[0], swap01[1]);
  CHECK_FALSE(c.permutation_preserves(swap01));
}

TEST_CASE("leech model") {
  const Lattice& leech = make_leech();
  CHECK(is_even(leech));
  CHECK(leech.abs_det() == 1);
  Signature s = signature(leech.gram());
  CHECK(s.pos == 0);
  CHECK(s.neg == 24);
  CHECK(count_roots(leech) == 0);
  CHECK(minimal_norm(leech) == 4);
}

TEST_CASE("leech membership predicate on the x description") {
  const LeechModel& m = make_leech_model();
  std::vector<Int> v(24, Int(0));
  v[0] = 4;
  v[1] = 4;
  CHECK(leech_x_member(*m.code, v));
  v[1] = -4;
  CHECK(leech_x_member(*m.code, v));
  // 4e0 alone: coordinate sum 4, not 0 mod 8
  std::vector<Int> w(24, Int(0));
  w[0] = 4;
  CHECK_FALSE(leech_x_member(*m.code, w));
  // (3, 1^23) has sum 26 != 4 mod 8
  std::vector<Int> o(24, Int(1));
  o[0] = 3;
  CHECK_FALSE(leech_x_member(*m.code, o));
  o[0] = -3;
  CHECK(leech_x_member(*m.code, o));
}

TEST_CASE("lambda 1,25") {
  Lattice lam = make_lambda_1_25();
  Signature s = signature(lam.gram());
  CHECK(s.pos == 1);
  CHECK(s.neg == 25);
  CHECK(lam.abs_det() == 1);
  CHECK(is_even(lam));
}
