#pragma once

#include "oglat/catalog.hpp"
#include "oglat/discriminant.hpp"
#include "oglat/enumerate.hpp"
#include "oglat/golay.hpp"
#include "oglat/isometry.hpp"
#include "oglat/og10.hpp"
#include "oglat/report.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oglat {

struct SuiteSpec {
  std::string name = "all";  // all | bounds-table | rank-one | e8-swap | leech | disc-actions
  Rat safety_factor = Rat(1001, 1000);
  bool kissing = false;
  unsigned threads = 1;
  std::optional<std::string> json_path;
};

namespace detail {

// Records a batch of pipeline sub-checks; the measured wall time goes on the
// first item of the batch.
template <typename Fn>
inline void timed_batch(VerificationReport& rep, const std::string& tag, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  std::vector<CheckItem> items;
  try {
    items = fn();
  } catch (const std::exception& e) {
    rep.add(tag + ".exception", false, e.what(), 0);
    return;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  bool first = true;
  for (auto& item : items) {
    rep.add(item.name, item.pass, item.witness, first ? ms : 0);
    first = false;
  }
}

inline void add_bounds_checks(VerificationReport& rep, const Rat& safety) {
  ContradictionTable t = contradiction_table(safety);
  for (const auto& row : t.rows) {
    std::ostringstream name;
    name << "bounds.n" << (row.n < 10 ? "0" : "") << row.n;
    std::ostringstream w;
    w << "upper=" << row.upper.str() << " lower=" << rat_to_string(row.lower);
    if (row.n == 1) {
      rep.timed(name.str(), [&] { return std::make_pair(row.equal, w.str() + " (coincide)"); });
    } else {
      rep.timed(name.str(), [&] { return std::make_pair(row.strict, w.str()); });
    }
  }
  rep.timed("bounds.inflated-strict", [&] {
    std::ostringstream w;
    w << "safety=" << rat_to_string(t.safety) << ", strict for n in 2..21: "
      << (t.inflated_ok ? "yes" : "no");
    return std::make_pair(t.inflated_ok, w.str());
  });
}

inline void add_rank_one_checks(VerificationReport& rep) {
  timed_batch(rep, "rank-one", [] { return rank_one_divisibility_check(); });
}

inline void add_e8_swap_checks(VerificationReport& rep, unsigned threads) {
  Isometry g = e8_swap_involution();
  rep.timed("e8-swap.order-2", [&] {
    return std::make_pair(g.order() == 2, "order=" + std::to_string(g.order()));
  });
  rep.timed("e8-swap.acts-as-minus-one-on-coinvariant", [&] {
    bool ok = involution_action_check(g);
    return std::make_pair(ok, std::string(ok ? "restriction is -id" : "restriction is not -id"));
  });

  Sublattice inv = invariant_sublattice(g);
  Sublattice co = orthogonal_complement(inv);
  Lattice co_lat = sublattice_lattice(co);
  rep.timed("e8-swap.invariant-rank-16-det-768", [&] {
    Int d = sublattice_lattice(inv).abs_det();
    std::ostringstream w;
    w << "rank=" << inv.rank() << " |det|=" << d.str();
    return std::make_pair(inv.rank() == 16 && d == 768, w.str());
  });
  rep.timed("e8-swap.coinvariant-rank-8-det-256", [&] {
    std::ostringstream w;
    w << "rank=" << co.rank() << " |det|=" << co_lat.abs_det().str();
    return std::make_pair(co.rank() == 8 && co_lat.abs_det() == 256, w.str());
  });
  rep.timed("e8-swap.coinvariant-minimal-norm-4", [&] {
    Int mu = minimal_norm(co_lat);
    return std::make_pair(mu == 4, "mu=" + mu.str());
  });

  WallScan scan = coinvariant_wall_scan(g, threads);
  rep.timed("e8-swap.coinvariant-norms-divisible-by-4", [&] {
    bool ok = true;
    for (const auto& n : scan.report.norms)
      if (n % 4 != 0) ok = false;
    std::ostringstream w;
    w << scan.report.total_pairs() << " pairs with |norm|<=24, all norms in 4Z: "
      << (ok ? "yes" : "no");
    return std::make_pair(ok, w.str());
  });
  rep.timed("e8-swap.pex-intersection-empty", [&] {
    return std::make_pair(scan.pex_empty,
                          std::string(scan.pex_empty
                                          ? "lattice-side birational condition passes"
                                          : "unexpected pex wall vector"));
  });
  rep.timed("e8-swap.wall-intersection-nonempty", [&] {
    bool has4 = false;
    std::string wit = "none";
    for (std::size_t i = 0; i < scan.classes.size(); ++i)
      if (scan.classes[i] == WallClass::Wall4) {
        has4 = true;
        wit = "norm -4 witness " + detail::vec_to_string(scan.ambient_vectors[i]);
        break;
      }
    return std::make_pair(!scan.wall_empty && has4, wit);
  });
  rep.timed("e8-swap.gluing-h-256", [&] {
    GluingReport gr = gluing_determinant_check(g);
    std::ostringstream w;
    w << "|det L^g|=" << gr.det_inv.str() << " |det L_g|=" << gr.det_coinv.str()
      << " |H|=" << gr.h_order.str() << " index=" << gr.coinv_index.str();
    bool ok = gr.h_order == 256 && gr.h_power_of_two && gr.index_le_3 && gr.h_divides_both;
    return std::make_pair(ok, w.str());
  });
  rep.timed("e8-swap.disc-action-identity", [&] {
    DiscAction act = induced_disc_action(g.lattice(), g.matrix());
    return std::make_pair(act.classification == DiscActionClass::Identity,
                          to_string(act.classification));
  });
  timed_batch(rep, "e8-swap", [&] { return trivial_disc_case_pipeline(g, true, threads); });
}

inline void add_leech_checks(VerificationReport& rep, bool kissing, unsigned threads) {
  rep.timed("golay.weight-distribution", [] {
    auto dist = make_golay().weight_distribution();
    std::ostringstream w;
    for (auto& [weight, count] : dist) w << " w" << weight << ":" << count;
    bool ok = dist == std::map<int, int>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    return std::make_pair(ok, w.str().substr(1));
  });
  rep.timed("golay.stored-automorphisms", [] {
    bool ok = make_golay().permutation_preserves(golay_cycle_permutation()) &&
              make_golay().permutation_preserves(golay_involution_permutation());
    return std::make_pair(ok, std::string("23-cycle and involution fix the code"));
  });
  rep.timed("leech.even", [] {
    return std::make_pair(is_even(make_leech()), std::string("all diagonal norms even"));
  });
  rep.timed("leech.unimodular", [] {
    Int d = make_leech().abs_det();
    return std::make_pair(d == 1, "|det|=" + d.str());
  });
  rep.timed("leech.root-free", [&] {
    std::size_t roots = count_roots(make_leech());
    return std::make_pair(roots == 0, std::to_string(roots) + " vectors of |norm| 2");
  });
  rep.timed("leech.minimal-norm-4", [] {
    Int mu = minimal_norm(make_leech());
    return std::make_pair(mu == 4, "mu=" + mu.str());
  });
  if (kissing) {
    rep.timed("leech.kissing-196560", [&] {
      std::size_t k = kissing_number(make_leech(), threads);
      return std::make_pair(k == 196560, std::to_string(k) + " minimal vectors");
    });
  }
}

inline void add_disc_action_checks(VerificationReport& rep) {
  Lattice l = make_OG10_L();
  rep.timed("disc.L-sharp-order-3", [&] {
    DiscriminantGroup d = discriminant_group(l);
    std::ostringstream w;
    w << "|L#|=" << d.order().str() << " length=" << d.length();
    return std::make_pair(d.order() == 3 && d.length() == 1, w.str());
  });
  Isometry swap = e8_swap_involution();
  rep.timed("disc.e8-swap-identity", [&] {
    DiscAction act = induced_disc_action(l, swap.matrix());
    return std::make_pair(act.classification == DiscActionClass::Identity,
                          to_string(act.classification));
  });
  LatticeVector v(24, Int(0));
  v[22] = 1;
  v[23] = -1;
  Isometry refl = reflection_in_vector(l, v);
  rep.timed("disc.rank-one-neg-identity", [&] {
    DiscAction act = induced_disc_action(l, refl.matrix());
    return std::make_pair(act.classification == DiscActionClass::NegIdentity,
                          to_string(act.classification));
  });
  rep.timed("disc.q-preserved", [&] {
    DiscriminantGroup d = discriminant_group(l);
    DiscAction a1 = induced_disc_action(l, swap.matrix());
    DiscAction a2 = induced_disc_action(l, refl.matrix());
    bool ok = true;
    for (const auto& x : d.all_elements()) {
      if (disc_quadratic(d, apply_disc_action(d, a1, x)) != disc_quadratic(d, x)) ok = false;
      if (disc_quadratic(d, apply_disc_action(d, a2, x)) != disc_quadratic(d, x)) ok = false;
    }
    return std::make_pair(ok, std::string("q(g#x) = q(x) on all of L#"));
  });
  auto length_chain = [&](const Isometry& g, const std::string& name) {
    rep.timed(name, [&] {
      Sublattice inv = invariant_sublattice(g);
      Sublattice co = orthogonal_complement(inv);
      std::size_t lc = discriminant_group(sublattice_lattice(co)).length();
      std::size_t li = discriminant_group(sublattice_lattice(inv)).length();
      std::ostringstream w;
      w << "l(L_g#)=" << lc << " l((L^g)#)=" << li;
      return std::make_pair(lc <= li + 1, w.str());
    });
  };
  length_chain(swap, "disc.length-chain-e8-swap");
  length_chain(refl, "disc.length-chain-rank-one");
}

}  // namespace detail

// Aligned text form of the contradiction table.
inline std::string bounds_table_text(const ContradictionTable& t) {
  std::ostringstream os;
  os << "  n  b_n      upper  lower (exact)                                verdict\n";
  for (const auto& r : t.rows) {
    std::ostringstream lower;
    lower << rat_num(r.lower).str() << "/" << rat_den(r.lower).str();
    os << "  " << std::left << std::setw(3) << r.n << std::setw(9) << rat_to_string(r.b_n)
       << std::setw(7) << r.upper.str() << std::setw(45) << lower.str()
       << (r.equal ? "equal" : (r.strict ? "strict" : "VIOLATED")) << "\n";
  }
  return os.str();
}

// Row JSON {n, b_n, upper, lower_num, lower_den, strict} per table row.
inline nlohmann::ordered_json bounds_table_json(const ContradictionTable& t) {
  nlohmann::ordered_json doc;
  doc["safety_factor"] = rat_to_string(t.safety);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["b_n"] = rat_to_string(r.b_n);
    row["upper"] = r.upper.str();
    row["lower_num"] = rat_num(r.lower).str();
    row["lower_den"] = rat_den(r.lower).str();
    row["strict"] = r.strict;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  doc["printed_ok"] = t.printed_ok;
  doc["inflated_ok"] = t.inflated_ok;
  return doc;
}

inline VerificationReport run_suite(const SuiteSpec& spec) {
  if (spec.safety_factor < 1)
    throw std::invalid_argument("run_suite: safety factor must be >= 1");
  if (spec.threads < 1) throw std::invalid_argument("run_suite: threads must be >= 1");
  VerificationReport rep(spec.name);
  const bool all = spec.name == "all";
  bool known = all;
  if (all || spec.name == "bounds-table") {
    detail::add_bounds_checks(rep, spec.safety_factor);
    known = true;
  }
  if (all || spec.name == "rank-one") {
    detail::add_rank_one_checks(rep);
    known = true;
  }
  if (all || spec.name == "e8-swap") {
    detail::add_e8_swap_checks(rep, spec.threads);
    known = true;
  }
  if (all || spec.name == "leech") {
    detail::add_leech_checks(rep, spec.kissing, spec.threads);
    known = true;
  }
  if (all || spec.name == "disc-actions") {
    detail::add_disc_action_checks(rep);
    known = true;
  }
  if (!known) throw std::invalid_argument("run_suite: unknown suite " + spec.name);
  return rep;
}

}  // namespace oglat
