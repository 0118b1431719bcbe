// isometry: analyze a lattice isometry given as JSON
//   isometry analyze --file g.json
// where g.json is {"lattice": <lattice JSON or name>, "matrix": <matrix JSON>}.

#include "oglat/discriminant.hpp"
#include "oglat/enumerate.hpp"
#include "oglat/isometry.hpp"
#include "oglat/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

void print_sublattice(const char* tag, const oglat::Sublattice& s) {
  using namespace oglat;
  std::cout << tag << " rank:  " << s.rank() << "\n";
  if (s.rank() == 0) return;
  Lattice lat = sublattice_lattice(s);
  Signature sig = signature(lat.gram());
  std::cout << tag << " sig:   (" << sig.pos << "," << sig.neg << ")\n";
  std::cout << tag << " |det|: " << lat.abs_det().str() << "\n";
  std::cout << tag << " even:  " << (is_even(lat) ? "yes" : "no") << "\n";
  if (sig.pos == 0 || sig.neg == 0)
    std::cout << tag << " min |norm|: " << minimal_norm(lat).str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice isometry analyzer"};
  app.require_subcommand(1);
  CLI::App* analyze = app.add_subcommand("analyze", "order, discriminant action, L^g and L_g");
  std::string file;
  unsigned order_cap = oglat::kDefaultOrderCap;
  analyze->add_option("--file", file, "isometry JSON file")->required();
  analyze->add_option("--order-cap", order_cap, "bound for the order search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    oglat::IsometryInput in = oglat::load_isometry_file(file);
    oglat::Isometry g = oglat::check_isometry(in.lattice, in.matrix, order_cap);
    std::cout << "order: " << g.order() << "\n";
    oglat::DiscAction act = oglat::induced_disc_action(g.lattice(), g.matrix());
    std::cout << "disc action: " << oglat::to_string(act.classification) << "\n";
    oglat::Sublattice inv = oglat::invariant_sublattice(g);
    oglat::Sublattice co = oglat::orthogonal_complement(inv);
    print_sublattice("L^g", inv);
    print_sublattice("L_g", co);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
