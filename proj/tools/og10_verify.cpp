// og10-verify: runs the named verification suites behind the OG10 symplectic
// automorphism argument and reports exact witnesses.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or I/O error.

#include "oglat/report.hpp"
#include "oglat/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"OG10 lattice-side verification suites"};
  std::string suite = "all";
  std::string safety = "1.001";
  std::string json_path;
  std::string table_json_path;
  unsigned threads = 1;
  bool kissing = false;

  app.add_option("suite", suite,
                 "one of: all, bounds-table, rank-one, e8-swap, leech, disc-actions")
      ->check(CLI::IsMember({"all", "bounds-table", "rank-one", "e8-swap", "leech",
                             "disc-actions"}));
  app.add_option("--safety-factor", safety,
                 "rational factor >= 1 applied to the Rogers bounds in the re-run "
                 "(e.g. 1.001 or 1001/1000)");
  app.add_option("--json", json_path, "write the report as JSON to this path (atomic)");
  app.add_option("--table-json", table_json_path,
                 "write the contradiction table rows as JSON to this path");
  app.add_option("--threads", threads, "enumeration worker count")->check(CLI::PositiveNumber);
  app.add_flag("--kissing", kissing, "include the full Leech kissing-number enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    oglat::SuiteSpec spec;
    spec.name = suite;
    spec.safety_factor = oglat::rat_from_string(safety);
    spec.kissing = kissing;
    spec.threads = threads;
    if (spec.safety_factor < 1) {
      std::cerr << "error: --safety-factor must be >= 1\n";
      return 2;
    }
    if (suite == "bounds-table" || suite == "all") {
      oglat::ContradictionTable table = oglat::contradiction_table(spec.safety_factor);
      std::cout << oglat::bounds_table_text(table);
      if (!table_json_path.empty())
        oglat::write_json_atomic(oglat::bounds_table_json(table), table_json_path);
    }
    oglat::VerificationReport rep = oglat::run_suite(spec);
    oglat::emit_text(rep, std::cout);
    if (!json_path.empty()) oglat::emit_json(rep, json_path);
    return rep.pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
