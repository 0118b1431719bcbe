#include "oglat/json_io.hpp"
#include "oglat/report.hpp"
#include "oglat/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace oglat;

TEST_CASE("rational string forms") {
  CHECK(rat_to_string(Rat(1, 2)) == "0.5");
  CHECK(rat_to_string(Rat(127241, 100000)) == "1.27241");
  CHECK(rat_to_string(Rat(1, 3)) == "1/3");
  CHECK(rat_to_string(Rat(-7, 4)) == "-1.75");
  CHECK(rat_to_string(Rat(6)) == "6");
  CHECK(rat_to_string(Rat(4, 3)) == "4/3");

  CHECK(rat_from_string("1.001") == Rat(1001, 1000));
  CHECK(rat_from_string("1001/1000") == Rat(1001, 1000));
  CHECK(rat_from_string("3") == Rat(3));
  CHECK(rat_from_string("-0.5") == Rat(-1, 2));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("matrix and lattice JSON round trips") {
  IntMatrix m{{0, 1}, {1, 0}};
  IntMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK(back == m);

  Lattice a2 = make_A2();
  Lattice la = lattice_from_json(lattice_to_json(a2));
  CHECK(la.gram() == a2.gram());
  REQUIRE(la.label());
  CHECK(*la.label() == "A2");

  nlohmann::json bad = {{"rows", 2}, {"cols", 2}, {"entries", {"1", "0", "0"}}};
  CHECK_THROWS_AS(matrix_from_json(bad), std::invalid_argument);

  CHECK(lattice_by_name("e8").abs_det() == 1);
  CHECK_THROWS_AS(lattice_by_name("nope"), std::invalid_argument);
}

TEST_CASE("report invariants") {
  VerificationReport rep("demo");
  CHECK(rep.pass());  // vacuous conjunction
  rep.add("a", true, "w1", 1);
  rep.add("b", false, "w2", 2);
  CHECK_FALSE(rep.pass());
  CHECK_THROWS_AS(rep.add("a", true, "dup"), std::invalid_argument);

  auto j = rep.to_json();
  CHECK(j["suite"] == "demo");
  CHECK(j["pass"] == false);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "a");
  CHECK(j["checks"][1]["pass"] == false);
}

TEST_CASE("empty report renders and passes vacuously") {
  VerificationReport rep("empty");
  std::ostringstream os;
  emit_text(rep, os);
  CHECK(os.str().find("0 checks") != std::string::npos);
  CHECK(os.str().find("PASS") != std::string::npos);
  CHECK(rep.to_json()["pass"] == true);
}

TEST_CASE("bounds table text and row json") {
  ContradictionTable t = contradiction_table();
  std::string text = bounds_table_text(t);
  CHECK(text.find("equal") != std::string::npos);
  CHECK(text.find("strict") != std::string::npos);
  CHECK(text.find("VIOLATED") == std::string::npos);

  auto j = bounds_table_json(t);
  REQUIRE(j["rows"].size() == 21);
  CHECK(j["rows"][0]["n"] == 1);
  CHECK(j["rows"][0]["b_n"] == "0.5");
  CHECK(j["rows"][0]["upper"] == "6");
  CHECK(j["rows"][0]["strict"] == false);
  CHECK(j["rows"][1]["lower_num"] == "1406250000");
  CHECK(j["rows"][1]["lower_den"] == "52085089");
  CHECK(j["rows"][1]["strict"] == true);
}

TEST_CASE("json emission is atomic and well formed") {
  VerificationReport rep("demo");
  rep.add("only", true, "fine", 3);
  auto path = std::filesystem::temp_directory_path() / "oglat_report_test.json";
  emit_json(rep, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["pass"] == true);
  CHECK(j["checks"][0]["name"] == "only");
  std::filesystem::remove(path);
}

namespace {

nlohmann::json strip_runtimes(nlohmann::json j) {
  for (auto& c : j["checks"]) c.erase("runtime_ms");
  return j;
}

}  // namespace

TEST_CASE("suite reports are deterministic across worker counts") {
  SuiteSpec one;
  one.name = "bounds-table";
  one.threads = 1;
  SuiteSpec four = one;
  four.threads = 4;
  auto a = strip_runtimes(run_suite(one).to_json());
  auto b = strip_runtimes(run_suite(four).to_json());
  CHECK(a.dump() == b.dump());
}

TEST_CASE("bounds-table suite shape") {
  SuiteSpec spec;
  spec.name = "bounds-table";
  VerificationReport rep = run_suite(spec);
  CHECK(rep.pass());
  CHECK(rep.checks().size() == 22);  // 21 rows + inflated aggregate
  CHECK(rep.checks().front().name == "bounds.n01");
  CHECK(rep.checks().back().name == "bounds.inflated-strict");
}

TEST_CASE("unknown suite and bad options") {
  SuiteSpec bad;
  bad.name = "nonsense";
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
  SuiteSpec neg;
  neg.safety_factor = Rat(1, 2);
  CHECK_THROWS_AS(run_suite(neg), std::invalid_argument);
}

TEST_CASE("rank-one suite passes") {
  SuiteSpec spec;
  spec.name = "rank-one";
  VerificationReport rep = run_suite(spec);
  INFO([&] {
    std::string all;
    for (auto& c : rep.checks()) all += c.name + "=" + (c.pass ? "1" : "0") + " ";
    return all;
  }());
  CHECK(rep.pass());
}

TEST_CASE("disc-actions suite passes") {
  SuiteSpec spec;
  spec.name = "disc-actions";
  VerificationReport rep = run_suite(spec);
  CHECK(rep.pass());
}
