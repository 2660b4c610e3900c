#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cli.hpp"
#include "sdc/code.hpp"
#include "sdc/fixtures.hpp"
#include "sdc/matrix_io.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status = sdc::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.status == 0);
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("sdcode_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).status == sdc::cli::kUsageError);
  CHECK(run({"frobnicate"}).status == sdc::cli::kUsageError);
  CHECK(run({"info"}).status == sdc::cli::kUsageError);
  CHECK(run({"info", "/nonexistent/file.txt"}).status == sdc::cli::kUsageError);
  CHECK(run({"info", "fixture:G9"}).status == sdc::cli::kUsageError);
  CHECK(run({"info", "-"}, "10\n1\n").status == sdc::cli::kUsageError);
  CHECK(run({"--help"}).status == sdc::cli::kSuccess);
}

TEST_CASE("info") {
  const auto g3 = run({"info", "--fixture", "G3"});
  CHECK(g3.status == 0);
  CHECK(g3.out.find("n=24 k=12 d=2") != std::string::npos);
  CHECK(g3.out.find("type=TypeI") != std::string::npos);

  const auto j = run_json({"info", "fixture:G6"});
  CHECK(j["d"] == 8);
  CHECK(j["type"] == "TypeII");
  CHECK(j["self_dual"] == true);
}

TEST_CASE("info reads standard input") {
  const auto r = run({"info", "-", "--json"}, "4 2\n1100\n0110\n");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["type"] == "NotSelfOrthogonal");
  CHECK(j["self_dual"] == false);
  CHECK(j["k"] == 2);
}

TEST_CASE("dual") {
  const auto r = run({"dual", "-"}, "1111\n");
  REQUIRE(r.status == 0);
  const auto m = sdc::parse_matrix(r.out);
  CHECK(m.nrows() == 3);
  CHECK(m.ncols() == 4);

  const auto dir = temp_dir("dual");
  const auto path = (dir / "g1dual.txt").string();
  CHECK(run({"dual", "--fixture", "G1", "-o", path}).status == 0);
  std::ifstream f(path);
  CHECK(sdc::LinearCode::from_generator(sdc::read_matrix(f)) == sdc::LinearCode::from_generator(sdc::fixture("G1")));
}

TEST_CASE("neighborhood") {
  const auto j3 = run_json({"neighborhood", "--fixture", "G3"});
  REQUIRE(j3["members"].size() == 3);
  std::vector<int> d3;
  for (const auto& m : j3["members"]) d3.push_back(m["d"]);
  CHECK(d3 == std::vector<int>{2, 8, 8});
  CHECK(j3["members"][0]["is_input"] == true);
  CHECK(j3["verdicts"]["d2_coincide"]["verdict"] == "pass");
  CHECK(j3["verdicts"]["shadow_range"]["min_weight"] == 2);
  CHECK(j3["verdicts"]["shadow_range"]["max_weight"] == 22);

  const auto j4 = run_json({"neighborhood", "fixture:G4"});
  std::vector<int> d4;
  for (const auto& m : j4["members"]) d4.push_back(m["d"]);
  CHECK(d4[0] == 6);
  std::sort(d4.begin() + 1, d4.end());
  CHECK(d4 == std::vector<int>{6, 4, 8});
  CHECK(j4["verdicts"]["d2_coincide"]["verdict"] == "not-applicable");

  const auto text = run({"neighborhood", "--fixture", "G3"});
  CHECK(text.status == 0);
  CHECK(text.out.find("shadow-range: pass") != std::string::npos);

  CHECK(run({"neighborhood", "--fixture", "G1"}).status == sdc::cli::kUsageError);

  const auto dir = temp_dir("nbhd");
  CHECK(run({"neighborhood", "--fixture", "G4", "--out-dir", dir.string()}).status == 0);
  for (const char* f : {"c_max.txt", "member1.txt", "member2.txt", "member3.txt"})
    CHECK(std::filesystem::exists(dir / f));
}

TEST_CASE("neighbors and equivalent") {
  const auto n = run_json({"neighbors", "--fixture", "G1", "--fixture", "G3"});
  CHECK(n["neighbors"] == true);
  CHECK(n["intersection_dimension"] == 11);
  CHECK(run_json({"neighbors", "fixture:G1", "fixture:G4"})["neighbors"] == false);

  const auto e = run_json({"equivalent", "fixture:G1", "fixture:G2"});
  CHECK(e["equivalent"] == true);
  CHECK(e["permutation"].size() == 24);
  const auto x = run_json({"equivalent", "fixture:G1", "fixture:G3"});
  CHECK(x["equivalent"] == false);
  CHECK(x["method"] == "weight-enumerator");

  CHECK(run({"equivalent", "fixture:G1"}).status == sdc::cli::kUsageError);
}

TEST_CASE("search") {
  CHECK(run({"search", "--n", "10"}).status == sdc::cli::kUsageError);
  CHECK(run({"search"}).status == sdc::cli::kUsageError);

  const auto a = run({"search", "--n", "16", "--steps", "200", "--seed", "7", "--json"});
  const auto b = run({"search", "--n", "16", "--steps", "200", "--seed", "7", "--json"});
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["best_type1"]["d"] <= 4);

  const auto e = run_json({"search", "--n", "24", "--steps", "1000", "--seed", "1", "--min-d", "8"});
  const bool found = (e["best_type1"]["found"] == true && e["best_type1"]["d"] >= 8) ||
                     (e["best_type2"]["found"] == true && e["best_type2"]["d"] >= 8);
  CHECK(e["stopped_early"] == found);
}

TEST_CASE("verify-paper with a corrupted fixture fails") {
  const auto dir = temp_dir("fixtures");
  const auto g1 = sdc::fixture("G1");
  std::vector<sdc::BitVector> rows(g1.rows().begin(), g1.rows().end());
  rows[3].flip(5);
  std::ofstream(dir / "G1.txt") << sdc::serialize_matrix(sdc::BitMatrix(24, std::move(rows)));
  const auto r = run({"verify-paper", "--fixtures-dir", dir.string()});
  CHECK(r.status == sdc::cli::kCheckFailed);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
}
