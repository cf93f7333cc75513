#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "coxric/cli.hpp"

using namespace coxric;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  const auto r = run(args);
  CHECK(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

std::string write_file(const std::string& name, const std::string& text) {
  std::ofstream(name) << text;
  return name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("group") {
  const auto a3 = run_json({"group", "A3"});
  CHECK(a3["order"] == 24);
  CHECK(a3["reflections"] == 6);
  const auto i5 = run_json({"group", "I2(5)"});
  CHECK(i5["order"] == 10);
  CHECK(i5["reflections"] == 5);
  const auto prod = run_json({"group", "A1xA2"});
  CHECK(prod["order"] == 12);
  CHECK(prod["reflections"] == 4);
  CHECK(prod["config"]["spec"] == "A1xA2");
  const auto table = run({"group", "A3"});
  CHECK(table.code == 0);
  CHECK(table.out.find("order           24") != std::string::npos);
  CHECK(run({"group", "A2", "--format", "dot"}).out.find("graph") != std::string::npos);
}

TEST_CASE("ricci") {
  const auto b3 = run_json({"ricci", "B3"});
  CHECK(std::abs(b3["global"].get<double>() - 2.0) < 1e-8);
  CHECK(b3["vertices"].size() == 48);
  CHECK(b3["verdict"] == "PASS");
  const auto f4 = run_json({"ricci", "F4", "--vertex", "e"});
  CHECK(f4["evaluated"] == 1);
  CHECK(std::abs(f4["global"].get<double>() - 2.0) < 1e-8);
  const auto c5 = write_file("cli_test_c5.edges", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  const auto r = run_json({"ricci", "--graph", c5, "--emit-minimizer"});
  CHECK(std::abs(r["global"].get<double>()) < 1e-9);
  CHECK(r["verdict"].is_null());
  CHECK(r["vertices"][0].contains("minimizer"));
  CHECK(run({"ricci", "A2", "--vertex", "99"}).code == 2);
  CHECK(run({"ricci", "A2", "--vertex", "e", "--all"}).code == 2);
  CHECK(run({"ricci", "A3", "--format", "csv"}).out.find("vertex,ricci") != std::string::npos);
}

TEST_CASE("spectral") {
  const auto a2 = run_json({"spectral", "A2"});
  CHECK(std::abs(a2["spectral"]["gap"].get<double>() - 3.0) < 1e-8);
  CHECK(a2["gap_at_least_2"] == "PASS");
  CHECK(a2["spectral"]["eigenvalues"].size() == 6);
  const auto table = run({"spectral", "A2"});
  CHECK(table.out.find("gap >= 2           PASS") != std::string::npos);
}

TEST_CASE("iso") {
  const auto a3 = run_json({"iso", "A3", "--samples", "10000", "--seed", "42"});
  CHECK(a3["pass"] == true);
  CHECK(a3["isoperimetry"]["failures"] == 0);
  CHECK(a3["isoperimetry"]["subsets"] == 10000 + 23);
  const auto ex = run_json({"iso", "A2", "--exhaustive", "--reports"});
  CHECK(ex["isoperimetry"]["reports"].size() == 64);
  CHECK(run({"iso", "A3", "--exhaustive"}).code == 2);
  const auto csv = run({"iso", "A2", "--exhaustive", "--format", "csv"});
  CHECK(csv.out.find("kind,index") != std::string::npos);
  const auto p12 = write_file("cli_test_p12.edges", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 11\n");
  CHECK(run({"iso", "--graph", p12, "--exhaustive"}).code == 0);
}

TEST_CASE("classes") {
  const auto b4 = run_json({"classes", "B4"});
  bool found = false;
  for (const auto& c : b4["structure"]["classes"])
    found = found || (c["size"] == 3 && c["subgroup"]["reflections"].size() == 4 && c["subgroup"]["order"] == 8);
  CHECK(found);
  CHECK(b4["structure"]["pass"] == true);
  CHECK(run({"classes", "B4"}).out.find("involution in larger dihedral") != std::string::npos);
}

TEST_CASE("check and determinism") {
  const auto a = run({"check", "A3", "--seed", "7", "--json"});
  const auto b = run({"check", "A3", "--seed", "7", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["config"]["seed"] == 7);
  CHECK(run({"check", "A2"}).out.find("all checks PASS") != std::string::npos);
}

TEST_CASE("export") {
  const auto m = run_json({"export", "B3", "--what", "matrix"});
  CHECK(m["matrix"]["m"][1][2] == 4);
  CHECK(run_json({"export", "A2", "--what", "roots"})["roots"]["roots"].size() == 6);
  CHECK(run_json({"export", "A2", "--what", "graph"})["graph"]["edges"].size() == 9);
  const auto edges = run({"export", "A2", "--what", "graph", "--format", "edges"});
  CHECK(edges.code == 0);
  CHECK(std::count(edges.out.begin(), edges.out.end(), '\n') == 10);
  CHECK(run({"export", "A2", "--what", "roots", "--format", "dot"}).code == 2);
}

TEST_CASE("output file") {
  const auto r = run({"group", "A2", "--json", "--out", "cli_test_out.json"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in("cli_test_out.json");
  CHECK(nlohmann::json::parse(in)["order"] == 6);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"group", "Q7"}).code == 2);
  CHECK(run({"group"}).code == 2);
  CHECK(run({"group", R"({"m": [[1,0],[0,1]]})"}).code == 2);
  CHECK(run({"ricci", "A2", "--format", "dot"}).code == 2);
  CHECK(run({"check", "--graph", "x.edges"}).code == 2);
  CHECK(run({"ricci", "--graph", "/nonexistent.edges"}).code == 2);
  const auto guarded = run({"spectral", "H4"});
  CHECK(guarded.code == 2);
  CHECK(guarded.err.find("--force") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("forced curvature at the identity of H4") {
  const auto r = run_json({"ricci", "H4", "--vertex", "e", "--force"});
  CHECK(std::abs(r["global"].get<double>() - 2.0) < 1e-8);
}

}  // TEST_SUITE
