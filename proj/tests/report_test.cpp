#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "coxric/report.hpp"
#include "coxric/gamma.hpp"
#include "coxric/isoperimetry.hpp"
#include "coxric/spectral.hpp"
#include "support.hpp"

using namespace coxric;

TEST_SUITE("report") {

TEST_CASE("rounding") {
  CHECK(round_significant(0.1 + 0.2) == 0.3);
  CHECK(round_significant(2.0000000000004) == 2.0);
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(-1e-17) == "-1e-17");
  nlohmann::json j = {{"a", 1.0 - 1e-15}, {"b", {-0.0, 3}}, {"c", "x"}};
  round_floats(j);
  CHECK(j.dump() == R"({"a":1.0,"b":[0.0,3],"c":"x"})");
}

TEST_CASE("curvature and spectral json") {
  const auto r = local_ricci(cycle_graph(4), 0);
  CHECK(to_json(r, false).contains("minimizer") == false);
  CHECK(to_json(r, true)["minimizer"]["values"].size() == 4);
  const auto s = spectral_gap(cycle_graph(4));
  CHECK(to_json(s, true)["eigenvalues"].size() == 4);
  CHECK_FALSE(to_json(s, false).contains("eigenvalues"));
}

TEST_CASE("isoperimetry csv") {
  IsoOptions opts;
  opts.mode = IsoMode::exhaustive;
  const auto s = verify_isoperimetry(cycle_graph(4), opts);
  std::ostringstream out;
  write_iso_csv(out, s);
  const auto text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 17);
  CHECK(text.rfind("kind,index,size", 0) == 0);
  CHECK(to_json(s, true)["reports"].size() == 16);
  CHECK(to_json(s, false)["reports"].empty());
  // Bitmask 0b0101 expands to vertices 0 and 2.
  IsoReport r;
  r.kind = SubsetKind::exhaustive;
  r.index = 5;
  CHECK(subset_members(r) == std::vector<Vertex>{0, 2});
}

}  // TEST_SUITE
