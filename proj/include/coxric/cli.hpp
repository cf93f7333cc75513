#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace coxric {

inline constexpr std::size_t kCliMaxOrder = 1500;

struct RunConfig {
  std::string command;
  std::string spec;        // type spec, inline JSON or @matrix-file
  std::string graph_path;  // non-Coxeter input
  std::string format = "table";
  std::string out;
  std::string vertex;
  std::string what = "group";
  std::uint64_t seed = 42;
  std::size_t samples = 10'000;
  double eigen_tol = 1e-12;
  bool exhaustive = false;
  bool all = false;
  bool transitive = false;
  bool emit_minimizer = false;
  bool full_spectrum = false;
  bool all_reports = false;
  bool elements = false;
  bool force = false;
};

nlohmann::json to_json(const RunConfig& cfg);

// Exit codes: 0 all verdicts pass, 1 a check failed, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxric
