#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxric/check.hpp"
#include "coxric/dihedral.hpp"
#include "coxric/graph.hpp"
#include "coxric/group.hpp"
#include "coxric/rng.hpp"

namespace coxric {

// Relative comparison with the scale floored at 1.
bool close_rel(double a, double b, double tol);

// Random function on the vertices with values in [-1, 1).
std::vector<double> random_function(std::size_t order, Rng& rng);

// gamma2_formula against gamma2_def (and constant-shift invariance) on random
// functions at the given vertices; the triangle-free variant is compared too
// when the graph has no triangles.
std::vector<CheckTally> check_operator_equivalence(const Graph& g, const std::vector<Vertex>& at,
                                                   std::size_t functions, Rng& rng);

struct EstimateStats {
  CheckTally tally;
  double min_slack = 0.0;
};

// 1/2 sum_{u in B2} sum_v (f(u) - 2 f(v))^2 >= sum over pairs in B1 of (f(v) - f(v'))^2,
// for random f with f(x) = 0.
EstimateStats check_general_estimate(const Graph& g, Vertex x, std::size_t functions, Rng& rng);
// Dihedral form with n = deg(x): sum_{u,v} (f(u) - 2 f(v))^2 >= (4/n)(n-1) sum over pairs.
EstimateStats check_dihedral_estimate(const Graph& g, Vertex x, std::size_t functions, Rng& rng);
// The dihedral estimate applied to each class U of the 2-sphere around the
// identity: sum_{u in U} sum_v (f(u) - 2 f(v))^2 >= 4 (n_u - 1) / n_u times the
// pair sum over the reflections of G_U, with n_u = |B(1,u) n B(1,e)|.
EstimateStats check_class_estimate(const Group& grp, const std::vector<SphereClass>& classes,
                                   std::size_t functions, Rng& rng);

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 10'000;           // isoperimetric subsets and reflection quadruples
  std::size_t functions = 100;            // operator-equivalence functions per vertex
  std::size_t estimate_functions = 1000;  // energy-estimate functions
  double eigen_tol = 1e-12;
  bool force = false;
};

struct SuiteReport {
  std::vector<CheckTally> checks;
  std::vector<std::string> notes;
  nlohmann::json summary;

  bool pass() const;
};

// Every invariant the library knows about, run on one finite Coxeter group.
SuiteReport run_invariant_suite(const Group& grp, const SuiteOptions& opts);

}  // namespace coxric
