#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coxric/graph.hpp"
#include "coxric/linalg.hpp"

namespace coxric {

// A real function on the vertices, indexed by vertex id.
using VertexFunction = std::span<const double>;

// Laplacian action: sum over neighbours v of f(v) - f(x).
double delta_op(const Graph& g, VertexFunction f, Vertex x);

// Carre du champ: 1/2 sum over neighbours v of (f(x)-f(v))(h(x)-h(v)).
double gamma_op(const Graph& g, VertexFunction f, VertexFunction h, Vertex x);

// Iterated carre du champ, straight from 1/2 Delta Gamma(f) - Gamma(f, Delta f).
double gamma2_def(const Graph& g, VertexFunction f, Vertex x);

enum class TriangleTerm { include, omit };

// Closed form of Gamma_2 for f(x) = 0, split into the sphere-2 term, the
// square of the sum, the triangle (B1-B1 edge) term and the degree
// correction. Throws InputError when f(x) != 0. Omitting the triangle term is
// exact on triangle-free graphs.
double gamma2_formula(const Graph& g, VertexFunction f, Vertex x,
                      TriangleTerm triangles = TriangleTerm::include);

// Values of a function on {x} u B(1,x) u B(2,x).
struct LocalFunction {
  Vertex base = 0;
  std::vector<Vertex> vertices;
  std::vector<double> values;

  // Dense function on all of V(G), zero away from the two-ball.
  std::vector<double> to_dense(std::size_t order) const;
};

// y^T M y = min over the B(2,x) values of 2 Gamma_2(f)(x), for f(x) = 0 and
// y = f on B(1,x). For u in B(2,x) with n_u neighbours in B(1,x) the
// minimizing value is z_u = (2 / n_u) * sum of y over those neighbours.
struct ReducedForm {
  Vertex base = 0;
  std::vector<Vertex> sphere1;
  std::vector<Vertex> sphere2;
  // For each u in sphere2, positions in sphere1 of its neighbours.
  std::vector<std::vector<std::size_t>> sphere2_links;
  SymMatrix matrix;

  // Extends y on B(1,x) to the minimizing function on the two-ball.
  LocalFunction extend(std::span<const double> y) const;
};

ReducedForm assemble_reduced_form(const Graph& g, Vertex x);

struct CurvatureOptions {
  double eigen_tol = 1e-12;
};

struct CurvatureReport {
  Vertex vertex = 0;
  double ricci = 0.0;
  LocalFunction minimizer;  // f(x) = 0 and Gamma(f)(x) = 1
  std::size_t sphere1_size = 0;
  std::size_t sphere2_size = 0;
  double eigen_tol = 0.0;
};

// Local Ricci curvature as lambda_min of the reduced form. Throws InputError
// for isolated vertices.
CurvatureReport local_ricci(const Graph& g, Vertex x, const CurvatureOptions& opts = {});

std::vector<CurvatureReport> local_ricci_all(const Graph& g, const CurvatureOptions& opts = {});

struct GlobalRicciOptions {
  // Caller asserts vertex transitivity; only vertex 0 is evaluated.
  bool assume_transitive = false;
  CurvatureOptions curvature;
};

double global_ricci(const Graph& g, const GlobalRicciOptions& opts = {});

// Sum over u in B(2,x), v in B(1,u) n B(1,x) of (f(u) - 2 f(v))^2.
double sphere2_energy(const Graph& g, VertexFunction f, Vertex x);
// Sum over unordered pairs {v, v'} in B(1,x) of (f(v) - f(v'))^2.
double sphere1_pair_energy(const Graph& g, VertexFunction f, Vertex x);

}  // namespace coxric
