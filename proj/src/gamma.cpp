#include "coxric/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coxric/errors.hpp"

namespace coxric {

namespace {

void require_function(const Graph& g, VertexFunction f, Vertex x) {
  if (!g.contains(x)) throw InputError("vertex " + std::to_string(x) + " out of range");
  if (f.size() != g.order()) {
    throw InputError("function has " + std::to_string(f.size()) + " values, graph has " +
                     std::to_string(g.order()) + " vertices");
  }
}

double at(VertexFunction f, Vertex v) { return f[static_cast<std::size_t>(v)]; }

}  // namespace

double delta_op(const Graph& g, VertexFunction f, Vertex x) {
  require_function(g, f, x);
  double acc = 0.0;
  for (Vertex v : g.neighbors(x)) acc += at(f, v) - at(f, x);
  return acc;
}

double gamma_op(const Graph& g, VertexFunction f, VertexFunction h, Vertex x) {
  require_function(g, f, x);
  require_function(g, h, x);
  double acc = 0.0;
  for (Vertex v : g.neighbors(x)) acc += (at(f, x) - at(f, v)) * (at(h, x) - at(h, v));
  return 0.5 * acc;
}

double gamma2_def(const Graph& g, VertexFunction f, Vertex x) {
  require_function(g, f, x);
  const auto nbrs = g.neighbors(x);

  // 1/2 Delta(Gamma(f))(x)
  const double gamma_x = gamma_op(g, f, f, x);
  double delta_gamma = 0.0;
  for (Vertex v : nbrs) delta_gamma += gamma_op(g, f, f, v) - gamma_x;

  // Gamma(f, Delta f)(x); Delta f is only needed on {x} u B(1,x).
  const double lap_x = delta_op(g, f, x);
  double gamma_f_lap = 0.0;
  for (Vertex v : nbrs) gamma_f_lap += (at(f, x) - at(f, v)) * (lap_x - delta_op(g, f, v));
  gamma_f_lap *= 0.5;

  return 0.5 * delta_gamma - gamma_f_lap;
}

double gamma2_formula(const Graph& g, VertexFunction f, Vertex x, TriangleTerm triangles) {
  require_function(g, f, x);
  if (at(f, x) != 0.0) throw InputError("gamma2_formula requires f(x) = 0");
  const auto dist = distances_from(g, x, 2);
  const auto nbrs = g.neighbors(x);
  const double dx = static_cast<double>(nbrs.size());

  double sphere2_term = 0.0;
  double sum = 0.0;
  double edge_term = 0.0;
  double degree_term = 0.0;
  for (Vertex v : nbrs) {
    const double fv = at(f, v);
    sum += fv;
    degree_term += 0.5 * (4.0 - dx - static_cast<double>(g.degree(v))) * fv * fv;
    for (Vertex w : g.neighbors(v)) {
      const int dw = dist[static_cast<std::size_t>(w)];
      if (dw == 2) {
        const double d = at(f, w) - 2.0 * fv;
        sphere2_term += 0.5 * d * d;
      } else if (dw == 1 && v < w) {
        const double fw = at(f, w);
        edge_term += 2.0 * (fv - fw) * (fv - fw) + 0.5 * (fv * fv + fw * fw);
      }
    }
  }
  double twice = sphere2_term + sum * sum + degree_term;
  if (triangles == TriangleTerm::include) twice += edge_term;
  return 0.5 * twice;
}

std::vector<double> LocalFunction::to_dense(std::size_t order) const {
  std::vector<double> out(order, 0.0);
  for (std::size_t i = 0; i < vertices.size(); ++i) out[static_cast<std::size_t>(vertices[i])] = values[i];
  return out;
}

LocalFunction ReducedForm::extend(std::span<const double> y) const {
  LocalFunction f;
  f.base = base;
  f.vertices.push_back(base);
  f.values.push_back(0.0);
  for (std::size_t i = 0; i < sphere1.size(); ++i) {
    f.vertices.push_back(sphere1[i]);
    f.values.push_back(y[i]);
  }
  for (std::size_t k = 0; k < sphere2.size(); ++k) {
    double s = 0.0;
    for (std::size_t i : sphere2_links[k]) s += y[i];
    f.vertices.push_back(sphere2[k]);
    f.values.push_back(2.0 * s / static_cast<double>(sphere2_links[k].size()));
  }
  return f;
}

ReducedForm assemble_reduced_form(const Graph& g, Vertex x) {
  if (!g.contains(x)) throw InputError("vertex " + std::to_string(x) + " out of range");
  if (g.degree(x) == 0) throw InputError("vertex " + std::to_string(x) + " is isolated");

  ReducedForm rf;
  rf.base = x;
  const auto dist = distances_from(g, x, 2);
  std::vector<std::size_t> pos(g.order(), 0);
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == 1) {
      pos[v] = rf.sphere1.size();
      rf.sphere1.push_back(static_cast<Vertex>(v));
    } else if (dist[v] == 2) {
      pos[v] = rf.sphere2.size();
      rf.sphere2.push_back(static_cast<Vertex>(v));
    }
  }
  rf.sphere2_links.resize(rf.sphere2.size());

  const std::size_t n = rf.sphere1.size();
  const double dx = static_cast<double>(n);
  SymMatrix m(n);

  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = rf.sphere1[i];
    // Square of the sum: all-ones matrix.
    for (std::size_t j = i; j < n; ++j) m.add(i, j, 1.0);
    // Degree correction.
    m.add(i, i, 0.5 * (4.0 - dx - static_cast<double>(g.degree(v))));
    for (Vertex w : g.neighbors(v)) {
      const int dw = dist[static_cast<std::size_t>(w)];
      if (dw == 1 && v < w) {
        // 2(y_v - y_w)^2 + 1/2 (y_v^2 + y_w^2)
        const std::size_t j = pos[static_cast<std::size_t>(w)];
        m.add(i, i, 2.5);
        m.add(j, j, 2.5);
        m.add(i, j, -2.0);
      } else if (dw == 2) {
        rf.sphere2_links[pos[static_cast<std::size_t>(w)]].push_back(i);
      }
    }
  }

  // Sphere-2 term after eliminating z_u: 2 sum y_v^2 - (2/n_u)(sum y_v)^2.
  for (const auto& links : rf.sphere2_links) {
    const double nu = static_cast<double>(links.size());
    for (std::size_t a = 0; a < links.size(); ++a) {
      m.add(links[a], links[a], 2.0);
      for (std::size_t b = a; b < links.size(); ++b) m.add(links[a], links[b], -2.0 / nu);
    }
  }
  rf.matrix = std::move(m);
  return rf;
}

CurvatureReport local_ricci(const Graph& g, Vertex x, const CurvatureOptions& opts) {
  const ReducedForm rf = assemble_reduced_form(g, x);
  EigenOptions eo;
  eo.tol = opts.eigen_tol;
  eo.vectors = true;
  const EigenResult eig = sym_eigen(rf.matrix, eo);

  // Gamma(f)(x) = 1/2 |y|^2 = 1, sign fixed so the largest-magnitude entry is positive.
  std::vector<double> y(eig.vector(0).begin(), eig.vector(0).end());
  double norm = 0.0;
  std::size_t peak = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    norm += y[i] * y[i];
    if (std::abs(y[i]) > std::abs(y[peak]) + 1e-12) peak = i;
  }
  const double scale = std::copysign(std::sqrt(2.0 / norm), y[peak]);
  for (double& v : y) v *= scale;

  CurvatureReport r;
  r.vertex = x;
  r.ricci = eig.values.front();
  r.minimizer = rf.extend(y);
  r.sphere1_size = rf.sphere1.size();
  r.sphere2_size = rf.sphere2.size();
  r.eigen_tol = opts.eigen_tol;
  return r;
}

std::vector<CurvatureReport> local_ricci_all(const Graph& g, const CurvatureOptions& opts) {
  std::vector<CurvatureReport> out;
  out.reserve(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) out.push_back(local_ricci(g, static_cast<Vertex>(v), opts));
  return out;
}

double global_ricci(const Graph& g, const GlobalRicciOptions& opts) {
  if (g.order() == 0) throw InputError("global Ricci curvature of an empty graph");
  if (opts.assume_transitive) return local_ricci(g, 0, opts.curvature).ricci;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < g.order(); ++v) {
    best = std::min(best, local_ricci(g, static_cast<Vertex>(v), opts.curvature).ricci);
  }
  return best;
}

double sphere2_energy(const Graph& g, VertexFunction f, Vertex x) {
  require_function(g, f, x);
  const auto dist = distances_from(g, x, 2);
  double acc = 0.0;
  for (Vertex v : g.neighbors(x)) {
    for (Vertex u : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(u)] != 2) continue;
      const double d = at(f, u) - 2.0 * at(f, v);
      acc += d * d;
    }
  }
  return acc;
}

double sphere1_pair_energy(const Graph& g, VertexFunction f, Vertex x) {
  require_function(g, f, x);
  const auto nbrs = g.neighbors(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const double d = at(f, nbrs[i]) - at(f, nbrs[j]);
      acc += d * d;
    }
  }
  return acc;
}

}  // namespace coxric
