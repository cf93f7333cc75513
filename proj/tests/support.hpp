#pragma once

#include <cmath>
#include <string_view>
#include <vector>

#include "coxric/coxeter.hpp"
#include "coxric/gamma.hpp"
#include "coxric/graph.hpp"
#include "coxric/group.hpp"
#include "coxric/linalg.hpp"
#include "coxric/rng.hpp"
#include "coxric/root_system.hpp"

namespace coxric::testing {

inline Group make_group(std::string_view spec) { return generate_group(generate_roots(parse_spec(spec))); }

inline Graph make_graph(std::size_t order, std::vector<Edge> edges) { return Graph(order, edges); }

// Erdos-Renyi graph G(n, p).
inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform(0.0, 1.0) < p) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, edges);
}

// Solves a x = b by Gaussian elimination with partial pivoting; a is row-major.
inline std::vector<double> solve(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
    for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[p * n + k]);
    std::swap(b[c], b[p]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
    x[i] = s / a[i * n + i];
  }
  return x;
}

// Determinant by cofactor expansion along the first row.
inline double cofactor_det(const std::vector<double>& a, std::size_t n) {
  if (n == 1) return a[0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<double> minor;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) minor.push_back(a[r * n + k]);
    det += (c % 2 ? -1.0 : 1.0) * a[c] * cofactor_det(minor, n - 1);
  }
  return det;
}

// Local Ricci curvature from gamma2_def alone: polarize Gamma_2 at x into a
// matrix over B(1,x) u B(2,x), eliminate the B(2,x) block (Schur complement)
// and use Gamma(f)(x) = 1/2 |f|^2 on B(1,x) when f(x) = 0.
inline double brute_force_ricci(const Graph& g, Vertex x) {
  std::vector<Vertex> s1;
  std::vector<Vertex> s2;
  const auto dist = distances_from(g, x, 2);
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
    if (dist[static_cast<std::size_t>(v)] == 1) s1.push_back(v);
    if (dist[static_cast<std::size_t>(v)] == 2) s2.push_back(v);
  }
  std::vector<Vertex> local(s1);
  local.insert(local.end(), s2.begin(), s2.end());
  const std::size_t n = local.size();
  auto q = [&](std::size_t i, std::size_t j) {
    std::vector<double> f(g.order(), 0.0);
    f[static_cast<std::size_t>(local[i])] += 1.0;
    f[static_cast<std::size_t>(local[j])] += 1.0;
    return gamma2_def(g, f, x);
  };
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = q(i, i) / 4.0;
  std::vector<double> full(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    full[i * n + i] = diag[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = (q(i, j) - diag[i] - diag[j]) / 2.0;
      full[i * n + j] = full[j * n + i] = v;
    }
  }
  const std::size_t a = s1.size();
  const std::size_t b = s2.size();
  std::vector<double> schur(a * a);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) schur[i * a + j] = full[i * n + j];
  if (b > 0) {
    std::vector<double> qbb(b * b);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) qbb[i * b + j] = full[(a + i) * n + a + j];
    for (std::size_t j = 0; j < a; ++j) {
      std::vector<double> col(b);
      for (std::size_t i = 0; i < b; ++i) col[i] = full[(a + i) * n + j];
      const auto sol = solve(qbb, col);
      for (std::size_t i = 0; i < a; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < b; ++k) s += full[i * n + a + k] * sol[k];
        schur[i * a + j] -= s;
      }
    }
  }
  const auto eig = sym_eigen(SymMatrix::from_dense(a, schur), {.method = EigenMethod::jacobi});
  return 2.0 * eig.values.front();
}

}  // namespace coxric::testing
