#include "coxric/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "coxric/errors.hpp"

namespace coxric {

SymMatrix laplacian(const Graph& g) {
  SymMatrix m(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) m.set(v, v, static_cast<double>(g.degree(static_cast<Vertex>(v))));
  for (const auto& [u, v] : g.edges()) m.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), -1.0);
  return m;
}

SpectralReport spectral_gap(const Graph& g, const SpectralOptions& opts) {
  if (g.order() == 0) throw InputError("spectral gap of an empty graph");
  const std::size_t limit = opts.force ? kSpectralForcedMaxOrder : kSpectralMaxOrder;
  if (g.order() > limit) {
    throw InputError("graph with " + std::to_string(g.order()) +
                     " vertices exceeds the spectral size limit of " + std::to_string(limit) +
                     (opts.force ? "" : " (use --force)"));
  }
  EigenOptions eo;
  eo.tol = opts.eigen_tol;
  const EigenResult eig = sym_eigen(laplacian(g), eo);

  SpectralReport r;
  r.order = g.order();
  r.eigenvalues = eig.values;
  r.zero_threshold = 1e-8 * std::max(1.0, r.max_eigenvalue());
  r.components = connected_components(g);
  for (double x : r.eigenvalues) {
    if (x < r.zero_threshold) ++r.zero_multiplicity;
  }
  const auto it = std::find_if(r.eigenvalues.begin(), r.eigenvalues.end(),
                               [&](double x) { return x >= r.zero_threshold; });
  if (it == r.eigenvalues.end()) {
    r.warnings.push_back("no nonzero eigenvalue (edgeless graph)");
    r.gap = 0.0;
  } else {
    r.gap = *it;
  }
  if (r.components > 1) {
    r.warnings.push_back("graph is disconnected (" + std::to_string(r.components) + " components)");
  }
  if (r.zero_multiplicity != r.components) {
    r.warnings.push_back("zero-eigenvalue multiplicity differs from the component count");
  }
  return r;
}

GapVerdict check_gap_vs_ricci(const SpectralReport& report, double ricci) {
  GapVerdict v;
  v.gap = report.gap;
  v.ricci = ricci;
  v.vacuous = ricci <= 0.0;
  v.pass = v.vacuous || report.gap >= ricci - 1e-8;
  v.equality = !v.vacuous && std::abs(report.gap - ricci) <= 1e-8;
  return v;
}

GapVerdict check_gap_vs_ricci(const Graph& g, double ricci, const SpectralOptions& opts) {
  return check_gap_vs_ricci(spectral_gap(g, opts), ricci);
}

}  // namespace coxric
