#include "coxric/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coxric/dihedral.hpp"
#include "coxric/gamma.hpp"
#include "coxric/isoperimetry.hpp"
#include "coxric/spectral.hpp"

namespace coxric {

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1.0});
}

std::vector<double> random_function(std::size_t order, Rng& rng) {
  std::vector<double> f(order);
  for (double& x : f) x = rng.uniform(-1.0, 1.0);
  return f;
}

std::vector<CheckTally> check_operator_equivalence(const Graph& g, const std::vector<Vertex>& at,
                                                   std::size_t functions, Rng& rng) {
  CheckTally formula{"gamma2_formula_vs_def"};
  CheckTally shift{"constant_shift_invariance"};
  CheckTally triangle_free{"triangle_free_formula"};
  const bool no_triangles = triangle_stats(g).t_max == 0;

  for (Vertex x : at) {
    for (std::size_t k = 0; k < functions; ++k) {
      std::vector<double> f = random_function(g.order(), rng);
      const double c = rng.uniform(-5.0, 5.0);
      std::vector<double> shifted(f);
      for (double& v : shifted) v += c;
      const double base = gamma2_def(g, f, x);
      const double moved = gamma2_def(g, shifted, x);
      const double gam = gamma_op(g, f, f, x);
      const double gam_moved = gamma_op(g, shifted, shifted, x);
      shift.record(close_rel(base, moved, 1e-10) && close_rel(gam, gam_moved, 1e-10),
                   "vertex " + std::to_string(x) + ": shift changes Gamma_2 " + std::to_string(base) +
                       " -> " + std::to_string(moved));

      const double fx = f[static_cast<std::size_t>(x)];
      for (double& v : f) v -= fx;
      const double def = gamma2_def(g, f, x);
      const double closed = gamma2_formula(g, f, x);
      formula.record(close_rel(def, closed, 1e-10), "vertex " + std::to_string(x) + ": definition " +
                                                        std::to_string(def) + " vs closed form " +
                                                        std::to_string(closed));
      if (no_triangles) {
        const double reduced = gamma2_formula(g, f, x, TriangleTerm::omit);
        triangle_free.record(close_rel(def, reduced, 1e-10),
                             "vertex " + std::to_string(x) + ": triangle-free form " + std::to_string(reduced));
      }
    }
  }
  std::vector<CheckTally> out{formula, shift};
  if (no_triangles) out.push_back(triangle_free);
  return out;
}

namespace {

template <typename Rhs>
EstimateStats estimate(const Graph& g, Vertex x, std::size_t functions, Rng& rng, const char* name, Rhs rhs) {
  EstimateStats s{CheckTally{name}, std::numeric_limits<double>::infinity()};
  for (std::size_t k = 0; k < functions; ++k) {
    std::vector<double> f = random_function(g.order(), rng);
    f[static_cast<std::size_t>(x)] = 0.0;
    const double lhs_full = sphere2_energy(g, f, x);
    const double pairs = sphere1_pair_energy(g, f, x);
    const double slack = rhs(lhs_full, pairs);
    s.min_slack = std::min(s.min_slack, slack);
    s.tally.record(slack >= -1e-9, "slack " + std::to_string(slack));
  }
  if (functions == 0) s.min_slack = 0.0;
  return s;
}

}  // namespace

EstimateStats check_general_estimate(const Graph& g, Vertex x, std::size_t functions, Rng& rng) {
  return estimate(g, x, functions, rng, "general_estimate",
                  [](double e, double p) { return 0.5 * e - p; });
}

EstimateStats check_dihedral_estimate(const Graph& g, Vertex x, std::size_t functions, Rng& rng) {
  const double n = static_cast<double>(g.degree(x));
  return estimate(g, x, functions, rng, "dihedral_estimate",
                  [n](double e, double p) { return e - (4.0 / n) * (n - 1.0) * p; });
}

EstimateStats check_class_estimate(const Group& grp, const std::vector<SphereClass>& classes,
                                   std::size_t functions, Rng& rng) {
  EstimateStats s{CheckTally{"class_estimate"}, std::numeric_limits<double>::infinity()};
  struct Prepared {
    std::vector<std::pair<ElementId, std::vector<ElementId>>> links;
    double n = 0.0;
  };
  std::vector<Prepared> prepared;
  for (const auto& c : classes) {
    Prepared p;
    for (ElementId u : c.members) p.links.emplace_back(u, common_neighbours_with_identity(grp, u));
    const std::size_t n = p.links.front().second.size();
    for (const auto& [u, common] : p.links)
      s.tally.expect(common.size() == n, [&] {
        return "class of " + std::to_string(c.representative) + ": n_u varies (" + std::to_string(n) + " vs " +
               std::to_string(common.size()) + " at " + std::to_string(u) + ")";
      });
    p.n = static_cast<double>(n);
    prepared.push_back(std::move(p));
  }
  for (std::size_t k = 0; k < functions; ++k) {
    std::vector<double> f = random_function(grp.order(), rng);
    f[static_cast<std::size_t>(grp.identity())] = 0.0;
    const auto at = [&f](ElementId w) { return f[static_cast<std::size_t>(w)]; };
    for (std::size_t c = 0; c < classes.size(); ++c) {
      double lhs = 0.0;
      for (const auto& [u, common] : prepared[c].links)
        for (ElementId v : common) lhs += (at(u) - 2.0 * at(v)) * (at(u) - 2.0 * at(v));
      const auto& refl = classes[c].subgroup.reflections;
      double pairs = 0.0;
      for (std::size_t i = 0; i < refl.size(); ++i)
        for (std::size_t j = i + 1; j < refl.size(); ++j) pairs += (at(refl[i]) - at(refl[j])) * (at(refl[i]) - at(refl[j]));
      const double n = prepared[c].n;
      const double slack = lhs - 4.0 * (n - 1.0) / n * pairs;
      s.min_slack = std::min(s.min_slack, slack);
      s.tally.expect(slack >= -1e-9, [&] {
        return "class of " + std::to_string(classes[c].representative) + ": slack " + std::to_string(slack);
      });
    }
  }
  if (functions == 0 || classes.empty()) s.min_slack = 0.0;
  return s;
}

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.pass(); });
}

SuiteReport run_invariant_suite(const Group& grp, const SuiteOptions& opts) {
  SuiteReport rep;
  Rng rng(opts.seed);
  const std::size_t order = grp.order();
  const auto& T = grp.reflections();
  const auto e = grp.identity();

  // Group structure.
  CheckTally refl{"reflections"};
  refl.record(T.size() == grp.roots().positive_count(), "|T| differs from the positive root count");
  for (ElementId t : T) {
    refl.record(grp.multiply(t, t) == e && grp.length(t) % 2 == 1,
                "reflection " + std::to_string(t) + " is not an odd-length involution");
  }
  CheckTally assoc{"composition"};
  for (std::size_t k = 0; k < 200; ++k) {
    const auto a = static_cast<ElementId>(rng.below(order));
    const auto b = static_cast<ElementId>(rng.below(order));
    const auto c = static_cast<ElementId>(rng.below(order));
    const bool ok = grp.multiply(grp.multiply(a, b), c) == grp.multiply(a, grp.multiply(b, c)) &&
                    grp.multiply(a, grp.inverse(a)) == e;
    assoc.record(ok, "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
  }
  rep.checks.push_back(refl);
  rep.checks.push_back(assoc);

  // Bruhat graph shape.
  const Graph b = bruhat_graph(grp);
  CheckTally regular{"bruhat_regular"};
  for (std::size_t v = 0; v < order; ++v) {
    regular.record(b.degree(static_cast<Vertex>(v)) == T.size(), "vertex " + std::to_string(v) + " has degree " +
                                                                    std::to_string(b.degree(static_cast<Vertex>(v))));
  }
  CheckTally connected{"bruhat_connected"};
  connected.record(connected_components(b) == 1, "Bruhat graph is disconnected");
  CheckTally parity{"bruhat_length_parity"};
  for (const auto& [u, v] : b.edges()) {
    parity.record((grp.length(u) + grp.length(v)) % 2 == 1,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " joins equal parities");
  }
  const TriangleStats tri = triangle_stats(b);
  CheckTally triangle_free{"triangle_free"};
  triangle_free.record(tri.t_max == 0, "T_max = " + std::to_string(tri.t_max));
  CheckTally translation{"left_translation_invariance"};
  for (std::size_t k = 0; k < 20; ++k) {
    const auto gel = static_cast<ElementId>(rng.below(order));
    bool ok = true;
    for (const auto& [u, v] : b.edges()) ok = ok && b.has_edge(grp.multiply(gel, u), grp.multiply(gel, v));
    translation.record(ok, "left translation by " + std::to_string(gel) + " breaks an edge");
  }
  for (auto* c : {&regular, &connected, &parity, &triangle_free, &translation}) rep.checks.push_back(*c);

  // Curvature.
  CurvatureOptions co;
  co.eigen_tol = opts.eigen_tol;
  const auto reports = local_ricci_all(b, co);
  CheckTally value{"ricci_equals_2"};
  CheckTally uniform{"ricci_vertex_uniform"};
  CheckTally certificate{"minimizer_certificate"};
  CheckTally locality{"two_ball_locality"};
  CheckTally upper{"ricci_upper_bound"};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& r : reports) {
    lo = std::min(lo, r.ricci);
    hi = std::max(hi, r.ricci);
    value.record(std::abs(r.ricci - 2.0) <= 1e-8,
                 "Ric at " + std::to_string(r.vertex) + " = " + std::to_string(r.ricci));
    const auto f = r.minimizer.to_dense(order);
    const double ratio = gamma2_def(b, f, r.vertex) / gamma_op(b, f, f, r.vertex);
    certificate.record(std::abs(ratio - r.ricci) <= 1e-8,
                       "minimizer at " + std::to_string(r.vertex) + " gives ratio " + std::to_string(ratio));
  }
  uniform.record(hi - lo <= 1e-9, "local curvatures span [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  upper.record(lo <= 2.0 + 0.5 * tri.t_max + 1e-9, "global Ric exceeds 2 + T/2");
  const std::size_t local_checks = std::min<std::size_t>(order, 24);
  for (std::size_t k = 0; k < local_checks; ++k) {
    const auto x = static_cast<Vertex>(order <= 24 ? k : rng.below(order));
    const LocalGraph lg = two_ball_subgraph(b, x);
    const double sub = local_ricci(lg.graph, 0, co).ricci;
    locality.record(std::abs(sub - reports[static_cast<std::size_t>(x)].ricci) <= 1e-9,
                    "two-ball curvature at " + std::to_string(x) + " = " + std::to_string(sub));
  }
  for (auto* c : {&value, &uniform, &certificate, &locality, &upper}) rep.checks.push_back(*c);

  // Operator identities at the identity and a few random vertices.
  std::vector<Vertex> at{e};
  for (std::size_t k = 0; k < 3 && order > 1; ++k) at.push_back(static_cast<Vertex>(rng.below(order)));
  for (auto& c : check_operator_equivalence(b, at, opts.functions, rng)) rep.checks.push_back(std::move(c));

  // Energy estimates at the identity.
  const auto general = check_general_estimate(b, e, opts.estimate_functions, rng);
  rep.checks.push_back(general.tally);
  const bool dihedral_group = grp.rank() == 2 && grp.roots().matrix()(0, 1) >= 2;
  if (dihedral_group) rep.checks.push_back(check_dihedral_estimate(b, e, opts.estimate_functions, rng).tally);

  // Spectrum.
  nlohmann::json spectral = nullptr;
  const std::size_t spectral_limit = opts.force ? kSpectralForcedMaxOrder : kSpectralMaxOrder;
  double lambda = 0.0;
  if (order <= spectral_limit) {
    SpectralOptions so;
    so.eigen_tol = opts.eigen_tol;
    so.force = opts.force;
    const SpectralReport sr = spectral_gap(b, so);
    lambda = sr.gap;
    CheckTally gap{"spectral_gap_at_least_2"};
    gap.record(sr.gap >= 2.0 - 1e-8, "gap = " + std::to_string(sr.gap));
    CheckTally zero{"laplacian_zero_multiplicity"};
    zero.record(sr.zero_multiplicity == 1, "zero multiplicity " + std::to_string(sr.zero_multiplicity));
    CheckTally trace{"laplacian_trace"};
    trace.record(std::abs(laplacian(b).trace() - 2.0 * static_cast<double>(b.size())) == 0.0, "trace != 2|E|");
    const GapVerdict gv = check_gap_vs_ricci(sr, lo);
    CheckTally versus{"gap_vs_ricci"};
    versus.record(gv.pass, "gap " + std::to_string(gv.gap) + " below Ric " + std::to_string(gv.ricci));
    for (auto* c : {&gap, &zero, &trace, &versus}) rep.checks.push_back(*c);
    spectral = {{"gap", sr.gap}, {"max", sr.max_eigenvalue()}, {"zero_multiplicity", sr.zero_multiplicity}};
  } else {
    rep.notes.push_back("spectral checks skipped: " + std::to_string(order) + " vertices exceed the limit");
  }

  // Isoperimetry.
  nlohmann::json iso = nullptr;
  if (lambda > 0.0) {
    IsoOptions io;
    io.mode = order <= 12 ? IsoMode::exhaustive : IsoMode::sampled;
    io.seed = opts.seed;
    io.samples = opts.samples;
    io.lambda = lambda;
    io.ricci = lo;
    const IsoSummary s = verify_isoperimetry(b, io);
    CheckTally iso_check{"isoperimetry"};
    for (const auto& r : s.reports) {
      iso_check.expect(r.pass, [&] {
        return "subset of size " + std::to_string(r.size) + " has boundary " + std::to_string(r.boundary);
      });
    }
    rep.checks.push_back(iso_check);
    iso = {{"mode", io.mode == IsoMode::exhaustive ? "exhaustive" : "sampled"},
           {"subsets", s.reports.size()},
           {"failures", s.failures()}};
    if (const IsoReport* t = s.tightest()) iso["min_slack"] = t->slack;
  }

  // Reflection-subgroup structure of the 2-sphere.
  const StructureReport st = verify_structure(grp);
  for (const auto& c : st.checks) rep.checks.push_back(c);
  for (const auto& n : st.notes) rep.notes.push_back(n);
  const auto per_class = check_class_estimate(grp, st.classes, opts.estimate_functions, rng);
  rep.checks.push_back(per_class.tally);
  const FactorizationReport dy = verify_reflection_factorizations(grp, opts.samples, opts.seed);
  rep.checks.push_back(dy.dihedral);

  rep.summary = {{"order", order},
                 {"reflections", T.size()},
                 {"edges", b.size()},
                 {"t_max", tri.t_max},
                 {"ricci_min", lo},
                 {"ricci_max", hi},
                 {"sphere2", st.sphere2_size},
                 {"classes", st.classes.size()},
                 {"general_estimate_min_slack", general.min_slack},
                 {"class_estimate_min_slack", per_class.min_slack},
                 {"factorization_quadruples", dy.quadruples},
                 {"factorization_exhaustive", dy.exhaustive},
                 {"spectral", spectral},
                 {"isoperimetry", iso}};
  return rep;
}

}  // namespace coxric
