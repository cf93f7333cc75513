// Acceptance criteria 1-10. One PASS/FAIL line per criterion on stdout;
// failure details on stderr. Usage: coxric_acceptance <path-to-coxric>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "coxric/coxeter.hpp"
#include "coxric/dihedral.hpp"
#include "coxric/gamma.hpp"
#include "coxric/graph.hpp"
#include "coxric/group.hpp"
#include "coxric/invariants.hpp"
#include "coxric/isoperimetry.hpp"
#include "coxric/report.hpp"
#include "coxric/rng.hpp"
#include "coxric/root_system.hpp"
#include "coxric/spectral.hpp"

using namespace coxric;

namespace {

using Clock = std::chrono::steady_clock;

struct Corpus {
  std::string spec;
  Group group;
  Graph bruhat;
};

const std::vector<std::string> kCorpus = {"A1", "A1xA1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3",
                                          "F4", "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"};

std::vector<Corpus>& corpus() {
  static std::vector<Corpus> groups = [] {
    std::vector<Corpus> out;
    for (const auto& spec : kCorpus) {
      Group g = generate_group(generate_roots(parse_spec(spec)));
      Graph b = bruhat_graph(g);
      out.push_back({spec, std::move(g), std::move(b)});
    }
    return out;
  }();
  return groups;
}

const Corpus& find(const std::string& spec) {
  for (const auto& c : corpus())
    if (c.spec == spec) return c;
  static std::vector<std::unique_ptr<Corpus>> extra;
  Group g = generate_group(generate_roots(parse_spec(spec)));
  Graph b = bruhat_graph(g);
  extra.push_back(std::make_unique<Corpus>(Corpus{spec, std::move(g), std::move(b)}));
  return *extra.back();
}

struct Criterion {
  int number;
  std::string title;
  bool pass = true;
  std::string summary;

  void fail(const std::string& detail) {
    if (pass) std::cerr << "criterion " << number << ":\n";
    pass = false;
    std::cerr << "  " << detail << '\n';
  }
  void expect(bool ok, const std::string& detail) {
    if (!ok) fail(detail);
  }
};

std::string num(double x) { return format_number(x); }

Graph random_graph_with_triangles(Rng& rng) {
  for (;;) {
    const std::size_t n = 8 + rng.below(9);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.uniform(0.0, 1.0) < 0.35) edges.emplace_back(Vertex(i), Vertex(j));
    Graph g(n, edges);
    if (triangle_stats(g).t_max > 0 && g.size() > 0) return g;
  }
}

Criterion global_curvature() {
  Criterion c{1, "global Ricci curvature of every corpus Bruhat graph is 2"};
  double worst = 0.0;
  double slowest = 0.0;
  for (const auto& g : corpus()) {
    const auto start = Clock::now();
    std::vector<double> values;
    if (g.spec == "F4") {
      values.push_back(global_ricci(g.bruhat, {.assume_transitive = true}));
      Rng rng(2024);
      for (int k = 0; k < 20; ++k) values.push_back(local_ricci(g.bruhat, Vertex(rng.below(g.bruhat.order()))).ricci);
    } else {
      for (const auto& r : local_ricci_all(g.bruhat)) values.push_back(r.ricci);
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    slowest = std::max(slowest, secs);
    const double lo = *std::min_element(values.begin(), values.end());
    for (double v : values) worst = std::max(worst, std::abs(v - 2.0));
    c.expect(std::abs(lo - 2.0) <= 1e-8, g.spec + ": global Ric = " + num(lo));
    c.expect(secs < 60.0, g.spec + ": took " + num(secs) + " s");
  }
  c.summary = std::to_string(corpus().size()) + " groups, max |Ric - 2| = " + num(worst) + ", slowest " +
              num(std::round(slowest * 100) / 100) + " s";
  return c;
}

Criterion spectral_gaps() {
  Criterion c{2, "spectral gap >= 2 on corpus groups up to 1200 elements; A2 = 3, I2(2) = 2"};
  double least = 1e300;
  std::size_t count = 0;
  for (const auto& g : corpus()) {
    if (g.group.order() > 1200) continue;
    const double gap = spectral_gap(g.bruhat).gap;
    least = std::min(least, gap);
    ++count;
    c.expect(gap >= 2.0 - 1e-8, g.spec + ": gap " + num(gap));
    if (g.spec == "A2") c.expect(std::abs(gap - 3.0) <= 1e-8, "A2: gap " + num(gap) + ", expected 3");
    if (g.spec == "I2(2)") c.expect(std::abs(gap - 2.0) <= 1e-8, "I2(2): gap " + num(gap) + ", expected 2");
  }
  c.summary = std::to_string(count) + " groups, least gap " + num(least);
  return c;
}

Criterion operator_equivalence() {
  Criterion c{3, "gamma2 closed form equals the definition (1e-10 relative)"};
  Rng rng(3);
  double worst = 0.0;
  std::size_t evaluations = 0;
  auto compare = [&](const Graph& g, const std::string& name, std::size_t functions) {
    std::vector<Vertex> usable;
    for (Vertex v = 0; std::size_t(v) < g.order(); ++v)
      if (g.degree(v) > 0) usable.push_back(v);
    for (std::size_t k = 0; k < functions; ++k) {
      const Vertex x = k == 0 ? usable.front() : usable[rng.below(usable.size())];
      std::vector<double> f = random_function(g.order(), rng);
      const double fx = f[std::size_t(x)];
      for (double& v : f) v -= fx;
      const double def = gamma2_def(g, f, x);
      const double closed = gamma2_formula(g, f, x);
      const double rel = std::abs(def - closed) / std::max(std::abs(def), std::abs(closed));
      worst = std::max(worst, rel);
      ++evaluations;
      c.expect(rel <= 1e-10, name + " at " + std::to_string(x) + ": " + num(def) + " vs " + num(closed));
    }
  };
  for (const auto& g : corpus()) compare(g.bruhat, g.spec, 100);
  for (int k = 0; k < 20; ++k) compare(random_graph_with_triangles(rng), "random graph " + std::to_string(k), 100);
  c.summary = std::to_string(corpus().size()) + " Bruhat graphs + 20 random graphs with triangles, " +
              std::to_string(evaluations) + " functions, max relative error " + num(worst);
  return c;
}

Criterion triangles() {
  Criterion c{4, "Bruhat graphs are triangle-free and Ric <= 2; Ric <= 2 + T/2 on K4, C6, Q3"};
  for (const auto& g : corpus()) {
    c.expect(triangle_stats(g.bruhat).t_max == 0, g.spec + ": T_max = " + std::to_string(triangle_stats(g.bruhat).t_max));
    const double ric = g.spec == "F4" ? global_ricci(g.bruhat, {.assume_transitive = true}) : global_ricci(g.bruhat);
    c.expect(ric <= 2.0 + 1e-8, g.spec + ": Ric " + num(ric) + " above 2");
  }
  std::string detail;
  const std::pair<const char*, Graph> tests[] = {{"K4", complete_graph(4)}, {"C6", cycle_graph(6)}, {"Q3", hypercube(3)}};
  for (const auto& [name, g] : tests) {
    const double t = double(triangle_stats(g).t_max);
    const double ric = global_ricci(g);
    c.expect(ric <= 2.0 + t / 2.0 + 1e-9, std::string(name) + ": Ric " + num(ric) + " > 2 + " + num(t) + "/2");
    detail += std::string(detail.empty() ? "" : ", ") + name + " Ric " + num(ric) + " <= " + num(2.0 + t / 2.0);
  }
  c.summary = "T_max = 0 on " + std::to_string(corpus().size()) + " groups; " + detail;
  return c;
}

Criterion non_coxeter() {
  Criterion c{5, "closed-form curvatures of K2, C4, C5, C6 and the center of P3"};
  const struct {
    const char* name;
    double value;
    double expected;
  } cases[] = {{"K2", global_ricci(complete_graph(2)), 2.0},
               {"C4", global_ricci(cycle_graph(4)), 2.0},
               {"C5", global_ricci(cycle_graph(5)), 0.0},
               {"C6", global_ricci(cycle_graph(6)), 0.0},
               {"P3 center", local_ricci(path_graph(3), 1).ricci, 0.5}};
  std::string detail;
  for (const auto& k : cases) {
    c.expect(std::abs(k.value - k.expected) <= 1e-9, std::string(k.name) + ": " + num(k.value));
    detail += std::string(detail.empty() ? "" : ", ") + k.name + " " + num(k.value);
  }
  c.summary = detail;
  return c;
}

Criterion isoperimetry() {
  Criterion c{6, "isoperimetric inequality: exhaustive up to 12 elements, sampled beyond"};
  std::size_t subsets = 0;
  double tightest = 1e300;
  auto run = [&](const std::string& spec, IsoMode mode) {
    const auto& g = find(spec);
    IsoOptions opts;
    opts.mode = mode;
    opts.seed = 42;
    opts.samples = 10'000;
    opts.stratified = true;
    opts.ricci = 2.0;
    opts.check_bruhat_bound = true;
    const auto s = verify_isoperimetry(g.bruhat, opts);
    subsets += s.reports.size();
    if (const auto* t = s.tightest()) tightest = std::min(tightest, t->slack);
    c.expect(s.failures() == 0, spec + ": " + std::to_string(s.failures()) + " failing subsets");
    if (mode == IsoMode::exhaustive)
      c.expect(s.reports.size() == (std::size_t(1) << g.bruhat.order()), spec + ": not every subset checked");
  };
  for (const char* spec : {"A1", "A1xA1", "A2", "I2(4)", "I2(5)", "I2(6)"}) run(spec, IsoMode::exhaustive);
  for (const char* spec : {"A3", "B3", "D4", "H3", "A4"}) run(spec, IsoMode::sampled);
  c.summary = std::to_string(subsets) + " subsets, least slack " + num(tightest);
  return c;
}

Criterion structure() {
  Criterion c{7, "dihedral structure of the 2-sphere; B4 class of orthogonal short-root reflections"};
  std::size_t classes_seen = 0;
  for (const char* spec : {"A2", "A3", "B3", "B4", "D4", "H3", "F4"}) {
    const auto& g = find(spec);
    const auto rep = verify_structure(g.group);
    classes_seen += rep.classes.size();
    for (const auto& chk : rep.checks)
      for (const auto& ce : chk.counterexamples) c.fail(std::string(spec) + " " + chk.name + ": " + ce);
    c.expect(rep.pass(), std::string(spec) + ": structure checks fail");
    for (const char* name : {"partition", "dihedral", "maximality", "pair_rigidity", "pair_uniqueness"})
      c.expect(rep.check(name) && rep.check(name)->checked > 0, std::string(spec) + ": check " + name + " missing");
  }
  const auto& b4 = find("B4").group;
  const ElementId t1 = b4.simple()[3];
  const ElementId t2 = b4.multiply(b4.multiply(b4.simple()[2], b4.simple()[3]), b4.simple()[2]);
  const ElementId u = b4.multiply(t1, t2);
  const auto cls = classes(b4);
  const auto it = std::find_if(cls.begin(), cls.end(), [&](const SphereClass& k) {
    return std::binary_search(k.members.begin(), k.members.end(), u);
  });
  if (it == cls.end()) {
    c.fail("B4: product of orthogonal short-root reflections is not in the 2-sphere");
  } else {
    c.expect(it->members.size() == 3, "B4 class size " + std::to_string(it->members.size()));
    c.expect(it->subgroup.reflections.size() == 4, "B4 class subgroup has " +
                                                       std::to_string(it->subgroup.reflections.size()) + " reflections");
    c.expect(it->subgroup.order() == 8, "B4 class subgroup order " + std::to_string(it->subgroup.order()));
    c.expect(it->involution_in_larger_dihedral, "B4 order-8 discrepancy not flagged");
  }
  c.summary = "7 groups, " + std::to_string(classes_seen) + " classes; B4 class size 3, 4 reflections, order 8 (flagged)";
  return c;
}

Criterion energy_estimates() {
  Criterion c{8, "dihedral and general estimates on 1000 functions with f(e) = 0"};
  Rng rng(8);
  double least = 1e300;
  for (const char* spec : {"I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "A2", "A3", "B3"}) {
    const auto& g = find(spec);
    const Vertex e = g.group.identity();
    std::vector<EstimateStats> stats;
    stats.push_back(check_general_estimate(g.bruhat, e, 1000, rng));
    if (g.group.rank() == 2) stats.push_back(check_dihedral_estimate(g.bruhat, e, 1000, rng));
    stats.push_back(check_class_estimate(g.group, classes(g.group), 1000, rng));
    for (const auto& s : stats) {
      least = std::min(least, s.min_slack);
      c.expect(s.tally.pass() && s.min_slack >= -1e-9, std::string(spec) + " " + s.tally.name + ": min slack " +
                                                            num(s.min_slack));
      c.expect(s.tally.checked >= 1000, std::string(spec) + " " + s.tally.name + ": too few evaluations");
    }
  }
  c.summary = "9 groups, least slack " + num(least);
  return c;
}

Criterion locality_and_symmetry() {
  Criterion c{9, "two-ball locality on A3, B3; vertex-uniform local curvature on the corpus"};
  std::size_t local_checks = 0;
  for (const char* spec : {"A3", "B3"}) {
    const auto& g = find(spec);
    for (Vertex x = 0; std::size_t(x) < g.bruhat.order(); ++x) {
      const auto local = two_ball_subgraph(g.bruhat, x);
      const double full = local_ricci(g.bruhat, x).ricci;
      const double sub = local_ricci(local.graph, 0).ricci;
      ++local_checks;
      c.expect(std::abs(full - sub) <= 1e-9, std::string(spec) + " vertex " + std::to_string(x) + ": " + num(full) +
                                                  " vs " + num(sub));
    }
  }
  double spread = 0.0;
  std::size_t vertices = 0;
  for (const auto& g : corpus()) {
    const auto all = local_ricci_all(g.bruhat);
    double lo = all.front().ricci, hi = lo;
    for (const auto& r : all) {
      lo = std::min(lo, r.ricci);
      hi = std::max(hi, r.ricci);
    }
    vertices += all.size();
    spread = std::max(spread, hi - lo);
    c.expect(hi - lo <= 1e-9, g.spec + ": local curvatures spread " + num(hi - lo));
  }
  c.summary = std::to_string(local_checks) + " locality checks, " + std::to_string(vertices) +
              " vertices, max spread " + num(spread);
  return c;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Criterion determinism(const std::string& binary) {
  Criterion c{10, "two runs of `coxric check A3 --seed 7 --json` are byte-identical"};
  if (binary.empty()) {
    c.fail("path to the coxric binary not given");
    return c;
  }
  const std::string cmd = "\"" + binary + "\" check A3 --seed 7 --json";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  c.expect(s1 == 0 && s2 == 0, "exit status " + std::to_string(s1) + ", " + std::to_string(s2));
  c.expect(!a.empty(), "empty output");
  c.expect(a == b, "outputs differ");
  c.summary = std::to_string(a.size()) + " bytes, identical";
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  std::vector<Criterion (*)()> steps = {global_curvature,    spectral_gaps, operator_equivalence,
                                        triangles,       non_coxeter,   isoperimetry,
                                        structure,       energy_estimates, locality_and_symmetry};
  int failures = 0;
  auto report = [&](const Criterion& c) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " [" << c.summary
              << "]" << std::endl;
    failures += !c.pass;
  };
  for (auto step : steps) {
    try {
      report(step());
    } catch (const std::exception& e) {
      Criterion c{int(&step - steps.data()) + 1, "exception"};
      c.fail(e.what());
      c.summary = e.what();
      report(c);
    }
  }
  report(determinism(binary));
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
