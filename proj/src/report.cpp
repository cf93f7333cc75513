#include "coxric/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace coxric {

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

void round_floats(nlohmann::json& j) {
  if (j.is_number_float()) {
    j = round_significant(j.get<double>());
  } else if (j.is_array() || j.is_object()) {
    for (auto& v : j) round_floats(v);
  }
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round_significant(x));
  return buf;
}

nlohmann::json to_json(const LocalFunction& f) {
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < f.vertices.size(); ++i) values.push_back({f.vertices[i], f.values[i]});
  return {{"base", f.base}, {"values", std::move(values)}};
}

nlohmann::json to_json(const CurvatureReport& r, bool with_minimizer) {
  nlohmann::json j = {{"vertex", r.vertex},
                      {"ricci", r.ricci},
                      {"sphere1", r.sphere1_size},
                      {"sphere2", r.sphere2_size}};
  if (with_minimizer) j["minimizer"] = to_json(r.minimizer);
  return j;
}

nlohmann::json to_json(const SpectralReport& r, bool full_spectrum) {
  nlohmann::json j = {{"order", r.order},
                      {"gap", r.gap},
                      {"zero_threshold", r.zero_threshold},
                      {"zero_multiplicity", r.zero_multiplicity},
                      {"components", r.components},
                      {"min", r.eigenvalues.empty() ? 0.0 : r.eigenvalues.front()},
                      {"max", r.max_eigenvalue()},
                      {"warnings", r.warnings}};
  if (full_spectrum) j["eigenvalues"] = r.eigenvalues;
  return j;
}

nlohmann::json to_json(const GapVerdict& v) {
  return {{"pass", v.pass}, {"vacuous", v.vacuous}, {"equality", v.equality}, {"gap", v.gap}, {"ricci", v.ricci}};
}

std::vector<Vertex> subset_members(const IsoReport& r) {
  if (r.kind != SubsetKind::exhaustive) return r.members;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 64; ++v)
    if ((r.index >> v) & 1U) out.push_back(v);
  return out;
}

nlohmann::json to_json(const IsoReport& r) {
  nlohmann::json j = {{"kind", to_string(r.kind)},
                      {"index", r.index},
                      {"members", subset_members(r)},
                      {"size", r.size},
                      {"boundary", r.boundary},
                      {"curvature_bound", r.curvature_bound ? nlohmann::json(*r.curvature_bound) : nlohmann::json()},
                      {"bruhat_bound", r.bruhat_bound ? nlohmann::json(*r.bruhat_bound) : nlohmann::json()},
                      {"slack", r.slack},
                      {"pass", r.pass}};
  if (r.kind != SubsetKind::exhaustive) j["seed"] = r.seed;
  return j;
}

nlohmann::json to_json(const IsoSummary& s, bool all_reports) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : s.reports)
    if (all_reports || !r.pass) reports.push_back(to_json(r));
  const IsoReport* t = s.tightest();
  return {{"lambda", s.lambda},
          {"ricci", s.ricci},
          {"subsets", s.reports.size()},
          {"failures", s.failures()},
          {"tightest", t ? to_json(*t) : nlohmann::json()},
          {"reports", std::move(reports)}};
}

nlohmann::json to_json(const ReflectionSubgroup& h) {
  return {{"order", h.order()},
          {"dihedral_m", h.dihedral_m ? nlohmann::json(*h.dihedral_m) : nlohmann::json()},
          {"generators", h.generators},
          {"reflections", h.reflections},
          {"elements", h.elements}};
}

nlohmann::json to_json(const SphereClass& c) {
  return {{"representative", c.representative},
          {"members", c.members},
          {"size", c.members.size()},
          {"subgroup", to_json(c.subgroup)},
          {"saturated", c.saturated},
          {"involution_in_larger_dihedral", c.involution_in_larger_dihedral}};
}

nlohmann::json to_json(const CheckTally& c) {
  return {{"name", c.name},
          {"pass", c.pass()},
          {"checked", c.checked},
          {"failed", c.failed},
          {"counterexamples", c.counterexamples}};
}

nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) classes.push_back(to_json(c));
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"sphere2_size", r.sphere2_size},
          {"class_count", r.classes.size()},
          {"classes", std::move(classes)},
          {"checks", std::move(checks)},
          {"notes", r.notes},
          {"pass", r.pass()}};
}

nlohmann::json to_json(const FactorizationReport& r) {
  return {{"exhaustive", r.exhaustive}, {"quadruples", r.quadruples}, {"check", to_json(r.dihedral)}};
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"summary", r.summary}, {"checks", std::move(checks)}, {"notes", r.notes}, {"pass", r.pass()}};
}

void write_iso_csv(std::ostream& out, const IsoSummary& s) {
  out << "kind,index,size,boundary,curvature_bound,bruhat_bound,slack,pass\n";
  for (const auto& r : s.reports) {
    out << to_string(r.kind) << ',' << r.index << ',' << r.size << ',' << r.boundary << ','
        << (r.curvature_bound ? format_number(*r.curvature_bound) : "") << ','
        << (r.bruhat_bound ? format_number(*r.bruhat_bound) : "") << ',' << format_number(r.slack)
        << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  }
}

}  // namespace coxric
