#include "coxric/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "coxric/coxeter.hpp"
#include "coxric/dihedral.hpp"
#include "coxric/errors.hpp"
#include "coxric/gamma.hpp"
#include "coxric/group.hpp"
#include "coxric/invariants.hpp"
#include "coxric/isoperimetry.hpp"
#include "coxric/report.hpp"
#include "coxric/root_system.hpp"
#include "coxric/spectral.hpp"

namespace coxric {

nlohmann::json to_json(const RunConfig& cfg) {
  return {{"command", cfg.command},
          {"spec", cfg.spec},
          {"graph", cfg.graph_path},
          {"format", cfg.format},
          {"out", cfg.out},
          {"vertex", cfg.vertex},
          {"what", cfg.what},
          {"seed", cfg.seed},
          {"samples", cfg.samples},
          {"eigen_tol", cfg.eigen_tol},
          {"exhaustive", cfg.exhaustive},
          {"all", cfg.all},
          {"transitive", cfg.transitive},
          {"emit_minimizer", cfg.emit_minimizer},
          {"full_spectrum", cfg.full_spectrum},
          {"all_reports", cfg.all_reports},
          {"elements", cfg.elements},
          {"force", cfg.force}};
}

namespace {

constexpr double kVerdictTol = 1e-8;
constexpr std::size_t kInlineSpectrumMax = 64;

struct Input {
  std::optional<Group> group;
  Graph graph;
  std::string label;
};

// Thrown for valid syntax that the command cannot accept.
struct UsageError : InputError {
  using InputError::InputError;
};

Input load_input(const RunConfig& cfg, bool needs_group) {
  if (!cfg.spec.empty() && !cfg.graph_path.empty()) throw UsageError("give either a type spec or --graph, not both");
  Input in;
  if (!cfg.graph_path.empty()) {
    if (needs_group) throw UsageError("command '" + cfg.command + "' needs a Coxeter type, not a graph");
    in.graph = load_graph(cfg.graph_path);
    in.label = cfg.graph_path;
    return in;
  }
  if (cfg.spec.empty()) throw UsageError("missing type spec (or --graph <file>)");
  in.group.emplace(generate_group(generate_roots(parse_spec(cfg.spec))));
  in.label = cfg.spec;
  return in;
}

void guard_order(const RunConfig& cfg, std::size_t order) {
  if (order > kCliMaxOrder && !cfg.force)
    throw UsageError("graph has " + std::to_string(order) + " vertices (limit " + std::to_string(kCliMaxOrder) +
                     "); pass --force to proceed");
}

Graph graph_of(Input& in) {
  if (in.group) return bruhat_graph(*in.group);
  return std::move(in.graph);
}

Vertex parse_vertex(const std::string& text, std::size_t order) {
  if (text == "e") return 0;
  long long v = -1;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < 0 || static_cast<std::size_t>(v) >= order)
    throw UsageError("invalid vertex '" + text + "' (use e or an id below " + std::to_string(order) + ")");
  return static_cast<Vertex>(v);
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format '" + cfg.format + "' is not available for '" + cfg.command + "'");
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

struct Table {
  std::vector<std::pair<std::string, std::string>> rows;

  void add(std::string key, std::string value) { rows.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, double value) { add(std::move(key), format_number(value)); }

  void write(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
};

void write_header(std::ostream& out, const RunConfig& cfg, const char* prefix = "# ") {
  out << prefix << "config " << to_json(cfg).dump() << '\n';
}

void write_json(std::ostream& out, const RunConfig& cfg, nlohmann::json body) {
  nlohmann::json doc = {{"config", to_json(cfg)}};
  for (auto& [k, v] : body.items()) doc[k] = std::move(v);
  round_floats(doc);
  out << doc.dump(2) << '\n';
}

void write_checks(std::ostream& out, const std::vector<CheckTally>& checks) {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    out << verdict(c.pass()) << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << c.checked
        << " checked, " << c.failed << " failed\n";
    for (const auto& ce : c.counterexamples) out << "      " << ce << '\n';
  }
}

int cmd_group(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"table", "json", "dot"});
  Input in = load_input(cfg, true);
  const Group& grp = *in.group;
  if (cfg.format == "dot") {
    write_header(out, cfg, "// ");
    out << bruhat_dot(grp);
    return 0;
  }
  const int max_len = *std::max_element(grp.lengths().begin(), grp.lengths().end());
  std::vector<std::size_t> histogram(static_cast<std::size_t>(max_len) + 1, 0);
  for (int l : grp.lengths()) ++histogram[static_cast<std::size_t>(l)];

  if (cfg.format == "json") {
    nlohmann::json body = {{"input", in.label},
                           {"rank", grp.rank()},
                           {"order", grp.order()},
                           {"reflections", grp.reflections().size()},
                           {"roots", grp.roots().size()},
                           {"longest_length", max_len},
                           {"length_histogram", histogram},
                           {"matrix", to_json(grp.roots().matrix())}};
    if (cfg.elements) body["group"] = to_json(grp, false);
    write_json(out, cfg, std::move(body));
    return 0;
  }
  write_header(out, cfg);
  Table t;
  t.add("input", in.label);
  t.add("rank", grp.rank());
  t.add("order", grp.order());
  t.add("reflections", grp.reflections().size());
  t.add("roots", grp.roots().size());
  t.add("longest length", static_cast<std::size_t>(max_len));
  std::string hist;
  for (std::size_t l = 0; l < histogram.size(); ++l)
    hist += (l ? " " : "") + std::to_string(l) + ":" + std::to_string(histogram[l]);
  t.add("lengths", hist);
  t.write(out);
  return 0;
}

int cmd_ricci(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"table", "json", "csv"});
  if (!cfg.vertex.empty() && cfg.all) throw UsageError("--vertex and --all are exclusive");
  Input in = load_input(cfg, false);
  const bool coxeter = in.group.has_value();
  const Graph g = graph_of(in);
  if (g.order() == 0) throw InputError("empty graph");
  // A single vertex is always cheap; everything else is guarded.
  const bool single = !cfg.vertex.empty() || (cfg.transitive && !cfg.all);
  if (!single) guard_order(cfg, g.order());
  if (cfg.transitive && !coxeter) throw UsageError("--transitive needs a Coxeter type");

  const CurvatureOptions copts{cfg.eigen_tol};
  std::vector<CurvatureReport> reports;
  if (!cfg.vertex.empty()) {
    reports.push_back(local_ricci(g, parse_vertex(cfg.vertex, g.order()), copts));
  } else if (single) {
    reports.push_back(local_ricci(g, 0, copts));
  } else {
    reports = local_ricci_all(g, copts);
  }
  double lo = reports.front().ricci;
  double hi = lo;
  for (const auto& r : reports) {
    lo = std::min(lo, r.ricci);
    hi = std::max(hi, r.ricci);
  }
  // Graph inputs carry no expected value.
  const bool pass = !coxeter || (std::abs(lo - 2.0) <= kVerdictTol && std::abs(hi - 2.0) <= kVerdictTol);

  if (cfg.format == "csv") {
    write_header(out, cfg);
    out << "vertex,ricci,sphere1,sphere2\n";
    for (const auto& r : reports)
      out << r.vertex << ',' << format_number(r.ricci) << ',' << r.sphere1_size << ',' << r.sphere2_size << '\n';
  } else if (cfg.format == "json") {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& r : reports) vertices.push_back(to_json(r, cfg.emit_minimizer));
    write_json(out, cfg,
               {{"input", in.label},
                {"order", g.order()},
                {"evaluated", reports.size()},
                {"global", lo},
                {"min", lo},
                {"max", hi},
                {"verdict", coxeter ? nlohmann::json(verdict(pass)) : nlohmann::json()},
                {"vertices", std::move(vertices)}});
  } else {
    write_header(out, cfg);
    Table t;
    t.add("input", in.label);
    t.add("vertices", g.order());
    t.add("evaluated", reports.size());
    t.add(reports.size() == g.order() ? "global" : "local", lo);
    if (reports.size() > 1) t.add("max", hi);
    if (coxeter) t.add("verdict", std::string(verdict(pass)) + " (Ric = 2)");
    t.write(out);
    if (cfg.all || !cfg.vertex.empty() || g.order() <= 32) {
      out << "\nvertex  ricci  |S1|  |S2|\n";
      for (const auto& r : reports) {
        out << r.vertex << "  " << format_number(r.ricci) << "  " << r.sphere1_size << "  " << r.sphere2_size << '\n';
        if (cfg.emit_minimizer) {
          out << "  minimizer:";
          for (std::size_t i = 0; i < r.minimizer.vertices.size(); ++i)
            out << ' ' << r.minimizer.vertices[i] << '=' << format_number(r.minimizer.values[i]);
          out << '\n';
        }
      }
    }
  }
  return pass ? 0 : 1;
}

int cmd_spectral(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"table", "json", "csv"});
  Input in = load_input(cfg, false);
  const bool coxeter = in.group.has_value();
  const Graph g = graph_of(in);
  guard_order(cfg, g.order());
  const SpectralReport rep = spectral_gap(g, SpectralOptions{cfg.eigen_tol, cfg.force});

  std::optional<double> ricci;
  bool has_isolated = false;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) has_isolated = has_isolated || g.degree(v) == 0;
  if (!has_isolated && g.order() > 0) ricci = global_ricci(g, {false, {cfg.eigen_tol}});
  const std::optional<GapVerdict> vs_ricci =
      ricci ? std::optional<GapVerdict>(check_gap_vs_ricci(rep, *ricci)) : std::nullopt;
  const bool at_least_2 = rep.gap >= 2.0 - kVerdictTol;
  const bool pass = (!coxeter || at_least_2) && (!vs_ricci || vs_ricci->pass);

  if (cfg.format == "csv") {
    write_header(out, cfg);
    out << "index,eigenvalue\n";
    for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i)
      out << i << ',' << format_number(rep.eigenvalues[i]) << '\n';
  } else if (cfg.format == "json") {
    write_json(out, cfg,
               {{"input", in.label},
                {"spectral", to_json(rep, cfg.full_spectrum || rep.order <= kInlineSpectrumMax)},
                {"gap_at_least_2", coxeter ? nlohmann::json(verdict(at_least_2)) : nlohmann::json()},
                {"gap_vs_ricci", vs_ricci ? to_json(*vs_ricci) : nlohmann::json()},
                {"pass", pass}});
  } else {
    write_header(out, cfg);
    Table t;
    t.add("input", in.label);
    t.add("vertices", rep.order);
    t.add("gap", rep.gap);
    t.add("max eigenvalue", rep.max_eigenvalue());
    t.add("zero multiplicity", rep.zero_multiplicity);
    t.add("components", rep.components);
    if (ricci) t.add("ricci", *ricci);
    if (coxeter) t.add("gap >= 2", verdict(at_least_2));
    if (vs_ricci)
      t.add("gap >= ricci", vs_ricci->vacuous ? std::string("PASS (vacuous, ricci <= 0)")
                                              : std::string(verdict(vs_ricci->pass)) +
                                                    (vs_ricci->equality ? " (equality)" : ""));
    for (const auto& w : rep.warnings) t.add("warning", w);
    t.write(out);
  }
  return pass ? 0 : 1;
}

int cmd_iso(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"table", "json", "csv"});
  Input in = load_input(cfg, false);
  const bool coxeter = in.group.has_value();
  const Graph g = graph_of(in);
  guard_order(cfg, g.order());
  if (cfg.exhaustive && g.order() > kExhaustiveMaxOrder)
    throw UsageError("--exhaustive needs at most " + std::to_string(kExhaustiveMaxOrder) + " vertices");

  IsoOptions opts;
  opts.mode = cfg.exhaustive ? IsoMode::exhaustive : IsoMode::sampled;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  opts.check_bruhat_bound = coxeter;
  if (coxeter) opts.ricci = 2.0;
  const IsoSummary s = verify_isoperimetry(g, opts);
  const bool pass = s.failures() == 0;

  if (cfg.format == "csv") {
    write_header(out, cfg);
    write_iso_csv(out, s);
  } else if (cfg.format == "json") {
    write_json(out, cfg, {{"input", in.label}, {"isoperimetry", to_json(s, cfg.all_reports)}, {"pass", pass}});
  } else {
    write_header(out, cfg);
    Table t;
    t.add("input", in.label);
    t.add("vertices", g.order());
    t.add("lambda", s.lambda);
    t.add("ricci", s.ricci);
    t.add("subsets", s.reports.size());
    t.add("failures", s.failures());
    if (const IsoReport* tight = s.tightest()) {
      std::string members;
      for (Vertex v : subset_members(*tight)) members += (members.empty() ? "" : " ") + std::to_string(v);
      t.add("min slack", tight->slack);
      t.add("tightest", "|A| = " + std::to_string(tight->size) + ", boundary " + std::to_string(tight->boundary) +
                            ", {" + members + "}");
    }
    t.add("verdict", verdict(pass));
    t.write(out);
  }
  return pass ? 0 : 1;
}

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"table", "json"});
  Input in = load_input(cfg, true);
  guard_order(cfg, in.group->order());
  const StructureReport rep = verify_structure(*in.group);

  if (cfg.format == "json") {
    write_json(out, cfg, {{"input", in.label}, {"structure", to_json(rep)}});
  } else {
    write_header(out, cfg);
    Table t;
    t.add("input", in.label);
    t.add("sphere2", rep.sphere2_size);
    t.add("classes", rep.classes.size());
    t.write(out);
    out << "\nrepr  size  order  m  reflections  members\n";
    for (const auto& c : rep.classes) {
      out << c.representative << "  " << c.members.size() << "  " << c.subgroup.order() << "  "
          << (c.subgroup.dihedral_m ? std::to_string(*c.subgroup.dihedral_m) : "-") << "  "
          << c.subgroup.reflections.size() << "  ";
      for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? "," : "") << c.members[i];
      if (!c.saturated) out << "  (unsaturated)";
      if (c.involution_in_larger_dihedral) out << "  (involution in larger dihedral)";
      out << '\n';
    }
    out << '\n';
    write_checks(out, rep.checks);
    for (const auto& n : rep.notes) out << "note: " << n << '\n';
  }
  return rep.pass() ? 0 : 1;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"table", "json"});
  Input in = load_input(cfg, true);
  guard_order(cfg, in.group->order());
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  opts.eigen_tol = cfg.eigen_tol;
  opts.force = cfg.force;
  const SuiteReport rep = run_invariant_suite(*in.group, opts);

  if (cfg.format == "json") {
    nlohmann::json body = to_json(rep);
    body["input"] = in.label;
    write_json(out, cfg, std::move(body));
  } else {
    write_header(out, cfg);
    out << "input " << in.label << '\n';
    write_checks(out, rep.checks);
    for (const auto& n : rep.notes) out << "note: " << n << '\n';
    out << (rep.pass() ? "all checks PASS" : "some checks FAIL") << '\n';
  }
  return rep.pass() ? 0 : 1;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "dot", "edges"});
  const bool graph_only = cfg.what == "graph";
  if (!graph_only && cfg.what != "matrix" && cfg.what != "roots" && cfg.what != "group")
    throw UsageError("--what must be matrix, roots, group or graph");
  if (!graph_only && cfg.format != "json") throw UsageError("only json export is available for " + cfg.what);
  Input in = load_input(cfg, !graph_only);
  if (cfg.what == "matrix") {
    write_json(out, cfg, {{"matrix", to_json(in.group->roots().matrix())}});
  } else if (cfg.what == "roots") {
    write_json(out, cfg, {{"roots", to_json(in.group->roots())}});
  } else if (cfg.what == "group") {
    write_json(out, cfg, {{"group", to_json(*in.group, true)}});
  } else {
    const Graph g = graph_of(in);
    if (cfg.format == "json") {
      write_json(out, cfg, {{"graph", to_json(g)}});
    } else if (cfg.format == "dot") {
      write_header(out, cfg, "// ");
      out << to_dot(g);
    } else {
      write_header(out, cfg);
      write_edge_list(out, g);
    }
  }
  return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool graph_input) {
  sub->add_option("spec", cfg.spec, "Coxeter type (A3, B4, I2(5), A1xA2), inline JSON matrix or @file");
  if (graph_input) sub->add_option("--graph", cfg.graph_path, "Edge-list or JSON graph file");
  sub->add_option("--format", cfg.format, "Output format");
  sub->add_flag_callback("--json", [&cfg] { cfg.format = "json"; }, "Same as --format json");
  sub->add_option("--out", cfg.out, "Write the report to a file");
  sub->add_option("--tol", cfg.eigen_tol, "Eigensolver tolerance")->check(CLI::PositiveNumber);
  sub->add_flag("--force", cfg.force, "Lift the size guards");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Coxeter groups, Bruhat graphs and discrete Ricci curvature", "coxric"};
  app.require_subcommand(1);

  auto* group = app.add_subcommand("group", "Group summary");
  add_common(group, cfg, false);
  group->add_flag("--elements", cfg.elements, "Include elements, lengths and reflections in JSON");

  auto* ricci = app.add_subcommand("ricci", "Local and global Ricci curvature");
  add_common(ricci, cfg, true);
  ricci->add_option("--vertex", cfg.vertex, "Single vertex: e or an id");
  ricci->add_flag("--all", cfg.all, "Every vertex, listed");
  ricci->add_flag("--transitive", cfg.transitive, "Evaluate only the identity (vertex-transitive graph)");
  ricci->add_flag("--emit-minimizer", cfg.emit_minimizer, "Include minimizing functions");

  auto* spectral = app.add_subcommand("spectral", "Laplacian spectral gap");
  add_common(spectral, cfg, true);
  spectral->add_flag("--full-spectrum", cfg.full_spectrum, "Include every eigenvalue in JSON");

  auto* iso = app.add_subcommand("iso", "Isoperimetric inequality on vertex subsets");
  add_common(iso, cfg, true);
  iso->add_option("--seed", cfg.seed, "Sampling seed");
  iso->add_option("--samples", cfg.samples, "Number of uniform subsets");
  iso->add_flag("--exhaustive", cfg.exhaustive, "Every subset (at most 20 vertices)");
  iso->add_flag("--reports", cfg.all_reports, "Include every subset in JSON");

  auto* cls = app.add_subcommand("classes", "Dihedral classes of the 2-sphere around the identity");
  add_common(cls, cfg, false);

  auto* check = app.add_subcommand("check", "Run the full invariant suite");
  add_common(check, cfg, false);
  check->add_option("--seed", cfg.seed, "Sampling seed");
  check->add_option("--samples", cfg.samples, "Subset and quadruple samples");

  auto* exp = app.add_subcommand("export", "Export matrix, roots, group or Bruhat graph");
  add_common(exp, cfg, true);
  exp->add_option("--what", cfg.what, "matrix | roots | group | graph");

  std::ostringstream buffer;
  int code = 0;
  try {
    app.parse(argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "export" && cfg.format == "table") cfg.format = "json";
    static const std::map<std::string, int (*)(const RunConfig&, std::ostream&)> commands = {
        {"group", cmd_group},     {"ricci", cmd_ricci}, {"spectral", cmd_spectral}, {"iso", cmd_iso},
        {"classes", cmd_classes}, {"check", cmd_check}, {"export", cmd_export}};
    code = commands.at(cfg.command)(cfg, buffer);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "coxric: error: " << e.what() << '\n';
    return 2;
  }

  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "coxric: error: cannot write " << cfg.out << '\n';
      return 2;
    }
  }
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("coxric");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace coxric
