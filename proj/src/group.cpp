#include "coxric/group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "coxric/errors.hpp"

namespace coxric {

std::size_t Group::PermHash::operator()(const std::vector<RootIndex>& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (RootIndex x : p) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

ElementId Group::add_element(std::vector<RootIndex> perm, int length) {
  const auto id = static_cast<ElementId>(lengths_.size());
  perms_.insert(perms_.end(), perm.begin(), perm.end());
  lengths_.push_back(length);
  index_.emplace(std::move(perm), id);
  return id;
}

ElementId Group::multiply(ElementId u, ElementId v) const {
  const auto pu = perm(u);
  const auto pv = perm(v);
  std::vector<RootIndex> w(degree_);
  for (std::size_t i = 0; i < degree_; ++i) w[i] = pu[static_cast<std::size_t>(pv[i])];
  const auto it = index_.find(w);
  if (it == index_.end()) throw NumericError("group is not closed under composition");
  return it->second;
}

ElementId Group::inverse(ElementId w) const {
  const auto p = perm(w);
  std::vector<RootIndex> inv(degree_);
  for (std::size_t i = 0; i < degree_; ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<RootIndex>(i);
  const auto it = index_.find(inv);
  if (it == index_.end()) throw NumericError("group is not closed under inversion");
  return it->second;
}

std::optional<ElementId> Group::find(std::span<const RootIndex> p) const {
  const auto it = index_.find(std::vector<RootIndex>(p.begin(), p.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Group::reflection_index(ElementId w) const {
  const auto it = reflection_pos_.find(w);
  if (it == reflection_pos_.end()) return std::nullopt;
  return it->second;
}

RootIndex Group::root_of(ElementId t) const {
  const auto k = reflection_index(t);
  if (!k) throw InputError("element " + std::to_string(t) + " is not a reflection");
  return static_cast<RootIndex>(*k);
}

Group generate_group(RootSystem rs) {
  Group g(std::move(rs));
  const std::size_t n = g.rs_.rank();
  const std::size_t deg = g.degree_;

  std::vector<RootPermutation> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(reflection_action(g.rs_, static_cast<RootIndex>(i)));

  std::vector<RootIndex> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<RootIndex>(i);
  g.add_element(std::move(id), 0);

  // BFS under right multiplication; depth is the length.
  for (std::size_t cur = 0; cur < g.order(); ++cur) {
    for (const auto& s : gens) {
      std::vector<RootIndex> next(deg);
      const RootIndex* pw = g.perms_.data() + cur * deg;
      for (std::size_t i = 0; i < deg; ++i) next[i] = pw[static_cast<std::size_t>(s[i])];
      if (g.index_.contains(next)) continue;
      if (g.order() >= kElementCap) {
        throw NumericError("group exceeds the element cap of " + std::to_string(kElementCap));
      }
      g.add_element(std::move(next), g.lengths_[cur] + 1);
    }
  }

  for (const auto& s : gens) g.simple_.push_back(*g.find(s));

  const std::size_t npos = g.rs_.positive_count();
  for (std::size_t k = 0; k < npos; ++k) {
    const auto t = g.find(reflection_action(g.rs_, static_cast<RootIndex>(k)));
    if (!t) throw NumericError("reflection of a positive root is not a group element");
    if (g.reflection_pos_.contains(*t)) {
      throw NumericError("two positive roots give the same reflection");
    }
    g.reflection_pos_.emplace(*t, k);
    g.reflections_.push_back(*t);
  }

  g.left_reflection_table_.resize(npos * g.order());
  for (std::size_t k = 0; k < npos; ++k) {
    for (std::size_t w = 0; w < g.order(); ++w) {
      g.left_reflection_table_[k * g.order() + w] =
          g.multiply(g.reflections_[k], static_cast<ElementId>(w));
    }
  }
  return g;
}

std::vector<ElementId> reflections(const Group& g) { return g.reflections(); }

int length(const Group& g, ElementId w) { return g.length(w); }

Graph bruhat_graph(const Group& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.order() * g.reflections().size() / 2);
  for (std::size_t k = 0; k < g.reflections().size(); ++k) {
    for (std::size_t w = 0; w < g.order(); ++w) {
      const ElementId v = g.reflect_left(k, static_cast<ElementId>(w));
      if (static_cast<ElementId>(w) < v) edges.emplace_back(static_cast<Vertex>(w), v);
    }
  }
  return Graph(g.order(), edges);
}

nlohmann::json to_json(const Group& g, bool with_edges) {
  nlohmann::json j;
  j["order"] = g.order();
  j["rank"] = g.rank();
  j["simple"] = g.simple();
  j["reflections"] = g.reflections();
  j["lengths"] = g.lengths();
  if (with_edges) {
    const Graph b = bruhat_graph(g);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : b.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
  }
  return j;
}

std::string bruhat_dot(const Group& g) {
  const Graph b = bruhat_graph(g);
  std::ostringstream out;
  out << "graph bruhat {\n";
  const int max_len = *std::max_element(g.lengths().begin(), g.lengths().end());
  for (int len = 0; len <= max_len; ++len) {
    out << "  { rank=same;";
    for (std::size_t w = 0; w < g.order(); ++w)
      if (g.length(static_cast<ElementId>(w)) == len) out << ' ' << w << ';';
    out << " }\n";
  }
  for (std::size_t w = 0; w < g.order(); ++w) {
    out << "  " << w << " [label=\"" << w << " (l=" << g.length(static_cast<ElementId>(w)) << ")\"];\n";
  }
  for (const auto& [u, v] : b.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace coxric
