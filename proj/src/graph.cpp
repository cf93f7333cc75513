#include "coxric/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

#include "coxric/errors.hpp"

namespace coxric {

Graph::Graph(std::size_t order, std::span<const Edge> edges) : adj_(order) {
  for (const auto& [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint out of range");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw InputError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

std::vector<int> distances_from(const Graph& g, Vertex x, int max_depth) {
  if (!g.contains(x)) throw InputError("vertex " + std::to_string(x) + " out of range");
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{x};
  dist[static_cast<std::size_t>(x)] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const int du = dist[static_cast<std::size_t>(u)];
    if (max_depth >= 0 && du >= max_depth) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = du + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> ball(const Graph& g, Vertex x, int i) {
  if (i < 0) throw InputError("sphere radius must be >= 0");
  const auto dist = distances_from(g, x, i);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] == i) out.push_back(static_cast<Vertex>(v));
  return out;
}

TriangleStats triangle_stats(const Graph& g) {
  TriangleStats stats;
  for (const auto& e : g.edges()) {
    const auto a = g.neighbors(e.first);
    const auto b = g.neighbors(e.second);
    int common = 0;
    for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++common;
        ++i;
        ++j;
      }
    }
    stats.per_edge.push_back({e, common});
    stats.t_max = std::max(stats.t_max, common);
  }
  return stats;
}

LocalGraph two_ball_subgraph(const Graph& g, Vertex x) {
  const auto dist = distances_from(g, x, 2);
  LocalGraph local;
  local.to_global.push_back(x);
  for (int r = 1; r <= 2; ++r)
    for (std::size_t v = 0; v < dist.size(); ++v)
      if (dist[v] == r) local.to_global.push_back(static_cast<Vertex>(v));

  std::vector<Vertex> to_local(g.order(), -1);
  for (std::size_t i = 0; i < local.to_global.size(); ++i)
    to_local[static_cast<std::size_t>(local.to_global[i])] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (Vertex u : local.to_global) {
    const int du = dist[static_cast<std::size_t>(u)];
    if (du == 2) continue;  // edges from B(2,x) are emitted from their B(1,x) end
    for (Vertex w : g.neighbors(u)) {
      const int dw = dist[static_cast<std::size_t>(w)];
      if (dw < 0) continue;
      // Keep x-B1, B1-B1 and B1-B2 edges once each.
      if (dw < du || (dw == du && w < u)) continue;
      edges.emplace_back(to_local[static_cast<std::size_t>(u)], to_local[static_cast<std::size_t>(w)]);
    }
  }
  local.graph = Graph(local.to_global.size(), edges);
  return local;
}

std::size_t connected_components(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    seen[s] = 1;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return count;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Vertex>(i);
    const auto b = static_cast<Vertex>((i + 1) % n);
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  return Graph(a + b, e);
}

Graph hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) e.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  return Graph(n, e);
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  long long max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;
    std::string extra;
    if (!(ls >> v) || (ls >> extra)) {
      throw InputError("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
    }
    if (u < 0 || v < 0 || u > 10'000'000 || v > 10'000'000) {
      throw InputError("edge list line " + std::to_string(lineno) + ": vertex id out of range");
    }
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
  }
  return Graph(static_cast<std::size_t>(max_id + 1), edges);
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) {
    throw InputError("graph JSON must be an object with an array field \"edges\"");
  }
  std::vector<Edge> edges;
  long long max_id = -1;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError("graph JSON edges must be integer pairs");
    }
    const auto u = e[0].get<long long>();
    const auto v = e[1].get<long long>();
    if (u < 0 || v < 0 || u > 10'000'000 || v > 10'000'000) throw InputError("vertex id out of range");
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::size_t order = static_cast<std::size_t>(max_id + 1);
  if (j.contains("order")) {
    if (!j["order"].is_number_unsigned()) throw InputError("graph JSON \"order\" must be a count");
    order = j["order"].get<std::size_t>();
  }
  return Graph(order, edges);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    try {
      return graph_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("invalid graph JSON '" + path + "': " + e.what());
    }
  }
  return read_edge_list(in);
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"order", g.order()}, {"edges", std::move(edges)}};
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace coxric
