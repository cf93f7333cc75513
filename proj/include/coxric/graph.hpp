#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace coxric {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  // Throws InputError on loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < adj_.size(); }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// BFS distances from x, -1 for unreachable; stops expanding past max_depth when >= 0.
std::vector<int> distances_from(const Graph& g, Vertex x, int max_depth = -1);

// Vertices at distance exactly i from x, ascending.
std::vector<Vertex> ball(const Graph& g, Vertex x, int i);

struct EdgeTriangles {
  Edge edge;
  int triangles = 0;
};

struct TriangleStats {
  std::vector<EdgeTriangles> per_edge;
  int t_max = 0;  // max over vertex pairs of the triangles through both
};

TriangleStats triangle_stats(const Graph& g);

// Subgraph spanned by the paths of length 1 and 2 from x. Local vertex 0 is x,
// then B(1,x) ascending, then B(2,x) ascending. Edges inside B(2,x) are dropped.
struct LocalGraph {
  Graph graph;
  std::vector<Vertex> to_global;
};

LocalGraph two_ball_subgraph(const Graph& g, Vertex x);

std::size_t connected_components(const Graph& g);

// Named small graphs used as fixtures and by the CLI.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph hypercube(std::size_t dim);

// "u v" per line; blank lines and '#' comments ignored; order = max id + 1.
Graph read_edge_list(std::istream& in);
// {"order": n, "edges": [[u, v], ...]}; "order" optional.
Graph graph_from_json(const nlohmann::json& j);
// Loads a JSON graph when the path ends in ".json", an edge list otherwise.
Graph load_graph(const std::string& path);

nlohmann::json to_json(const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_dot(const Graph& g);

}  // namespace coxric
