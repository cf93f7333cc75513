#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "coxric/graph.hpp"
#include "coxric/root_system.hpp"

namespace coxric {

using ElementId = std::int32_t;

inline constexpr std::size_t kElementCap = 100'000;

// A finite Coxeter group realized as permutations of its roots.
//
// Element ids follow BFS discovery order from the identity (id 0) under right
// multiplication by simple reflections. Composition acts on roots like maps:
// (u*v).perm[i] = u.perm[v.perm[i]], i.e. v is applied first.
class Group {
 public:
  const RootSystem& roots() const { return rs_; }
  std::size_t order() const { return lengths_.size(); }
  std::size_t rank() const { return rs_.rank(); }
  ElementId identity() const { return 0; }

  std::span<const RootIndex> perm(ElementId w) const {
    return {perms_.data() + static_cast<std::size_t>(w) * degree_, degree_};
  }

  // Simple reflections, ordered like the generators of the Coxeter matrix.
  const std::vector<ElementId>& simple() const { return simple_; }
  // Reflections, ordered like the positive roots: reflections()[k] = r_{root k}.
  const std::vector<ElementId>& reflections() const { return reflections_; }

  int length(ElementId w) const { return lengths_[static_cast<std::size_t>(w)]; }
  const std::vector<int>& lengths() const { return lengths_; }

  ElementId multiply(ElementId u, ElementId v) const;
  ElementId inverse(ElementId w) const;
  std::optional<ElementId> find(std::span<const RootIndex> perm) const;

  // Position of w in reflections(), or nullopt.
  std::optional<std::size_t> reflection_index(ElementId w) const;
  bool is_reflection(ElementId w) const { return reflection_index(w).has_value(); }
  // Positive root whose reflection is t.
  RootIndex root_of(ElementId t) const;

  // reflections()[k] * w, precomputed.
  ElementId reflect_left(std::size_t k, ElementId w) const {
    return left_reflection_table_[k * order() + static_cast<std::size_t>(w)];
  }

  friend Group generate_group(RootSystem rs);

 private:
  explicit Group(RootSystem rs) : rs_(std::move(rs)), degree_(rs_.size()) {}

  struct PermHash {
    std::size_t operator()(const std::vector<RootIndex>& p) const noexcept;
  };

  ElementId add_element(std::vector<RootIndex> perm, int length);

  RootSystem rs_;
  std::size_t degree_;
  std::vector<RootIndex> perms_;
  std::vector<int> lengths_;
  std::unordered_map<std::vector<RootIndex>, ElementId, PermHash> index_;
  std::vector<ElementId> simple_;
  std::vector<ElementId> reflections_;
  std::unordered_map<ElementId, std::size_t> reflection_pos_;
  std::vector<ElementId> left_reflection_table_;
};

Group generate_group(RootSystem rs);

std::vector<ElementId> reflections(const Group& g);
int length(const Group& g, ElementId w);

// Undirected graph on element ids with edges {w, t*w} for every reflection t.
Graph bruhat_graph(const Group& g);

nlohmann::json to_json(const Group& g, bool with_edges);
// DOT rendering of the Bruhat graph, vertices ranked by length.
std::string bruhat_dot(const Group& g);

}  // namespace coxric
