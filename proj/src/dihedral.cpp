#include "coxric/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "coxric/errors.hpp"
#include "coxric/rng.hpp"

namespace coxric {

namespace {

std::string describe(const std::vector<ElementId>& ids) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
  out << '}';
  return out.str();
}

int element_order(const Group& grp, ElementId w) {
  int k = 1;
  for (ElementId x = w; x != grp.identity(); x = grp.multiply(w, x)) ++k;
  return k;
}

std::optional<int> dihedral_parameter(const Group& grp, const ReflectionSubgroup& h) {
  const std::size_t order = h.order();
  if (order < 4 || order % 2 != 0) return std::nullopt;
  const std::size_t m = order / 2;
  if (h.reflections.size() != m) return std::nullopt;
  for (ElementId w : h.elements) {
    if (grp.is_reflection(w)) continue;
    if (static_cast<std::size_t>(element_order(grp, w)) == m) return static_cast<int>(m);
  }
  return std::nullopt;
}

std::vector<double> gram3(const RootSystem& rs, RootIndex a, RootIndex b, RootIndex c) {
  const RootIndex r[3] = {a, b, c};
  std::vector<double> g(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[static_cast<std::size_t>(i * 3 + j)] = rs.pairing(r[i], r[j]);
  return g;
}

double det3(const std::vector<double>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

}  // namespace

bool ReflectionSubgroup::contains(ElementId w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

ReflectionSubgroup generate_subgroup(const Group& grp, std::span<const ElementId> generators) {
  ReflectionSubgroup h;
  h.generators.assign(generators.begin(), generators.end());
  std::sort(h.generators.begin(), h.generators.end());
  h.generators.erase(std::unique(h.generators.begin(), h.generators.end()), h.generators.end());

  std::set<ElementId> seen{grp.identity()};
  std::deque<ElementId> queue{grp.identity()};
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    for (ElementId s : h.generators) {
      const ElementId y = grp.multiply(s, x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  h.elements.assign(seen.begin(), seen.end());
  for (ElementId w : h.elements)
    if (grp.is_reflection(w)) h.reflections.push_back(w);
  h.dihedral_m = dihedral_parameter(grp, h);
  return h;
}

std::vector<ElementId> sphere2(const Group& grp) {
  // BFS over Bruhat edges w -> t*w, two levels deep.
  std::vector<int> dist(grp.order(), -1);
  dist[static_cast<std::size_t>(grp.identity())] = 0;
  std::vector<ElementId> frontier{grp.identity()};
  std::vector<ElementId> out;
  for (int level = 1; level <= 2; ++level) {
    std::vector<ElementId> next;
    for (ElementId w : frontier) {
      for (std::size_t k = 0; k < grp.reflections().size(); ++k) {
        const ElementId v = grp.reflect_left(k, w);
        if (dist[static_cast<std::size_t>(v)] >= 0) continue;
        dist[static_cast<std::size_t>(v)] = level;
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  out = std::move(frontier);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> common_neighbours_with_identity(const Group& grp, ElementId u) {
  std::vector<ElementId> out;
  for (std::size_t k = 0; k < grp.reflections().size(); ++k) {
    const ElementId v = grp.reflect_left(k, u);
    if (grp.is_reflection(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

ReflectionSubgroup g_u_unchecked(const Group& grp, ElementId u) {
  std::vector<ElementId> gens;
  for (std::size_t k = 0; k < grp.reflections().size(); ++k) {
    const ElementId s = grp.reflections()[k];
    // st = u  <=>  t = s u;   ts = u  <=>  t = u s.
    if (grp.is_reflection(grp.reflect_left(k, u)) || grp.is_reflection(grp.multiply(u, s))) {
      gens.push_back(s);
    }
  }
  return generate_subgroup(grp, gens);
}

}  // namespace

ReflectionSubgroup g_u(const Group& grp, ElementId u) {
  const auto s2 = sphere2(grp);
  if (!std::binary_search(s2.begin(), s2.end(), u)) {
    throw InputError("element " + std::to_string(u) + " is not at Bruhat distance 2 from the identity");
  }
  return g_u_unchecked(grp, u);
}

std::vector<SphereClass> classes(const Group& grp) {
  std::vector<SphereClass> out;
  std::map<std::vector<ElementId>, std::size_t> by_subgroup;
  for (ElementId u : sphere2(grp)) {
    ReflectionSubgroup h = g_u_unchecked(grp, u);
    const auto [it, fresh] = by_subgroup.emplace(h.elements, out.size());
    if (fresh) {
      SphereClass c;
      c.representative = u;
      c.subgroup = std::move(h);
      out.push_back(std::move(c));
    }
    out[it->second].members.push_back(u);
  }
  for (auto& c : out) {
    const std::size_t rotations = c.subgroup.order() / 2 - 1;
    c.saturated = c.members.size() == rotations;
    const bool larger = c.subgroup.dihedral_m.value_or(0) > 2;
    for (ElementId u : c.members) {
      if (larger && grp.multiply(u, u) == grp.identity()) c.involution_in_larger_dihedral = true;
    }
  }
  return out;
}

ReflectionSubgroup maximal_dihedral(const Group& grp, ElementId t1, ElementId t2) {
  if (t1 == t2) throw InputError("maximal_dihedral needs two distinct reflections");
  const RootSystem& rs = grp.roots();
  const RootIndex a = grp.root_of(t1);
  const RootIndex b = grp.root_of(t2);
  const double gram2 = rs.pairing(a, a) * rs.pairing(b, b) - rs.pairing(a, b) * rs.pairing(a, b);
  if (!(gram2 > 1e-8)) throw NumericError("roots of distinct reflections are parallel");

  std::vector<ElementId> gens;
  for (std::size_t k = 0; k < rs.positive_count(); ++k) {
    const auto c = static_cast<RootIndex>(k);
    if (std::abs(det3(gram3(rs, a, b, c))) < 1e-8) gens.push_back(grp.reflections()[k]);
  }
  return generate_subgroup(grp, gens);
}

bool StructureReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.pass(); });
}

const CheckTally* StructureReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

StructureReport verify_structure(const Group& grp) {
  StructureReport rep;
  const auto s2 = sphere2(grp);
  rep.sphere2_size = s2.size();
  rep.classes = classes(grp);

  CheckTally partition{"partition"};
  CheckTally dihedral{"dihedral"};
  CheckTally maximality{"maximality"};
  CheckTally rotations{"class_is_rotations"};
  CheckTally rigidity{"pair_rigidity"};
  CheckTally uniqueness{"pair_uniqueness"};
  CheckTally bridge{"common_neighbours_count"};
  CheckTally containment{"common_neighbours_in_subgroup"};
  CheckTally class_bound{"class_size_bound"};

  std::map<ElementId, std::size_t> class_of;
  std::size_t members_total = 0;
  for (std::size_t ci = 0; ci < rep.classes.size(); ++ci) {
    for (ElementId u : rep.classes[ci].members) {
      const bool fresh = class_of.emplace(u, ci).second;
      partition.record(fresh, "element " + std::to_string(u) + " lies in two classes");
      ++members_total;
    }
  }
  partition.record(members_total == s2.size() && class_of.size() == s2.size(),
                   "classes cover " + std::to_string(class_of.size()) + " of " +
                       std::to_string(s2.size()) + " elements");

  const auto& T = grp.reflections();
  for (const auto& c : rep.classes) {
    const auto& h = c.subgroup;
    dihedral.record(h.dihedral_m.has_value() && *h.dihedral_m >= 2,
                    "G_u of class " + std::to_string(c.representative) + " has order " +
                        std::to_string(h.order()) + " with " + std::to_string(h.reflections.size()) +
                        " reflections");

    // Nontrivial rotations of G_u inside B(2,e) are exactly the class.
    std::vector<ElementId> rot;
    for (ElementId w : h.elements) {
      if (w == grp.identity() || grp.is_reflection(w)) continue;
      if (std::binary_search(s2.begin(), s2.end(), w)) rot.push_back(w);
    }
    rotations.record(rot == c.members, "class " + describe(c.members) + " vs rotations " + describe(rot));

    class_bound.record(c.members.size() <= h.order() / 2 - 1,
                       "class of " + std::to_string(c.representative) + " exceeds the rotation count");

    for (ElementId u : c.members) {
      const auto common = common_neighbours_with_identity(grp, u);
      bridge.record(common.size() == h.reflections.size(),
                    "n_u = " + std::to_string(common.size()) + " but G_u has " +
                        std::to_string(h.reflections.size()) + " reflections at u = " + std::to_string(u));
      const bool inside = std::all_of(common.begin(), common.end(), [&](ElementId v) { return h.contains(v); });
      containment.record(inside, "B(1,u) n B(1,e) not inside G_u at u = " + std::to_string(u));

      // Every factorization u = t1 t2 yields the plane-maximal dihedral subgroup.
      for (std::size_t k = 0; k < T.size(); ++k) {
        const ElementId t1 = T[k];
        const ElementId t2 = grp.reflect_left(k, u);  // t1 * u = t2  <=>  u = t1 t2
        if (!grp.is_reflection(t2)) continue;
        const auto w = maximal_dihedral(grp, t1, t2);
        maximality.record(w == h, "u = " + std::to_string(u) + " = " + std::to_string(t1) + "*" +
                                      std::to_string(t2) + ": plane subgroup of order " +
                                      std::to_string(w.order()) + " vs G_u of order " +
                                      std::to_string(h.order()));
      }
    }
  }

  // G_u and G_u' sharing two reflections are equal, over all pairs u, u'.
  for (std::size_t i = 0; i < s2.size(); ++i) {
    const auto& gi = rep.classes[class_of.at(s2[i])].subgroup;
    for (std::size_t j = i + 1; j < s2.size(); ++j) {
      const auto& gj = rep.classes[class_of.at(s2[j])].subgroup;
      std::vector<ElementId> shared;
      std::set_intersection(gi.reflections.begin(), gi.reflections.end(), gj.reflections.begin(),
                            gj.reflections.end(), std::back_inserter(shared));
      rigidity.expect(shared.size() < 2 || gi == gj, [&] {
        return "G_u for " + std::to_string(s2[i]) + " and " + std::to_string(s2[j]) + " share reflections " +
               describe(shared) + " but differ";
      });
    }
  }

  // Each unordered pair of distinct reflections lies in exactly one class subgroup.
  const std::size_t nt = T.size();
  std::vector<int> hits(nt * nt, 0);
  for (const auto& c : rep.classes) {
    const auto& r = c.subgroup.reflections;
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = a + 1; b < r.size(); ++b) {
        const auto ia = *grp.reflection_index(r[a]);
        const auto ib = *grp.reflection_index(r[b]);
        ++hits[std::min(ia, ib) * nt + std::max(ia, ib)];
      }
  }
  for (std::size_t a = 0; a < nt; ++a)
    for (std::size_t b = a + 1; b < nt; ++b) {
      const int n = hits[a * nt + b];
      uniqueness.record(n == 1, "reflections " + std::to_string(T[a]) + "," + std::to_string(T[b]) +
                                    " lie in " + std::to_string(n) + " class subgroups");
    }

  for (const auto& c : rep.classes) {
    if (c.involution_in_larger_dihedral) {
      rep.notes.push_back("class of " + std::to_string(c.representative) + " contains an involution u (u^2 = e) but G_u has order " +
                          std::to_string(c.subgroup.order()) + " (m = " +
                          std::to_string(c.subgroup.dihedral_m.value_or(0)) + "), not the Klein four-group");
    }
  }

  rep.checks = {partition, dihedral, maximality, rotations, rigidity, uniqueness, bridge, containment, class_bound};
  return rep;
}

FactorizationReport verify_reflection_factorizations(const Group& grp, std::size_t samples, std::uint64_t seed) {
  FactorizationReport rep;
  const auto& T = grp.reflections();
  const std::size_t nt = T.size();
  rep.exhaustive = samples == 0 || nt * nt * nt <= samples;

  auto check = [&](std::size_t i1, std::size_t i2, std::size_t i3) {
    const ElementId u = grp.multiply(T[i1], T[i2]);
    if (u == grp.identity()) return;
    const ElementId t4 = grp.reflect_left(i3, u);  // t3 t4 = u  <=>  t4 = t3 u
    if (!grp.is_reflection(t4)) return;
    ++rep.quadruples;
    const ElementId gens[4] = {T[i1], T[i2], T[i3], t4};
    const auto h = generate_subgroup(grp, gens);
    rep.dihedral.record(h.dihedral_m.has_value(),
                        "<" + std::to_string(T[i1]) + "," + std::to_string(T[i2]) + "," +
                            std::to_string(T[i3]) + "," + std::to_string(t4) + "> has order " +
                            std::to_string(h.order()));
  };

  if (nt < 2) return rep;
  if (rep.exhaustive) {
    for (std::size_t a = 0; a < nt; ++a)
      for (std::size_t b = 0; b < nt; ++b)
        for (std::size_t c = 0; c < nt; ++c) check(a, b, c);
    return rep;
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t a = rng.below(nt);
    std::size_t b = rng.below(nt - 1);
    if (b >= a) ++b;
    const ElementId u = grp.multiply(T[a], T[b]);
    std::vector<std::size_t> partners;
    for (std::size_t c = 0; c < nt; ++c)
      if (grp.is_reflection(grp.reflect_left(c, u))) partners.push_back(c);
    check(a, b, partners[rng.below(partners.size())]);
  }
  return rep;
}

}  // namespace coxric
