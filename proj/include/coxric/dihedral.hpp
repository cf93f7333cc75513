#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxric/check.hpp"
#include "coxric/group.hpp"

namespace coxric {

struct ReflectionSubgroup {
  std::vector<ElementId> generators;   // sorted, unique
  std::vector<ElementId> elements;     // sorted
  std::vector<ElementId> reflections;  // elements lying in T, sorted
  // m when the subgroup has order 2m, exactly m reflections and a cyclic
  // rotation part of order m (m = 2 admitted).
  std::optional<int> dihedral_m;

  std::size_t order() const { return elements.size(); }
  bool contains(ElementId w) const;
  bool operator==(const ReflectionSubgroup& o) const { return elements == o.elements; }
};

ReflectionSubgroup generate_subgroup(const Group& grp, std::span<const ElementId> generators);

// Elements at Bruhat distance exactly 2 from the identity, ascending.
std::vector<ElementId> sphere2(const Group& grp);

// Subgroup generated by every reflection s with st = u or ts = u for some t in T.
// Throws InputError unless u is at Bruhat distance 2 from the identity.
ReflectionSubgroup g_u(const Group& grp, ElementId u);

// Reflections v with v = t*u for a reflection t, i.e. B(1,u) n B(1,e).
std::vector<ElementId> common_neighbours_with_identity(const Group& grp, ElementId u);

struct SphereClass {
  ElementId representative = 0;   // smallest member
  std::vector<ElementId> members; // ascending
  ReflectionSubgroup subgroup;
  // |members| equals the number of nontrivial rotations of the subgroup.
  bool saturated = false;
  // Some member is an involution although m > 2, so u^2 = e alone does not
  // make the subgroup a Klein four-group.
  bool involution_in_larger_dihedral = false;
};

// Partition of sphere2 by equality of G_u; classes ordered by representative.
std::vector<SphereClass> classes(const Group& grp);

// Subgroup generated by the reflections of all positive roots in the plane
// spanned by the roots of t1 and t2.
ReflectionSubgroup maximal_dihedral(const Group& grp, ElementId t1, ElementId t2);

struct StructureReport {
  std::size_t sphere2_size = 0;
  std::vector<SphereClass> classes;
  std::vector<CheckTally> checks;
  std::vector<std::string> notes;

  bool pass() const;
  const CheckTally* check(const std::string& name) const;
};

StructureReport verify_structure(const Group& grp);

struct FactorizationReport {
  bool exhaustive = false;
  std::size_t quadruples = 0;
  CheckTally dihedral{"factorization_dihedral"};

  bool pass() const { return dihedral.pass(); }
};

// Checks that <t1,t2,t3,t4> is dihedral whenever t1 t2 = t3 t4 != e. Runs
// exhaustively when samples == 0 or |T|^3 <= samples.
FactorizationReport verify_reflection_factorizations(const Group& grp, std::size_t samples, std::uint64_t seed);

}  // namespace coxric
