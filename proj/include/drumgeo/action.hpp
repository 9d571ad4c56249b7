#pragma once

#include <vector>

#include "drumgeo/group.hpp"

namespace drumgeo {

// Action of a group on {0, ..., num_points-1}, materialized as one image row
// per group element (aligned with the parent's element order). Coset actions
// additionally carry the canonical representative of each coset: the
// lexicographically least member, which pins point numbering across runs.
struct PermutationAction {
  GroupPtr group;
  int num_points = 0;
  std::vector<std::vector<int>> table;  // table[element_index][point]
  std::vector<Perm> coset_reps;         // empty unless built from cosets

  int act(const Perm& g, int x) const { return table[group->index_of(g)][x]; }
  const std::vector<int>& row(const Perm& g) const {
    return table[group->index_of(g)];
  }
  bool is_transitive() const;
  Perm point_perm(const Perm& g) const { return Perm(row(g)); }
};

// Left translation on cosets gH; point 0 is the coset of the identity when H
// contains it (always), so the stabilizer of 0 is H itself.
PermutationAction coset_action(GroupPtr g, const Subgroup& h);

// Wrap per-element image rows produced elsewhere (validates row sizes and
// bijectivity, not the homomorphism property).
PermutationAction action_from_table(GroupPtr g, int num_points,
                                    std::vector<std::vector<int>> table);

int fixed_points(const PermutationAction& a, const Perm& g);

// |Fix(g)| on G/H computed from class data alone:
// |C_G(g)| * |g^G intersect H| / |H|. Throws NonIntegralResult when the
// division is not exact (which would indicate corrupted inputs).
long long fixed_point_formula(const PermGroup& g, const Perm& x,
                              const Subgroup& h);

// Minimal-block-system test; throws DegenerateAction when num_points < 2.
bool is_primitive(const PermutationAction& a);

// Kernel of the action, as a subgroup of the acting group.
Subgroup action_kernel(const PermutationAction& a);

// Largest normal subgroup of g inside h = kernel of the action on g/h.
Subgroup core(GroupPtr g, const Subgroup& h);

}  // namespace drumgeo
