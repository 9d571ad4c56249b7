#include "drumgeo/action.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "drumgeo/error.hpp"

namespace drumgeo {

bool PermutationAction::is_transitive() const {
  if (num_points == 0) return false;
  std::vector<char> seen(num_points, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& g : group->generators()) {
      int y = row(g)[x];
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == num_points;
}

PermutationAction coset_action(GroupPtr g, const Subgroup& h) {
  if (h.parent.get() != g.get())
    throw NotSubgroup("subgroup does not belong to the acting group");
  const auto& elems = g->elements();
  const int n = static_cast<int>(elems.size());

  // Partition the element list into left cosets xH. Each coset is tagged by
  // its least member; sorting elements first means scanning in order visits
  // each coset at its least member, so coset indices are canonical.
  std::vector<int> coset_of(n, -1);
  std::vector<Perm> reps;
  for (int i = 0; i < n; ++i) {
    if (coset_of[i] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(elems[i]);
    for (const Perm& u : h.elements) coset_of[g->index_of(elems[i] * u)] = id;
  }

  PermutationAction a;
  a.group = g;
  a.num_points = static_cast<int>(reps.size());
  a.coset_reps = reps;
  a.table.assign(n, {});
  for (int e = 0; e < n; ++e) {
    auto& row = a.table[e];
    row.resize(a.num_points);
    for (int x = 0; x < a.num_points; ++x)
      row[x] = coset_of[g->index_of(elems[e] * reps[x])];
  }
  return a;
}

PermutationAction action_from_table(GroupPtr g, int num_points,
                                    std::vector<std::vector<int>> table) {
  if (table.size() != g->size())
    throw InvalidPerm("action table must have one row per group element");
  for (const auto& row : table)
    Perm{row};  // validates each row is a permutation of the points
  if (num_points > 0 && !table.empty() &&
      static_cast<int>(table[0].size()) != num_points)
    throw InvalidPerm("action table row size does not match point count");
  PermutationAction a;
  a.group = g;
  a.num_points = num_points;
  a.table = std::move(table);
  return a;
}

int fixed_points(const PermutationAction& a, const Perm& g) {
  const auto& row = a.row(g);
  int n = 0;
  for (int x = 0; x < a.num_points; ++x)
    if (row[x] == x) ++n;
  return n;
}

long long fixed_point_formula(const PermGroup& g, const Perm& x,
                              const Subgroup& h) {
  long long cent = centralizer_order(g, x);
  const auto& cls = g.classes()[g.class_of(x)];
  long long meet = 0;
  for (int i : cls.members)
    if (h.contains(g.elements()[i])) ++meet;
  long long num = cent * meet;
  if (num % static_cast<long long>(h.size()) != 0)
    throw NonIntegralResult("fixed point formula produced a non-integer");
  return num / static_cast<long long>(h.size());
}

bool is_primitive(const PermutationAction& a) {
  const int n = a.num_points;
  if (n < 2)
    throw DegenerateAction("primitivity needs at least two points");
  if (!a.is_transitive()) return false;

  std::vector<const std::vector<int>*> gens;
  for (const Perm& g : a.group->generators()) gens.push_back(&a.row(g));

  // Atkinson's test: the minimal block containing {0, b} is found by
  // union-find refinement; a proper block of size in (1, n) for some b means
  // imprimitive.
  for (int b = 1; b < n; ++b) {
    std::vector<int> up(n);
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](int v) {
      while (up[v] != v) v = up[v] = up[up[v]];
      return v;
    };
    std::vector<std::pair<int, int>> todo{{0, b}};
    up[find(b)] = find(0);
    while (!todo.empty()) {
      auto [u, v] = todo.back();
      todo.pop_back();
      for (const auto* g : gens) {
        int gu = find((*g)[u]), gv = find((*g)[v]);
        if (gu != gv) {
          up[gv] = gu;
          todo.emplace_back(gu, gv);
        }
      }
    }
    int root = find(0), size = 0;
    for (int v = 0; v < n; ++v)
      if (find(v) == root) ++size;
    if (size < n) return false;  // size > 1 by construction
  }
  return true;
}

Subgroup action_kernel(const PermutationAction& a) {
  std::vector<Perm> fixing;
  for (std::size_t e = 0; e < a.group->size(); ++e) {
    const auto& row = a.table[e];
    bool all = true;
    for (int x = 0; x < a.num_points && all; ++x) all = (row[x] == x);
    if (all && !a.group->elements()[e].is_identity())
      fixing.push_back(a.group->elements()[e]);
  }
  std::vector<Perm> with_id = fixing;
  with_id.push_back(Perm::identity(a.group->degree()));
  return make_subgroup(a.group, minimal_generating_subset(with_id));
}

Subgroup core(GroupPtr g, const Subgroup& h) {
  return action_kernel(coset_action(g, h));
}

}  // namespace drumgeo
