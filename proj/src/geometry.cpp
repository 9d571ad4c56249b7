#include "drumgeo/geometry.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "drumgeo/error.hpp"

namespace drumgeo {

int IncidenceGeometry::point_degree(int point) const {
  int d = 0;
  for (int l = 0; l < num_lines; ++l) d += incident(point, l);
  return d;
}

int IncidenceGeometry::line_degree(int line) const {
  int d = 0;
  for (int p = 0; p < num_points; ++p) d += incident(p, line);
  return d;
}

DGeometry make_dgeometry(IncidenceGeometry geometry, GroupPtr group,
                         PermutationAction point_action,
                         PermutationAction line_action) {
  if (point_action.group.get() != group.get() ||
      line_action.group.get() != group.get())
    throw PreconditionUnmet("actions must belong to the given group");
  if (point_action.num_points != geometry.num_points ||
      line_action.num_points != geometry.num_lines)
    throw PreconditionUnmet("action degrees do not match the geometry");
  if (!point_action.is_transitive() || !line_action.is_transitive())
    throw PreconditionUnmet("both actions must be transitive");
  for (const Perm& g : group->generators()) {
    const std::vector<int>& pr = point_action.row(g);
    const std::vector<int>& lr = line_action.row(g);
    for (int p = 0; p < geometry.num_points; ++p)
      for (int l = 0; l < geometry.num_lines; ++l)
        if (geometry.incident(p, l) != geometry.incident(pr[p], lr[l]))
          throw PreconditionUnmet("generator does not preserve incidence");
  }
  return DGeometry{std::move(geometry), std::move(group),
                   std::move(point_action), std::move(line_action)};
}

DGeometry build_drum_geometry(const GSTriple& t) {
  PermutationAction pa = coset_action(t.group, t.left);
  PermutationAction la = coset_action(t.group, t.right);
  IncidenceGeometry geo;
  geo.num_points = pa.num_points;
  geo.num_lines = la.num_points;
  geo.incidence = BitMatrix(geo.num_points, geo.num_lines);
  // Point aU meets line bV iff some au lies in bV; sweeping u over U hits
  // every line coset intersecting aU.
  for (int i = 0; i < geo.num_points; ++i) {
    const Perm& rep = pa.coset_reps[i];
    for (const Perm& u : t.left.elements) {
      const int j = la.table[t.group->index_of(rep * u)][0];
      geo.incidence.set(i, j, true);
    }
  }
  return make_dgeometry(std::move(geo), t.group, std::move(pa), std::move(la));
}

namespace {

int count_fixed(const std::vector<int>& row) {
  int n = 0;
  for (std::size_t i = 0; i < row.size(); ++i) n += row[i] == static_cast<int>(i);
  return n;
}

VerifyResult verify_fixed_law(const DGeometry& g, bool compare_counts) {
  const PermGroup& grp = *g.group;
  for (const ConjugacyClass& c : grp.classes()) {
    const int idx = c.members.front();
    const int fp = count_fixed(g.point_action.table[idx]);
    const int fl = count_fixed(g.line_action.table[idx]);
    const bool ok = compare_counts ? fp == fl : (fp > 0) == (fl > 0);
    if (!ok)
      return VerifyResult{false, c.rep, fp, fl,
                          "element " + to_string(c.rep) + " fixes " +
                              std::to_string(fp) + " points but " +
                              std::to_string(fl) + " lines"};
  }
  return VerifyResult{true, std::nullopt, 0, 0,
                      "checked " + std::to_string(grp.classes().size()) +
                          " class representatives of a group of order " +
                          std::to_string(grp.size())};
}

}  // namespace

VerifyResult verify_D(const DGeometry& g) { return verify_fixed_law(g, false); }

VerifyResult verify_SD(const DGeometry& g) { return verify_fixed_law(g, true); }

namespace {

Subgroup stabilizer_subgroup(const GroupPtr& group,
                             const PermutationAction& action, int point) {
  std::vector<Perm> fixing;
  for (std::size_t i = 0; i < group->size(); ++i)
    if (action.table[i][point] == point) fixing.push_back(group->elements()[i]);
  return make_subgroup(group, minimal_generating_subset(fixing));
}

}  // namespace

GSTriple triple_from_geometry(const DGeometry& g, int point, int line) {
  if (!g.point_action.is_transitive() || !g.line_action.is_transitive())
    throw NotTransitive("stabilizer extraction needs transitivity on both sorts");
  return GSTriple{g.group, stabilizer_subgroup(g.group, g.point_action, point),
                  stabilizer_subgroup(g.group, g.line_action, line)};
}

GSTriple triple_at_incident_flag(const DGeometry& g, int point) {
  for (int l = 0; l < g.geometry.num_lines; ++l)
    if (g.geometry.incident(point, l))
      return triple_from_geometry(g, point, l);
  throw PreconditionUnmet("the chosen point lies on no line");
}

ExactMatrix incidence_matrix(const IncidenceGeometry& g) {
  ExactMatrix m(g.num_points, g.num_lines);
  for (int p = 0; p < g.num_points; ++p)
    for (int l = 0; l < g.num_lines; ++l)
      if (g.incident(p, l)) m.at(p, l) = 1;
  return m;
}

bool verify_pa_eq_al(const DGeometry& g, const Perm& alpha) {
  const ExactMatrix p = permutation_matrix(g.point_action.row(alpha));
  const ExactMatrix l = permutation_matrix(g.line_action.row(alpha));
  const ExactMatrix a = incidence_matrix(g.geometry);
  return p * a == a * l;
}

SuperStrongResult is_super_strong(const IncidenceGeometry& g) {
  if (g.num_points != g.num_lines)
    throw NotSquare("nonsingularity test needs equal point and line counts");
  Rational det = determinant(incidence_matrix(g));
  return SuperStrongResult{det != 0, std::move(det)};
}

namespace {

// Backtracking search for incidence-preserving bijections a -> b. Points are
// assigned in index order; after each assignment the multiset of line
// signatures (degree plus incidence pattern over the assigned points) must
// agree between the two sides, which prunes hard even on structures where
// all degrees and pair counts coincide. Line images are forced from the
// final point bijection.
struct GeoIsoSearch {
  const IncidenceGeometry& a;
  const IncidenceGeometry& b;
  long long budget;
  bool enumerate_all;
  bool exhausted = false;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> solutions;

  std::vector<int> pmap;
  std::vector<char> used;
  std::vector<int> a_point_deg, b_point_deg, a_line_deg, b_line_deg;

  GeoIsoSearch(const IncidenceGeometry& a_in, const IncidenceGeometry& b_in,
               long long budget_in, bool all)
      : a(a_in), b(b_in), budget(budget_in), enumerate_all(all) {
    pmap.assign(a.num_points, -1);
    used.assign(b.num_points, 0);
    for (int p = 0; p < a.num_points; ++p) a_point_deg.push_back(a.point_degree(p));
    for (int p = 0; p < b.num_points; ++p) b_point_deg.push_back(b.point_degree(p));
    for (int l = 0; l < a.num_lines; ++l) a_line_deg.push_back(a.line_degree(l));
    for (int l = 0; l < b.num_lines; ++l) b_line_deg.push_back(b.line_degree(l));
  }

  bool feasible() const {
    if (a.num_points != b.num_points || a.num_lines != b.num_lines) return false;
    auto sorted = [](std::vector<int> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    return sorted(a_point_deg) == sorted(b_point_deg) &&
           sorted(a_line_deg) == sorted(b_line_deg);
  }

  // Line signatures over the first `depth` assigned points.
  bool signatures_match(int depth) const {
    std::vector<std::pair<std::uint64_t, int>> sa, sb;
    sa.reserve(a.num_lines);
    sb.reserve(b.num_lines);
    for (int l = 0; l < a.num_lines; ++l) {
      std::uint64_t mask = 0;
      for (int s = 0; s < depth && s < 64; ++s)
        mask |= std::uint64_t(a.incident(s, l)) << s;
      sa.emplace_back(mask, a_line_deg[l]);
    }
    for (int l = 0; l < b.num_lines; ++l) {
      std::uint64_t mask = 0;
      for (int s = 0; s < depth && s < 64; ++s)
        mask |= std::uint64_t(b.incident(pmap[s], l)) << s;
      sb.emplace_back(mask, b_line_deg[l]);
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool complete_lines(std::vector<int>* lmap_out) const {
    // Match each a-line to a b-line with the identical incidence pattern
    // under the point bijection; patterns may repeat, so spend equal ones in
    // index order.
    std::vector<std::pair<std::vector<char>, int>> pool;
    pool.reserve(b.num_lines);
    for (int l = 0; l < b.num_lines; ++l) {
      std::vector<char> col(b.num_points);
      for (int p = 0; p < b.num_points; ++p) col[p] = b.incident(p, l);
      pool.emplace_back(std::move(col), l);
    }
    std::vector<char> taken(b.num_lines, 0);
    std::vector<int> lmap(a.num_lines, -1);
    for (int l = 0; l < a.num_lines; ++l) {
      std::vector<char> want(b.num_points);
      for (int p = 0; p < a.num_points; ++p) want[pmap[p]] = a.incident(p, l);
      bool found = false;
      for (const auto& [col, idx] : pool) {
        if (taken[idx] || col != want) continue;
        lmap[l] = idx;
        taken[idx] = 1;
        found = true;
        break;
      }
      if (!found) return false;
    }
    *lmap_out = std::move(lmap);
    return true;
  }

  // Returns true to stop the whole search (first solution found and not
  // enumerating).
  bool dfs(int depth) {
    if (depth == a.num_points) {
      std::vector<int> lmap;
      if (complete_lines(&lmap)) {
        solutions.emplace_back(pmap, std::move(lmap));
        return !enumerate_all;
      }
      return false;
    }
    for (int cand = 0; cand < b.num_points; ++cand) {
      if (used[cand] || b_point_deg[cand] != a_point_deg[depth]) continue;
      if (--budget < 0) {
        exhausted = true;
        return true;
      }
      pmap[depth] = cand;
      used[cand] = 1;
      if (signatures_match(depth + 1) && dfs(depth + 1)) return true;
      pmap[depth] = -1;
      used[cand] = 0;
    }
    return false;
  }

  void run() {
    if (!feasible()) return;
    dfs(0);
  }
};

IncidenceGeometry transpose(const IncidenceGeometry& g) {
  IncidenceGeometry d;
  d.num_points = g.num_lines;
  d.num_lines = g.num_points;
  d.incidence = BitMatrix(d.num_points, d.num_lines);
  for (int p = 0; p < g.num_points; ++p)
    for (int l = 0; l < g.num_lines; ++l)
      if (g.incident(p, l)) d.incidence.set(l, p, true);
  return d;
}

}  // namespace

std::optional<Duality> find_duality(const IncidenceGeometry& g,
                                    long long budget) {
  const IncidenceGeometry dual = transpose(g);
  GeoIsoSearch search(g, dual, budget, false);
  search.run();
  if (search.solutions.empty()) return std::nullopt;
  return Duality{search.solutions.front().first, search.solutions.front().second};
}

std::optional<GroupPtr> automorphism_group(const IncidenceGeometry& g,
                                           long long budget) {
  GeoIsoSearch search(g, g, budget, true);
  search.run();
  if (search.exhausted) return std::nullopt;
  std::vector<Perm> elements;
  elements.reserve(search.solutions.size());
  for (const auto& [pmap, lmap] : search.solutions) {
    std::vector<int> im(g.num_points + g.num_lines);
    for (int p = 0; p < g.num_points; ++p) im[p] = pmap[p];
    for (int l = 0; l < g.num_lines; ++l) im[g.num_points + l] = g.num_points + lmap[l];
    elements.emplace_back(std::move(im));
  }
  std::sort(elements.begin(), elements.end());
  std::vector<Perm> gens = minimal_generating_subset(elements);
  return group_from_elements(g.num_points + g.num_lines, std::move(gens),
                             std::move(elements), "aut");
}

Perm combined_perm(const DGeometry& g, const Perm& a) {
  const int mu = g.geometry.num_points;
  const int nu = g.geometry.num_lines;
  const std::vector<int>& pr = g.point_action.row(a);
  const std::vector<int>& lr = g.line_action.row(a);
  std::vector<int> im(mu + nu);
  for (int p = 0; p < mu; ++p) im[p] = pr[p];
  for (int l = 0; l < nu; ++l) im[mu + l] = mu + lr[l];
  return Perm(std::move(im));
}

GroupPtr combined_group(const DGeometry& g) {
  std::vector<Perm> elements;
  std::unordered_set<Perm, PermHash> seen;
  for (const Perm& e : g.group->elements()) {
    Perm im = combined_perm(g, e);
    if (seen.insert(im).second) elements.push_back(std::move(im));
  }
  std::sort(elements.begin(), elements.end());
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> gen_seen;
  for (const Perm& e : g.group->generators()) {
    Perm im = combined_perm(g, e);
    if (!im.is_identity() && gen_seen.insert(im).second) gens.push_back(std::move(im));
  }
  return group_from_elements(g.geometry.num_points + g.geometry.num_lines,
                             std::move(gens), std::move(elements),
                             g.group->name().empty() ? "combined"
                                                     : g.group->name() + "-combined");
}

GSTriple derived_triple_subgroup(const DGeometry& g, const Subgroup& x,
                                 int point, int line) {
  if (x.parent.get() != g.group.get())
    throw NotSubgroup("subgroup does not belong to the geometry's group");
  auto transitive_on = [&](const PermutationAction& action) {
    std::vector<char> seen(action.num_points, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (const Perm& gen : x.generators) {
        const int q = action.act(gen, p);
        if (!seen[q]) {
          seen[q] = 1;
          ++count;
          stack.push_back(q);
        }
      }
    }
    return count == action.num_points;
  };
  if (!transitive_on(g.point_action) || !transitive_on(g.line_action))
    throw NotTransitiveSubgroup("subgroup is not transitive on both sorts");

  GroupPtr xg = as_group(x, "sub");
  auto stab = [&](const PermutationAction& action, int pt) {
    std::vector<Perm> fixing;
    for (const Perm& e : x.elements)
      if (action.act(e, pt) == pt) fixing.push_back(e);
    return make_subgroup(xg, minimal_generating_subset(fixing));
  };
  return GSTriple{xg, stab(g.point_action, point), stab(g.line_action, line)};
}

GSTriple derived_triple_overgroup(const DGeometry& g, GroupPtr b, int point,
                                  int line) {
  const int mu = g.geometry.num_points;
  const int nu = g.geometry.num_lines;

  bool hypothesis = false;
  if (mu == nu && is_super_strong(g.geometry).super_strong) hypothesis = true;
  if (!hypothesis && is_symmetric_design(g.geometry)) hypothesis = true;
  if (!hypothesis)
    throw PreconditionUnmet(
        "geometry is neither super strong nor a symmetric design");

  if (b->degree() != mu + nu)
    throw PreconditionUnmet("overgroup must act on the combined domain");
  for (const Perm& beta : b->generators()) {
    for (int p = 0; p < mu; ++p)
      if (beta(p) >= mu)
        throw PreconditionUnmet("overgroup generator mixes points and lines");
    for (int p = 0; p < mu; ++p)
      for (int l = 0; l < nu; ++l)
        if (g.geometry.incident(p, l) !=
            g.geometry.incident(beta(p), beta(mu + l) - mu))
          throw PreconditionUnmet("overgroup generator breaks incidence");
  }
  for (const Perm& a : g.group->generators())
    if (!b->contains(combined_perm(g, a)))
      throw PreconditionUnmet("overgroup does not contain the acting group");

  auto stab = [&](int combined_point) {
    std::vector<Perm> fixing;
    for (std::size_t i = 0; i < b->size(); ++i)
      if (b->elements()[i](combined_point) == combined_point)
        fixing.push_back(b->elements()[i]);
    return make_subgroup(b, minimal_generating_subset(fixing));
  };
  GSTriple result{b, stab(point), stab(mu + line)};
  if (!check_ac(result).ok)
    throw Error("enlarged stabilizer pair failed the class-count cross-check");
  return result;
}

std::optional<DesignParameters> is_symmetric_design(const IncidenceGeometry& g) {
  const int v = g.num_points;
  if (v < 2 || g.num_lines != v) return std::nullopt;
  const int k = g.line_degree(0);
  for (int l = 0; l < v; ++l)
    if (g.line_degree(l) != k) return std::nullopt;
  for (int p = 0; p < v; ++p)
    if (g.point_degree(p) != k) return std::nullopt;

  int lambda = -1;
  for (int p = 0; p < v; ++p)
    for (int q = p + 1; q < v; ++q) {
      int common = 0;
      for (int l = 0; l < v; ++l) common += g.incident(p, l) && g.incident(q, l);
      if (lambda < 0) lambda = common;
      if (common != lambda) return std::nullopt;
    }
  for (int l = 0; l < v; ++l)
    for (int m = l + 1; m < v; ++m) {
      int common = 0;
      for (int p = 0; p < v; ++p) common += g.incident(p, l) && g.incident(p, m);
      if (common != lambda) return std::nullopt;
    }
  return DesignParameters{v, k, lambda};
}

std::string to_dot(const IncidenceGeometry& g) {
  std::string out = "graph geometry {\n";
  for (int p = 0; p < g.num_points; ++p)
    out += "  p" + std::to_string(p) + " [shape=circle];\n";
  for (int l = 0; l < g.num_lines; ++l)
    out += "  l" + std::to_string(l) + " [shape=box];\n";
  for (int p = 0; p < g.num_points; ++p)
    for (int l = 0; l < g.num_lines; ++l)
      if (g.incident(p, l))
        out += "  p" + std::to_string(p) + " -- l" + std::to_string(l) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace drumgeo
