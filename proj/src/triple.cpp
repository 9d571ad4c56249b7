#include "drumgeo/triple.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>
#include <utility>

#include "drumgeo/error.hpp"

namespace drumgeo {

GSTriple make_triple(GroupPtr group, std::vector<Perm> left_generators,
                     std::vector<Perm> right_generators) {
  Subgroup l = make_subgroup(group, std::move(left_generators));
  Subgroup r = make_subgroup(group, std::move(right_generators));
  return GSTriple{std::move(group), std::move(l), std::move(r)};
}

std::vector<long long> class_intersection_counts(const PermGroup& g,
                                                 const Subgroup& h) {
  std::vector<long long> counts(g.classes().size(), 0);
  for (const Perm& u : h.elements) ++counts[g.class_of(u)];
  return counts;
}

namespace {

CheckResult compare_class_counts(const GSTriple& t, bool compare_counts) {
  const PermGroup& g = *t.group;
  std::vector<long long> cl = class_intersection_counts(g, t.left);
  std::vector<long long> cr = class_intersection_counts(g, t.right);
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    bool equal = compare_counts ? cl[c] == cr[c] : (cl[c] > 0) == (cr[c] > 0);
    if (!equal)
      return CheckResult{false, ClassWitness{g.classes()[c].rep, cl[c], cr[c]}};
  }
  return CheckResult{true, std::nullopt};
}

}  // namespace

CheckResult check_ac(const GSTriple& t) { return compare_class_counts(t, true); }

CheckResult check_ec(const GSTriple& t) { return compare_class_counts(t, false); }

std::optional<Perm> find_conjugator(const GSTriple& t) {
  if (t.left.size() != t.right.size()) return std::nullopt;
  // g^{-1} U g = V iff every generator of U conjugates into V (the image is
  // then a subgroup of V of full size), so only generators need conjugating.
  for (const Perm& g : t.group->elements()) {
    bool all_in = true;
    for (const Perm& u : t.left.generators)
      if (!t.right.contains(u.conjugated_by(g))) {
        all_in = false;
        break;
      }
    if (all_in) return g;
  }
  return std::nullopt;
}

namespace {

std::string count_witness(const ClassWitness& w) {
  return "class of " + to_string(w.rep) + " has " + std::to_string(w.left_count) +
         " members in the left subgroup vs " + std::to_string(w.right_count) +
         " in the right";
}

// Primitivity of one coset action, with the index-1 degeneracy folded into a
// plain "not maximal" answer.
bool side_is_maximal(GroupPtr g, const Subgroup& h, std::string* note) {
  if (h.size() == g->size()) {
    *note = "subgroup equals the whole group";
    return false;
  }
  PermutationAction a = coset_action(g, h);
  if (is_primitive(a)) {
    *note = "coset action of degree " + std::to_string(a.num_points) + " is primitive";
    return true;
  }
  *note = "coset action of degree " + std::to_string(a.num_points) +
          " admits a nontrivial block system";
  return false;
}

}  // namespace

FlagReport check_flags(const GSTriple& t) {
  const PermGroup& g = *t.group;
  FlagReport r;

  const std::size_t nclasses = g.classes().size();
  CheckResult ac = check_ac(t);
  r.ac = ac.ok;
  r.ac_witness = ac.ok ? "all " + std::to_string(nclasses) + " classes have equal counts"
                       : count_witness(*ac.witness);
  CheckResult ec = check_ec(t);
  r.ec = ec.ok;
  r.ec_witness = ec.ok ? "all " + std::to_string(nclasses) + " classes meet both or neither"
                       : count_witness(*ec.witness);

  Subgroup core_l = core(t.group, t.left);
  Subgroup core_r = core(t.group, t.right);
  const Subgroup& small = core_l.size() <= core_r.size() ? core_l : core_r;
  const Subgroup& big = core_l.size() <= core_r.size() ? core_r : core_l;
  r.ff = true;
  for (const Perm& x : small.elements)
    if (!x.is_identity() && big.contains(x)) {
      r.ff = false;
      r.ff_witness = "normal element " + to_string(x) + " lies in both subgroups";
      break;
    }
  if (r.ff)
    r.ff_witness = "cores of orders " + std::to_string(core_l.size()) + " and " +
                   std::to_string(core_r.size()) + " meet only in the identity";

  std::string note_l, note_r;
  bool max_l = side_is_maximal(t.group, t.left, &note_l);
  bool max_r = side_is_maximal(t.group, t.right, &note_r);
  r.max = max_l && max_r;
  r.max_witness = "left: " + note_l + "; right: " + note_r;

  r.pair = t.left.size() == t.right.size();
  r.pair_witness = "orders " + std::to_string(t.left.size()) + " vs " +
                   std::to_string(t.right.size());

  std::optional<Perm> conj = find_conjugator(t);
  r.conjugate = conj.has_value();
  r.conjugate_witness =
      conj ? "conjugated by " + to_string(*conj)
           : "no conjugator among all " + std::to_string(g.size()) + " elements";
  return r;
}

GSTriple reduce_ff(const GSTriple& t) {
  PermutationAction pa = coset_action(t.group, t.left);
  PermutationAction la = coset_action(t.group, t.right);
  const int p = pa.num_points;
  const int q = la.num_points;
  const std::size_t n = t.group->size();

  auto image_of = [&](std::size_t i) {
    std::vector<int> im(p + q);
    for (int x = 0; x < p; ++x) im[x] = pa.table[i][x];
    for (int x = 0; x < q; ++x) im[p + x] = p + la.table[i][x];
    return Perm(std::move(im));
  };

  std::vector<Perm> image_elements;
  std::unordered_set<Perm, PermHash> seen;
  for (std::size_t i = 0; i < n; ++i) {
    Perm im = image_of(i);
    if (seen.insert(im).second) image_elements.push_back(std::move(im));
  }

  auto map_gens = [&](const std::vector<Perm>& gens) {
    std::vector<Perm> out;
    std::unordered_set<Perm, PermHash> have;
    for (const Perm& x : gens) {
      Perm im = image_of(static_cast<std::size_t>(t.group->index_of(x)));
      if (!im.is_identity() && have.insert(im).second) out.push_back(std::move(im));
    }
    return out;
  };

  GroupPtr image = group_from_elements(
      p + q, map_gens(t.group->generators()), std::move(image_elements),
      t.group->name().empty() ? "reduced" : t.group->name() + "-reduced");
  Subgroup left = make_subgroup(image, map_gens(t.left.generators));
  Subgroup right = make_subgroup(image, map_gens(t.right.generators));
  return GSTriple{std::move(image), std::move(left), std::move(right)};
}

const char* to_string(TriState s) {
  switch (s) {
    case TriState::kYes: return "yes";
    case TriState::kNo: return "no";
    default: return "undecided";
  }
}

namespace {

// Multiset fingerprint of a subgroup inside its parent: how many members of
// each (element order, class size) type it contains. Preserved by any group
// isomorphism composed with conjugation.
std::map<std::pair<long long, std::size_t>, int> subgroup_fingerprint(
    const PermGroup& g, const Subgroup& h) {
  std::map<std::pair<long long, std::size_t>, int> fp;
  for (const Perm& x : h.elements)
    ++fp[{x.order(), g.classes()[g.class_of(x)].members.size()}];
  return fp;
}

std::optional<Perm> conjugator_between(const PermGroup& g,
                                       const std::vector<Perm>& from_gens,
                                       std::size_t from_size,
                                       const Subgroup& to) {
  if (from_size != to.size()) return std::nullopt;
  for (const Perm& c : g.elements()) {
    bool ok = true;
    for (const Perm& x : from_gens)
      if (!to.contains(x.conjugated_by(c))) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return std::nullopt;
}

struct IsoSearch {
  const PermGroup& g1;
  const PermGroup& g2;
  const GSTriple& t1;
  const GSTriple& t2;
  std::vector<Perm> gens;                       // generating subset of g1
  std::vector<std::vector<int>> candidates;     // g2 element indices per generator
  std::vector<int> chosen;                      // current assignment
  long long budget;
  bool exhausted = false;

  // Verifies that mapping gens -> images extends to an isomorphism, by
  // walking the whole Cayley graph of g1 and checking every edge once. On
  // success fills `phi` with the image of every g1 element (indexed like
  // g1.elements()).
  bool extends_to_isomorphism(std::vector<int>* phi_out) const {
    const std::size_t n = g1.size();
    std::vector<int> phi(n, -1);
    const int id1 = g1.index_of(Perm::identity(g1.degree()));
    phi[id1] = g2.index_of(Perm::identity(g2.degree()));
    std::vector<int> order_visit{id1};
    order_visit.reserve(n);
    std::vector<char> used(g2.size(), 0);
    used[phi[id1]] = 1;
    for (std::size_t head = 0; head < order_visit.size(); ++head) {
      const int e = order_visit[head];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Perm prod = g1.elements()[e] * gens[s];
        const int pi = g1.index_of(prod);
        const Perm img = g2.elements()[phi[e]] * g2.elements()[chosen[s]];
        const int img_i = g2.index_of(img);
        if (phi[pi] < 0) {
          if (used[img_i]) return false;  // not injective
          phi[pi] = img_i;
          used[img_i] = 1;
          order_visit.push_back(pi);
        } else if (phi[pi] != img_i) {
          return false;  // not well-defined
        }
      }
    }
    if (order_visit.size() != n) return false;  // gens did not generate g1
    *phi_out = std::move(phi);
    return true;
  }

  bool subgroups_match(const std::vector<int>& phi) const {
    auto image_gens = [&](const std::vector<Perm>& gens_in) {
      std::vector<Perm> out;
      out.reserve(gens_in.size());
      for (const Perm& x : gens_in)
        out.push_back(g2.elements()[phi[g1.index_of(x)]]);
      return out;
    };
    return conjugator_between(g2, image_gens(t1.left.generators),
                              t1.left.size(), t2.left)
               .has_value() &&
           conjugator_between(g2, image_gens(t1.right.generators),
                              t1.right.size(), t2.right)
               .has_value();
  }

  bool dfs(std::size_t depth) {
    if (depth == gens.size()) {
      std::vector<int> phi;
      return extends_to_isomorphism(&phi) && subgroups_match(phi);
    }
    for (int cand : candidates[depth]) {
      if (--budget < 0) {
        exhausted = true;
        return false;
      }
      chosen[depth] = cand;
      // Prune on pairwise product orders before going deeper.
      bool consistent = true;
      for (std::size_t j = 0; j < depth && consistent; ++j) {
        const Perm p1 = gens[j] * gens[depth];
        const Perm p2 = g2.elements()[chosen[j]] * g2.elements()[cand];
        if (p1.order() != p2.order()) consistent = false;
      }
      if (consistent && dfs(depth + 1)) return true;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

TriState are_isomorphic(const GSTriple& a, const GSTriple& b, long long budget) {
  const PermGroup& g1 = *a.group;
  const PermGroup& g2 = *b.group;
  if (g1.size() != g2.size()) return TriState::kNo;
  if (a.left.size() != b.left.size() || a.right.size() != b.right.size())
    return TriState::kNo;

  // Class-structure fingerprints are isomorphism invariants; compare before
  // searching.
  auto class_fp = [](const PermGroup& g) {
    std::map<std::pair<long long, std::size_t>, int> fp;
    for (const ConjugacyClass& c : g.classes())
      ++fp[{c.rep.order(), c.members.size()}];
    return fp;
  };
  if (class_fp(g1) != class_fp(g2)) return TriState::kNo;
  if (subgroup_fingerprint(g1, a.left) != subgroup_fingerprint(g2, b.left) ||
      subgroup_fingerprint(g1, a.right) != subgroup_fingerprint(g2, b.right))
    return TriState::kNo;

  if (g1.size() == 1) return TriState::kYes;

  IsoSearch search{g1, g2, a, b, minimal_generating_subset(g1.elements()),
                   {},  {},  budget};
  search.candidates.resize(search.gens.size());
  search.chosen.assign(search.gens.size(), -1);
  for (std::size_t s = 0; s < search.gens.size(); ++s) {
    const Perm& gen = search.gens[s];
    const long long ord = gen.order();
    const std::size_t class_size =
        g1.classes()[g1.class_of(gen)].members.size();
    std::vector<int>& cands = search.candidates[s];
    // When the generator itself lives in g2 (same degree), try it first so
    // identity isomorphisms are found immediately.
    int self_index = -1;
    if (gen.degree() == g2.degree() && g2.contains(gen)) {
      self_index = g2.index_of(gen);
      cands.push_back(self_index);
    }
    for (std::size_t i = 0; i < g2.size(); ++i) {
      const Perm& c = g2.elements()[i];
      if (static_cast<int>(i) == self_index) continue;
      if (c.order() != ord) continue;
      if (g2.classes()[g2.class_of(static_cast<int>(i))].members.size() != class_size)
        continue;
      cands.push_back(static_cast<int>(i));
    }
  }

  if (search.dfs(0)) return TriState::kYes;
  return search.exhausted ? TriState::kUndecided : TriState::kNo;
}

std::vector<ExactMatrix> intertwiner_space(const GSTriple& t) {
  PermutationAction pa = coset_action(t.group, t.left);
  PermutationAction la = coset_action(t.group, t.right);
  if (pa.num_points != la.num_points)
    throw IndexMismatch("coset spaces have sizes " +
                        std::to_string(pa.num_points) + " and " +
                        std::to_string(la.num_points));
  std::vector<std::vector<int>> rows, cols;
  for (const Perm& g : t.group->generators()) {
    rows.push_back(pa.row(g));
    cols.push_back(la.row(g));
  }
  if (rows.empty()) {
    // Trivial group: no constraints beyond degree equality.
    rows.push_back(std::vector<int>(pa.num_points));
    cols.push_back(std::vector<int>(la.num_points));
    for (int i = 0; i < pa.num_points; ++i) rows.back()[i] = cols.back()[i] = i;
  }
  return intertwiner_basis(rows, cols);
}

std::optional<ExactMatrix> find_invertible_intertwiner(
    const std::vector<ExactMatrix>& basis, std::uint64_t seed) {
  return find_invertible_combination(basis, seed);
}

}  // namespace drumgeo
