#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drumgeo/action.hpp"
#include "drumgeo/exact.hpp"
#include "drumgeo/group.hpp"

namespace drumgeo {

// A group with a distinguished pair of subgroups. The interesting cases are
// the ones where the two coset actions are inequivalent yet share their
// permutation character.
struct GSTriple {
  GroupPtr group;
  Subgroup left;
  Subgroup right;
};

GSTriple make_triple(GroupPtr group, std::vector<Perm> left_generators,
                     std::vector<Perm> right_generators);

// Witness for a failed per-class comparison: the class representative plus
// how many of its members land in each subgroup.
struct ClassWitness {
  Perm rep;
  long long left_count = 0;
  long long right_count = 0;
};

struct CheckResult {
  bool ok = true;
  std::optional<ClassWitness> witness;
};

// Almost conjugate: every conjugacy class meets both subgroups in equally
// many elements. Exhaustive over all classes.
CheckResult check_ac(const GSTriple& t);

// Elementwise conjugate: a class meets the left subgroup iff it meets the
// right one. Strictly weaker than the count version above.
CheckResult check_ec(const GSTriple& t);

// Whether some g in the group conjugates left onto right; returns a witness
// conjugator when one exists. Exhaustive over the group.
std::optional<Perm> find_conjugator(const GSTriple& t);

// Full flag battery. Witness strings describe the violating object for a
// false flag and the exhaustiveness bound for a true one.
struct FlagReport {
  bool ec = false, ac = false, ff = false, max = false, pair = false;
  bool conjugate = false;
  std::string ec_witness, ac_witness, ff_witness, max_witness, pair_witness;
  std::string conjugate_witness;
};

FlagReport check_flags(const GSTriple& t);

// Image of the triple under the action on both coset spaces glued side by
// side. The kernel of that action is the largest normal subgroup sitting in
// both subgroups, so the image always carries the trivial-common-core flag,
// and per-class intersection counts survive the quotient.
GSTriple reduce_ff(const GSTriple& t);

enum class TriState { kYes, kNo, kUndecided };
const char* to_string(TriState s);

// Triple isomorphism: a group isomorphism carrying the left subgroup into a
// conjugate of the other left subgroup and likewise on the right. The search
// maps a generating set onto candidate images (pruned by element order and
// class size) and verifies multiplicativity over the whole Cayley graph;
// kUndecided when the assignment budget runs out.
TriState are_isomorphic(const GSTriple& a, const GSTriple& b,
                        long long budget = 1'000'000);

// Basis of the space of matrices intertwining the two coset actions,
// i.e. {T : P_g T = T Q_g for the permutation matrices P_g, Q_g of every
// generator g on left and right cosets}. Throws IndexMismatch when the coset
// spaces have different sizes.
std::vector<ExactMatrix> intertwiner_space(const GSTriple& t);

// First invertible combination found by the deterministic coefficient
// search, if any. An invertible intertwiner exists iff the triple passes the
// per-class count check.
std::optional<ExactMatrix> find_invertible_intertwiner(
    const std::vector<ExactMatrix>& basis, std::uint64_t seed = kDefaultSeed);

// Convenience: per-class intersection counts |class ∩ h| indexed like
// g->classes().
std::vector<long long> class_intersection_counts(const PermGroup& g,
                                                 const Subgroup& h);

}  // namespace drumgeo
