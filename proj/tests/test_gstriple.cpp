#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "corpus.hpp"
#include "drumgeo/error.hpp"
#include "drumgeo/exact.hpp"
#include "drumgeo/triple.hpp"

using namespace drumgeo;

TEST_CASE("per-class counts on the order-168 linear group") {
  const GSTriple& t = corpus::fano().triple;
  CHECK(t.group->size() == 168);
  CHECK(t.left.size() == 24);
  CHECK(t.right.size() == 24);

  const auto lc = class_intersection_counts(*t.group, t.left);
  const auto rc = class_intersection_counts(*t.group, t.right);
  REQUIRE(lc.size() == t.group->classes().size());
  CHECK(lc == rc);

  // counts are honest: they sum to the subgroup order
  long long total = 0;
  for (long long c : lc) total += c;
  CHECK(total == 24);
}

TEST_CASE("count check passes on the whole equal-count corpus") {
  for (const auto& [name, t] : corpus::ac_triples()) {
    CAPTURE(name);
    const CheckResult ac = check_ac(*t);
    CHECK(ac.ok);
    CHECK_FALSE(ac.witness.has_value());
    CHECK(check_ec(*t).ok);
  }
}

TEST_CASE("count check fails on the controls with a concrete witness") {
  for (const auto& [name, t] : corpus::non_ac_controls()) {
    CAPTURE(name);
    const CheckResult ac = check_ac(*t);
    CHECK_FALSE(ac.ok);
    REQUIRE(ac.witness.has_value());
    const ClassWitness& w = *ac.witness;
    CHECK(w.left_count != w.right_count);

    // recount the witness class by hand
    long long l = 0, r = 0;
    for (const Perm& x : conjugacy_class(*t->group, w.rep)) {
      if (t->left.contains(x)) ++l;
      if (t->right.contains(x)) ++r;
    }
    CHECK(l == w.left_count);
    CHECK(r == w.right_count);
  }
}

TEST_CASE("meets-iff-meets holds strictly more often than equal counts") {
  // alternating group on 4 letters: left = one double transposition,
  // right = the full Klein subgroup. Every class meets both or neither, but
  // the counts differ.
  const GSTriple& t = corpus::a4_ec();
  CHECK(check_ec(t).ok);
  const CheckResult ac = check_ac(t);
  CHECK_FALSE(ac.ok);
  REQUIRE(ac.witness.has_value());
  CHECK(ac.witness->left_count != ac.witness->right_count);
}

TEST_CASE("conjugator search") {
  SUBCASE("equal-count non-conjugate pair has no conjugator") {
    CHECK_FALSE(find_conjugator(corpus::fano().triple).has_value());
  }

  SUBCASE("actually conjugate subgroups yield a verified witness") {
    // two point stabilizers in the symmetric group on 3 letters
    GroupPtr g = make_group(3, {Perm({1, 0, 2}), Perm({1, 2, 0})});
    const GSTriple t = make_triple(g, {Perm({0, 2, 1})}, {Perm({2, 1, 0})});
    const auto c = find_conjugator(t);
    REQUIRE(c.has_value());
    for (const Perm& x : t.left.elements)
      CHECK(t.right.contains(c->inverse() * x * *c));
  }
}

TEST_CASE("flag battery on the order-168 example") {
  const FlagReport f = check_flags(corpus::fano().triple);
  CHECK(f.ec);
  CHECK(f.ac);
  CHECK(f.ff);
  CHECK(f.max);
  CHECK(f.pair);
  CHECK_FALSE(f.conjugate);
  CHECK_FALSE(f.ac_witness.empty());
  CHECK_FALSE(f.conjugate_witness.empty());
}

TEST_CASE("flag battery flags a conjugate pair as conjugate") {
  GroupPtr g = make_group(3, {Perm({1, 0, 2}), Perm({1, 2, 0})});
  const GSTriple t = make_triple(g, {Perm({0, 2, 1})}, {Perm({2, 1, 0})});
  const FlagReport f = check_flags(t);
  CHECK(f.ec);
  CHECK(f.ac);
  CHECK(f.conjugate);
}

TEST_CASE("common-core reduction") {
  // direct product C2 x C2 acting on 2 points through the first factor only:
  // the second factor is a common normal subgroup of both sides
  GroupPtr g = make_group(4, {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})});
  REQUIRE(g->size() == 4);
  const GSTriple t =
      make_triple(g, {Perm({0, 1, 3, 2})}, {Perm({0, 1, 3, 2})});
  const GSTriple r = reduce_ff(t);
  CHECK(r.group->size() == 2);
  CHECK(r.left.size() == 1);
  CHECK(r.right.size() == 1);
  CHECK(check_flags(r).ff);

  // an already-faithful triple keeps its group order
  const GSTriple rf = reduce_ff(corpus::fano().triple);
  CHECK(rf.group->size() == 168);
}

TEST_CASE("triple isomorphism") {
  const GSTriple& fano = corpus::fano().triple;

  SUBCASE("identical triples are isomorphic") {
    CHECK(are_isomorphic(fano, fano) == TriState::kYes);
  }

  SUBCASE("swapping the sides of this triple is an isomorphism") {
    // an outer automorphism exchanges the two subgroup classes
    const GSTriple swapped{fano.group, fano.right, fano.left};
    CHECK(are_isomorphic(fano, swapped) == TriState::kYes);
  }

  SUBCASE("different group orders are rejected immediately") {
    CHECK(are_isomorphic(fano, corpus::dihedral_triple(3)) == TriState::kNo);
  }

  SUBCASE("tiny budget reports undecided rather than guessing") {
    CHECK(are_isomorphic(fano, fano, 1) == TriState::kUndecided);
  }
}

TEST_CASE("intertwiner space of the order-168 example") {
  const auto basis = intertwiner_space(corpus::fano().triple);
  CHECK(basis.size() == 2);

  const auto inv = find_invertible_intertwiner(basis);
  REQUIRE(inv.has_value());
  const Rational det = determinant(*inv);
  CHECK(det != Rational(0));

  // the found matrix genuinely intertwines the generator actions
  const GSTriple& t = corpus::fano().triple;
  const PermutationAction pa = coset_action(t.group, t.left);
  const PermutationAction qa = coset_action(t.group, t.right);
  for (const Perm& g : t.group->generators()) {
    const ExactMatrix p = permutation_matrix(pa.row(g));
    const ExactMatrix q = permutation_matrix(qa.row(g));
    CHECK(p * *inv == *inv * q);
  }
}

TEST_CASE("intertwiner space exists for every equal-count triple") {
  for (const auto& [name, t] : corpus::ac_triples()) {
    CAPTURE(name);
    if (t->group->size() > 6000) continue;  // keep the unit suite quick
    const auto basis = intertwiner_space(*t);
    CHECK(find_invertible_intertwiner(basis).has_value());
  }
}

TEST_CASE("controls have no invertible intertwiner") {
  for (const auto& [name, t] : corpus::non_ac_controls()) {
    CAPTURE(name);
    const auto basis = intertwiner_space(*t);
    CHECK_FALSE(basis.empty());  // the all-ones matrix always qualifies
    CHECK_FALSE(find_invertible_intertwiner(basis).has_value());
  }
}

TEST_CASE("mismatched coset space sizes are rejected") {
  CHECK_THROWS_AS(intertwiner_space(corpus::a4_ec()), IndexMismatch);
}

TEST_CASE("triple constructor validates membership") {
  GroupPtr g = make_group(3, {Perm({1, 0, 2}), Perm({1, 2, 0})});
  CHECK_THROWS_AS(make_triple(g, {Perm({1, 0, 2, 3})}, {}), Error);
}
