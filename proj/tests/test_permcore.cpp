#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "drumgeo/action.hpp"
#include "drumgeo/error.hpp"
#include "drumgeo/group.hpp"
#include "drumgeo/perm.hpp"

using namespace drumgeo;

namespace {

GroupPtr s3() {
  return make_group(3, {Perm({1, 0, 2}), Perm({1, 2, 0})},
                    PermGroup::default_cap(), "s3");
}

GroupPtr s4() {
  return make_group(4, {Perm({1, 0, 2, 3}), Perm({1, 2, 3, 0})},
                    PermGroup::default_cap(), "s4");
}

GroupPtr c4() {
  return make_group(4, {Perm({1, 2, 3, 0})}, PermGroup::default_cap(), "c4");
}

}  // namespace

TEST_CASE("permutation basics") {
  const Perm a({1, 2, 0});  // 0->1->2->0
  const Perm b({1, 0, 2});  // swap 0,1

  SUBCASE("composition applies the right factor first") {
    const Perm ab = a * b;
    CHECK(ab(0) == a(b(0)));
    CHECK(ab(1) == a(b(1)));
    CHECK(ab(2) == a(b(2)));
    CHECK(ab == Perm({2, 1, 0}));
  }

  SUBCASE("inverse and identity") {
    CHECK((a * a.inverse()).is_identity());
    CHECK(Perm::identity(3).is_identity());
    CHECK(Perm::identity(3).num_fixed() == 3);
  }

  SUBCASE("order") {
    CHECK(a.order() == 3);
    CHECK(b.order() == 2);
    CHECK(Perm::identity(5).order() == 1);
    CHECK(Perm({1, 0, 3, 4, 2}).order() == 6);
  }

  SUBCASE("conjugation moves the support") {
    // b^-1 * a * b relabels the 3-cycle through b
    const Perm c = a.conjugated_by(b);
    CHECK(c.order() == 3);
    CHECK(c == b.inverse() * a * b);
  }

  SUBCASE("lexicographic comparison puts the identity first") {
    CHECK(Perm::identity(3) < a);
    CHECK(Perm::identity(3) < b);
  }

  SUBCASE("cycle notation") {
    CHECK(to_string(Perm::identity(4)) == "()");
    CHECK(to_string(Perm({1, 2, 0})) == "(0 1 2)");
    CHECK(to_string(Perm({1, 0, 3, 2})) == "(0 1)(2 3)");
    CHECK(to_string(Perm({0, 1, 3, 2})) == "(2 3)");
  }

  SUBCASE("invalid images rejected") {
    CHECK_THROWS_AS(Perm({0, 0, 1}), InvalidPerm);
    CHECK_THROWS_AS(Perm({0, 3, 1}), InvalidPerm);
  }
}

TEST_CASE("group closure and element order") {
  const GroupPtr g = s3();
  CHECK(g->size() == 6);
  CHECK(g->degree() == 3);
  CHECK(g->name() == "s3");
  CHECK(g->elements()[0].is_identity());
  CHECK(std::is_sorted(g->elements().begin(), g->elements().end()));

  for (const Perm& x : g->elements()) {
    CHECK(g->contains(x));
    CHECK(g->elements()[g->index_of(x)] == x);
  }
  CHECK_FALSE(g->contains(Perm({0, 1, 2, 3})) );
  CHECK_THROWS_AS(g->index_of(Perm({2, 1, 0, 3})), NotMember);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(make_group(4, {Perm({1, 0, 2, 3}), Perm({1, 2, 3, 0})}, 10),
                  CapExceeded);
}

TEST_CASE("conjugacy classes of the symmetric group on 3 letters") {
  const GroupPtr g = s3();
  const auto& cls = g->classes();
  REQUIRE(cls.size() == 3);

  std::multiset<std::size_t> sizes;
  for (const auto& c : cls) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  for (const auto& c : cls) {
    // the representative is the least member and membership is consistent
    CHECK(g->elements()[c.members.front()] == c.rep);
    for (int idx : c.members)
      CHECK(g->class_of(idx) == g->class_of(c.rep));
  }
}

TEST_CASE("class and centralizer orders multiply to the group order") {
  const GroupPtr g = s4();
  for (const auto& c : g->classes()) {
    CHECK(conjugacy_class(*g, c.rep).size() == c.members.size());
    CHECK(centralizer_order(*g, c.rep) * static_cast<long long>(c.members.size()) ==
          static_cast<long long>(g->size()));
  }
}

TEST_CASE("subgroups") {
  const GroupPtr g = s4();
  const Subgroup v4 = make_subgroup(g, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  CHECK(v4.size() == 4);
  CHECK(v4.contains(Perm({3, 2, 1, 0})));

  CHECK(trivial_subgroup(g).size() == 1);
  CHECK(full_subgroup(g).size() == 24);
  CHECK(as_group(v4, "v4")->size() == 4);

  CHECK_THROWS_AS(make_subgroup(s3(), {Perm({1, 0, 2, 3})}), NotSubgroup);

  const auto small = minimal_generating_subset(full_subgroup(g).elements);
  CHECK(small.size() <= 3);
  CHECK(make_subgroup(g, small).size() == 24);
}

TEST_CASE("coset actions") {
  const GroupPtr g = s4();
  const Subgroup h = make_subgroup(g, {Perm({1, 0, 2, 3}), Perm({0, 2, 1, 3})});
  REQUIRE(h.size() == 6);
  const PermutationAction a = coset_action(g, h);
  CHECK(a.num_points == 4);
  CHECK(a.is_transitive());

  SUBCASE("point 0 is the subgroup's own coset") {
    for (const Perm& x : h.elements) CHECK(a.act(x, 0) == 0);
    int stab = 0;
    for (const Perm& x : g->elements())
      if (a.act(x, 0) == 0) ++stab;
    CHECK(stab == 6);
  }

  SUBCASE("the action is a homomorphism") {
    const Perm x = g->elements()[5], y = g->elements()[17];
    for (int p = 0; p < a.num_points; ++p)
      CHECK(a.act(x * y, p) == a.act(x, a.act(y, p)));
  }

  SUBCASE("fixed point count matches the class-data formula") {
    for (const auto& c : g->classes())
      CHECK(fixed_point_formula(*g, c.rep, h) == fixed_points(a, c.rep));
  }
}

TEST_CASE("fixed point formula is constant on classes") {
  const GroupPtr g = s4();
  const Subgroup h = make_subgroup(g, {Perm({1, 2, 3, 0})});
  for (const auto& c : g->classes()) {
    const long long want = fixed_point_formula(*g, c.rep, h);
    for (int idx : c.members)
      CHECK(fixed_point_formula(*g, g->elements()[idx], h) == want);
  }
}

TEST_CASE("primitivity") {
  // natural action of the symmetric group on 3 points: primitive
  const GroupPtr g3 = s3();
  CHECK(is_primitive(coset_action(g3, make_subgroup(g3, {Perm({0, 2, 1})}))));

  // regular action of the cyclic group of order 4: blocks {0,2},{1,3}
  const GroupPtr g4 = c4();
  CHECK_FALSE(is_primitive(coset_action(g4, trivial_subgroup(g4))));

  // one-point actions are degenerate
  CHECK_THROWS_AS(is_primitive(coset_action(g4, full_subgroup(g4))),
                  DegenerateAction);
}

TEST_CASE("kernels and cores") {
  const GroupPtr g = s3();
  const Subgroup a3 = make_subgroup(g, {Perm({1, 2, 0})});

  // a normal subgroup is its own core
  const Subgroup k = core(g, a3);
  CHECK(k.size() == 3);
  for (const Perm& x : a3.elements) CHECK(k.contains(x));

  // a non-normal one has trivial core
  CHECK(core(g, make_subgroup(g, {Perm({1, 0, 2})})).size() == 1);

  const PermutationAction act = coset_action(g, a3);
  CHECK(action_kernel(act).size() == 3);
}

TEST_CASE("group from closed element set") {
  const GroupPtr g = s3();
  GroupPtr copy = group_from_elements(3, g->generators(), g->elements(), "s3b");
  CHECK(copy->size() == 6);
  CHECK(copy->classes().size() == 3);
}
