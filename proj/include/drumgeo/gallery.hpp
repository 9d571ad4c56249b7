#pragma once

#include <utility>

#include "drumgeo/domain.hpp"
#include "drumgeo/geometry.hpp"
#include "drumgeo/triple.hpp"

namespace drumgeo {

// Projective point-hyperplane geometry over a prime field, together with
// the stabilizer pair of the first point and first hyperplane.
struct ProjectiveSpec {
  int n = 3;  // matrix size; the geometry lives in dimension n-1
  int p = 2;  // field characteristic, must be prime
};

struct ProjectiveGeometry {
  DGeometry geometry;
  GSTriple triple;
};

// Points are the normalized vectors of F_p^n (first nonzero entry 1, listed
// lexicographically), hyperplanes the normalized dual vectors, incidence the
// vanishing of the dot pairing. The group is generated by the images of all
// elementary transvections plus one primitive-root dilation, acting on
// points and hyperplanes together.
ProjectiveGeometry projective_geometry(
    const ProjectiveSpec& spec, std::size_t cap = PermGroup::default_cap());

// Symmetric design of a nondegenerate quadratic form on F_2^(2m): points are
// the vectors, blocks the translates of {v : q(v) = 1}, acting group the
// translations.
enum class FormType { kHyperbolic, kElliptic };

struct QuadraticDesignSpec {
  int m = 2;  // half the dimension; m >= 2
  FormType form = FormType::kHyperbolic;
};

struct QuadraticDesign {
  DGeometry geometry;
  DesignParameters parameters;
};

QuadraticDesign quadratic_design(const QuadraticDesignSpec& spec,
                                 std::size_t cap = PermGroup::default_cap());

// Vertices and sides of the regular n-gon under the full dihedral group;
// point i lies on lines i and i+1 (mod n).
DGeometry dihedral_geometry(int n);

// Wreath product of a base triple with a transitive top group: `copies`
// independent copies of the base acting on disjoint blocks of its combined
// coset domain, with the top group permuting the blocks. Subgroups are the
// wreath products of the base subgroups with the same top.
struct WreathSpec {
  GSTriple base;
  int copies = 2;
  GroupPtr top;  // transitive, degree == copies
};

GSTriple wreath_triple(const WreathSpec& spec,
                       std::size_t cap = PermGroup::default_cap());

GroupPtr symmetric_top(int n);
GroupPtr cyclic_top(int n);

// The classical pair of 7-tile planar domains, each a tree-connected union
// of seven unit-leg right triangles: same area, same perimeter, not
// congruent.
std::pair<TileDomain, TileDomain> gww_domains();

}  // namespace drumgeo
