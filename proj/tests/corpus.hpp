#pragma once

// Shared example set used across the test binaries. Everything is built
// once per process and cached; all objects are immutable after construction.

#include <string>
#include <utility>
#include <vector>

#include "drumgeo/gallery.hpp"
#include "drumgeo/geometry.hpp"
#include "drumgeo/triple.hpp"

namespace corpus {

using namespace drumgeo;

inline const ProjectiveGeometry& fano() {
  static const ProjectiveGeometry g = projective_geometry(ProjectiveSpec{3, 2});
  return g;
}

inline const ProjectiveGeometry& pg23() {
  static const ProjectiveGeometry g = projective_geometry(ProjectiveSpec{3, 3});
  return g;
}

inline const ProjectiveGeometry& pg32() {
  static const ProjectiveGeometry g = projective_geometry(ProjectiveSpec{4, 2});
  return g;
}

inline const DGeometry& dihedral(int n) {
  static const DGeometry g3 = dihedral_geometry(3);
  static const DGeometry g4 = dihedral_geometry(4);
  static const DGeometry g5 = dihedral_geometry(5);
  switch (n) {
    case 3: return g3;
    case 4: return g4;
    default: return g5;
  }
}

inline const GSTriple& dihedral_triple(int n) {
  static const GSTriple t3 = triple_at_incident_flag(dihedral(3));
  static const GSTriple t4 = triple_at_incident_flag(dihedral(4));
  static const GSTriple t5 = triple_at_incident_flag(dihedral(5));
  switch (n) {
    case 3: return t3;
    case 4: return t4;
    default: return t5;
  }
}

inline const QuadraticDesign& design_hyp() {
  static const QuadraticDesign d =
      quadratic_design(QuadraticDesignSpec{2, FormType::kHyperbolic});
  return d;
}

inline const QuadraticDesign& design_ell() {
  static const QuadraticDesign d =
      quadratic_design(QuadraticDesignSpec{2, FormType::kElliptic});
  return d;
}

inline const GSTriple& design_hyp_triple() {
  static const GSTriple t = triple_at_incident_flag(design_hyp().geometry);
  return t;
}

inline const GSTriple& design_ell_triple() {
  static const GSTriple t = triple_at_incident_flag(design_ell().geometry);
  return t;
}

// Elementwise conjugate but not almost conjugate: inside the alternating
// group on 4 letters, a single double transposition against the full Klein
// subgroup. The double-transposition class meets both, with counts 1 and 3.
inline const GSTriple& a4_ec() {
  static const GSTriple t = [] {
    GroupPtr a4 = make_group(
        4, {Perm({1, 2, 0, 3}), Perm({1, 0, 3, 2})},
        PermGroup::default_cap(), "a4");
    return make_triple(a4, {Perm({1, 0, 3, 2})},
                       {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  }();
  return t;
}

// Equal-order, equal-index pair in the symmetric group on 4 letters that is
// not elementwise conjugate: the Klein four-group generated by two disjoint
// transpositions against the cyclic group of a 4-cycle.
inline const GSTriple& s4_control() {
  static const GSTriple t = [] {
    GroupPtr s4 = make_group(
        4, {Perm({1, 0, 2, 3}), Perm({1, 2, 3, 0})},
        PermGroup::default_cap(), "s4");
    return make_triple(s4, {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})},
                       {Perm({1, 2, 3, 0})});
  }();
  return t;
}

// Another non-example: in the dihedral group of the square, a reflection
// yields order 2 alongside the central rotation, also order 2, but their
// classes differ.
inline const GSTriple& d4_control() {
  static const GSTriple t = [] {
    GroupPtr d4 = make_group(
        4, {Perm({1, 2, 3, 0}), Perm({2, 1, 0, 3})},
        PermGroup::default_cap(), "d4");
    return make_triple(d4, {Perm({2, 1, 0, 3})}, {Perm({2, 3, 0, 1})});
  }();
  return t;
}

inline const GSTriple& wreath_fano_s2() {
  static const GSTriple t = wreath_triple(
      WreathSpec{fano().triple, 2, symmetric_top(2)}, 1u << 20);
  return t;
}

// The full round-trip corpus of named triples.
inline std::vector<std::pair<std::string, const GSTriple*>> all_triples() {
  return {{"fano", &fano().triple},
          {"pg23", &pg23().triple},
          {"pg32", &pg32().triple},
          {"dihedral3", &dihedral_triple(3)},
          {"dihedral4", &dihedral_triple(4)},
          {"dihedral5", &dihedral_triple(5)},
          {"design_hyp", &design_hyp_triple()},
          {"design_ell", &design_ell_triple()},
          {"a4_ec", &a4_ec()},
          {"wreath", &wreath_fano_s2()}};
}

// Triples whose coset spaces have equal sizes and whose class counts agree,
// i.e. the ones where an invertible intertwiner must exist. The square
// dihedral case is excluded: its vertex and side reflections fall in
// different classes, so the counts disagree (by design, see the controls).
inline std::vector<std::pair<std::string, const GSTriple*>> ac_triples() {
  return {{"fano", &fano().triple},
          {"pg23", &pg23().triple},
          {"pg32", &pg32().triple},
          {"dihedral3", &dihedral_triple(3)},
          {"dihedral5", &dihedral_triple(5)},
          {"design_hyp", &design_hyp_triple()},
          {"design_ell", &design_ell_triple()},
          {"wreath", &wreath_fano_s2()}};
}

// Equal-index controls where the class counts disagree.
inline std::vector<std::pair<std::string, const GSTriple*>> non_ac_controls() {
  return {{"s4_control", &s4_control()},
          {"d4_control", &d4_control()},
          {"dihedral4", &dihedral_triple(4)}};
}

// Named geometries with their acting groups.
inline std::vector<std::pair<std::string, const DGeometry*>> all_geometries() {
  return {{"fano", &fano().geometry},
          {"pg23", &pg23().geometry},
          {"pg32", &pg32().geometry},
          {"dihedral3", &dihedral(3)},
          {"dihedral4", &dihedral(4)},
          {"dihedral5", &dihedral(5)},
          {"design_hyp", &design_hyp().geometry},
          {"design_ell", &design_ell().geometry}};
}

}  // namespace corpus
