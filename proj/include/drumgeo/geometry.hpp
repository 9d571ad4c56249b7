#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drumgeo/action.hpp"
#include "drumgeo/exact.hpp"
#include "drumgeo/triple.hpp"

namespace drumgeo {

// Row-major packed bit matrix; rows are points, columns are lines.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        words_((static_cast<std::size_t>(rows) * cols + 63) / 64, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int i, int j) const {
    const std::size_t b = static_cast<std::size_t>(i) * cols_ + j;
    return (words_[b >> 6] >> (b & 63)) & 1u;
  }
  void set(int i, int j, bool v) {
    const std::size_t b = static_cast<std::size_t>(i) * cols_ + j;
    if (v)
      words_[b >> 6] |= std::uint64_t(1) << (b & 63);
    else
      words_[b >> 6] &= ~(std::uint64_t(1) << (b & 63));
  }
  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bipartite point-line structure. Point and line numbering is fixed at
// construction so that every derived matrix is reproducible bit for bit.
struct IncidenceGeometry {
  int num_points = 0;
  int num_lines = 0;
  BitMatrix incidence;

  bool incident(int point, int line) const { return incidence.get(point, line); }
  int point_degree(int point) const;
  int line_degree(int line) const;
};

// Geometry together with a transitive incidence-preserving group action on
// each sort. The two actions share one acting group.
struct DGeometry {
  IncidenceGeometry geometry;
  GroupPtr group;
  PermutationAction point_action;
  PermutationAction line_action;
};

// Validates that the actions belong to the given group, are transitive, and
// that every generator preserves incidence; throws PreconditionUnmet
// otherwise.
DGeometry make_dgeometry(IncidenceGeometry geometry, GroupPtr group,
                         PermutationAction point_action,
                         PermutationAction line_action);

// Points = left cosets of the left subgroup, lines = left cosets of the
// right one, a point and a line incident iff the cosets intersect, group
// acting by left translation on both sides.
DGeometry build_drum_geometry(const GSTriple& t);

struct VerifyResult {
  bool ok = true;
  std::optional<Perm> witness;  // class representative violating the law
  int witness_fixed_points = 0;
  int witness_fixed_lines = 0;
  std::string summary;
};

// Every group element fixes a point iff it fixes a line. Checked on one
// representative per conjugacy class (fixed counts are class functions).
VerifyResult verify_D(const DGeometry& g);

// Every group element fixes exactly as many points as lines.
VerifyResult verify_SD(const DGeometry& g);

// Stabilizer pair of a chosen point and line; throws NotTransitive when
// either action fails transitivity.
GSTriple triple_from_geometry(const DGeometry& g, int point = 0, int line = 0);

// Stabilizer pair at the first line through the given point, so that
// rebuilding the coset geometry from the triple reproduces the original
// rather than its complement. Throws PreconditionUnmet for an isolated
// point.
GSTriple triple_at_incident_flag(const DGeometry& g, int point = 0);

ExactMatrix incidence_matrix(const IncidenceGeometry& g);

// Exact check that the point permutation matrix of alpha, the incidence
// matrix, and the line permutation matrix satisfy P * A == A * L.
bool verify_pa_eq_al(const DGeometry& g, const Perm& alpha);

struct SuperStrongResult {
  bool super_strong = false;
  Rational det;
};

// Nonsingularity of the (square) incidence matrix, with its exact
// determinant. Throws NotSquare for rectangular geometries.
SuperStrongResult is_super_strong(const IncidenceGeometry& g);

// Sort-swapping incidence-preserving bijection pair, if one exists.
struct Duality {
  std::vector<int> point_to_line;
  std::vector<int> line_to_point;
};

std::optional<Duality> find_duality(const IncidenceGeometry& g,
                                    long long budget = 10'000'000);

// All sort-preserving automorphisms as permutations of the combined domain
// (points first, then lines shifted by num_points), enumerated by
// backtracking; nullopt when the node budget runs out.
std::optional<GroupPtr> automorphism_group(const IncidenceGeometry& g,
                                           long long budget = 10'000'000);

// The acting group's image on the combined point+line domain.
GroupPtr combined_group(const DGeometry& g);
Perm combined_perm(const DGeometry& g, const Perm& a);

// Stabilizer pair inside a transitive subgroup of the acting group; throws
// NotTransitiveSubgroup when the subgroup loses transitivity on either sort.
GSTriple derived_triple_subgroup(const DGeometry& g, const Subgroup& x,
                                 int point = 0, int line = 0);

// Stabilizer pair inside an overgroup acting on the combined domain. The
// overgroup must preserve sorts and incidence and contain the image of the
// geometry's own group; the geometry must be super strong or a symmetric
// design (the hypotheses under which the enlarged pair is guaranteed to
// share class counts, which the construction re-verifies).
GSTriple derived_triple_overgroup(const DGeometry& g, GroupPtr b,
                                  int point = 0, int line = 0);

struct DesignParameters {
  int v = 0, k = 0, lambda = 0;
};

// Parameters (v, k, lambda) when the geometry is a symmetric 2-design:
// equal point and line counts v >= 2, all degrees k on both sorts, every
// point pair on lambda common lines and every line pair sharing lambda
// points.
std::optional<DesignParameters> is_symmetric_design(const IncidenceGeometry& g);

std::string to_dot(const IncidenceGeometry& g);

}  // namespace drumgeo
