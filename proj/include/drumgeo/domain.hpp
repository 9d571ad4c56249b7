#pragma once

#include <array>
#include <utility>
#include <vector>

#include "drumgeo/exact.hpp"

namespace drumgeo {

struct RPoint {
  Rational x, y;
  bool operator==(const RPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const RPoint& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

struct Triangle {
  std::array<RPoint, 3> v;
};

// Union of triangles with exact rational vertices. Construction validates
// that every triangle has positive area, that interiors are pairwise
// disjoint (separating-axis test), and that the tiles are connected through
// shared full edges; triangles are stored counterclockwise.
class TileDomain {
 public:
  explicit TileDomain(std::vector<Triangle> tiles);

  const std::vector<Triangle>& tiles() const { return tiles_; }
  Rational area() const;

  // Total boundary length split as axial + diagonal * sqrt(2). Only
  // axis-parallel and slope +-1 edges are representable; anything else
  // throws.
  struct Perimeter {
    Rational axial;
    Rational diagonal;
    bool operator==(const Perimeter& o) const {
      return axial == o.axial && diagonal == o.diagonal;
    }
  };
  Perimeter perimeter() const;

  // Tile index pairs sharing a full edge.
  std::vector<std::pair<int, int>> adjacency() const;
  bool adjacency_is_tree() const;

  // Exact strict-interior test for the union: the point is interior iff the
  // angular sectors the incident tiles cover around it close up to the full
  // circle (tiles are sector-disjoint, so matching the multiset of sector
  // start directions against end directions decides coverage).
  bool contains_interior(const RPoint& p) const;

  void bounds(Rational* min_x, Rational* max_x, Rational* min_y,
              Rational* max_y) const;

  TileDomain reflected_x() const;  // (x, y) -> (-x, y)
  TileDomain translated(const Rational& dx, const Rational& dy) const;

 private:
  std::vector<Triangle> tiles_;
};

// Whether some plane isometry maps one tile set onto the other. Candidates
// are the eight lattice point-group maps, each composed with the translation
// aligning area centroids.
bool congruent(const TileDomain& a, const TileDomain& b);

}  // namespace drumgeo
