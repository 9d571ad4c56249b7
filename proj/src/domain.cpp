#include "drumgeo/domain.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "drumgeo/error.hpp"

namespace drumgeo {

namespace {

Rational cross(const RPoint& o, const RPoint& a, const RPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational doubled_signed_area(const Triangle& t) {
  return cross(t.v[0], t.v[1], t.v[2]);
}

// Closed-half-plane separating-axis test on the edges of both triangles;
// convexity makes it exact: interiors are disjoint iff some edge separates.
bool interiors_overlap(const Triangle& a, const Triangle& b) {
  auto separated_by_edges_of = [](const Triangle& s, const Triangle& o) {
    for (int i = 0; i < 3; ++i) {
      const RPoint& u = s.v[i];
      const RPoint& w = s.v[(i + 1) % 3];
      bool all_outside = true;
      for (const RPoint& q : o.v)
        if (cross(u, w, q) > 0) {
          all_outside = false;
          break;
        }
      if (all_outside) return true;
    }
    return false;
  };
  return !separated_by_edges_of(a, b) && !separated_by_edges_of(b, a);
}

using EdgeKey = std::array<Rational, 4>;

EdgeKey edge_key(const RPoint& a, const RPoint& b) {
  if (b < a) return EdgeKey{b.x, b.y, a.x, a.y};
  return EdgeKey{a.x, a.y, b.x, b.y};
}

std::map<EdgeKey, std::vector<int>> edge_table(const std::vector<Triangle>& tiles) {
  std::map<EdgeKey, std::vector<int>> edges;
  for (std::size_t t = 0; t < tiles.size(); ++t)
    for (int i = 0; i < 3; ++i)
      edges[edge_key(tiles[t].v[i], tiles[t].v[(i + 1) % 3])].push_back(
          static_cast<int>(t));
  return edges;
}

// Primitive integer direction of a nonzero rational vector.
std::pair<Int, Int> direction(const Rational& dx, const Rational& dy) {
  Int denom;
  mpz_lcm(denom.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
  Int ix = static_cast<Rational>(dx * denom).get_num();
  Int iy = static_cast<Rational>(dy * denom).get_num();
  Int g;
  mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
  return {ix / g, iy / g};
}

std::pair<Int, Int> direction_to(const RPoint& from, const RPoint& to) {
  return direction(to.x - from.x, to.y - from.y);
}

}  // namespace

TileDomain::TileDomain(std::vector<Triangle> tiles) : tiles_(std::move(tiles)) {
  if (tiles_.empty()) throw PreconditionUnmet("a domain needs at least one tile");
  for (Triangle& t : tiles_) {
    const Rational s = doubled_signed_area(t);
    if (s == 0) throw PreconditionUnmet("degenerate tile with zero area");
    if (s < 0) std::swap(t.v[1], t.v[2]);
  }
  for (std::size_t i = 0; i < tiles_.size(); ++i)
    for (std::size_t j = i + 1; j < tiles_.size(); ++j)
      if (interiors_overlap(tiles_[i], tiles_[j]))
        throw PreconditionUnmet("tiles " + std::to_string(i) + " and " +
                                std::to_string(j) + " overlap");
  // Connectivity through shared full edges.
  std::vector<int> comp(tiles_.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& [key, owners] : edge_table(tiles_))
    for (std::size_t i = 1; i < owners.size(); ++i)
      comp[find(owners[i])] = find(owners[0]);
  for (std::size_t i = 1; i < tiles_.size(); ++i)
    if (find(static_cast<int>(i)) != find(0))
      throw PreconditionUnmet("tiles do not form an edge-connected union");
}

Rational TileDomain::area() const {
  Rational total = 0;
  for (const Triangle& t : tiles_) total += doubled_signed_area(t);
  return total / 2;
}

TileDomain::Perimeter TileDomain::perimeter() const {
  Perimeter per{0, 0};
  for (const auto& [key, owners] : edge_table(tiles_)) {
    if (owners.size() != 1) continue;
    Rational dx = key[2] - key[0];
    Rational dy = key[3] - key[1];
    if (dx < 0) dx = -dx;
    if (dy < 0) dy = -dy;
    if (dy == 0)
      per.axial += dx;
    else if (dx == 0)
      per.axial += dy;
    else if (dx == dy)
      per.diagonal += dx;
    else
      throw Error("boundary edge is neither axial nor diagonal");
  }
  return per;
}

std::vector<std::pair<int, int>> TileDomain::adjacency() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [key, owners] : edge_table(tiles_))
    if (owners.size() == 2)
      out.emplace_back(std::min(owners[0], owners[1]),
                       std::max(owners[0], owners[1]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool TileDomain::adjacency_is_tree() const {
  // The constructor guarantees connectivity, so tree = right edge count.
  return adjacency().size() == tiles_.size() - 1;
}

bool TileDomain::contains_interior(const RPoint& p) const {
  std::map<std::pair<Int, Int>, int> open_sectors;  // start(+1) vs end(-1)
  bool touched = false;
  for (const Triangle& t : tiles_) {
    const Rational c0 = cross(t.v[0], t.v[1], p);
    const Rational c1 = cross(t.v[1], t.v[2], p);
    const Rational c2 = cross(t.v[2], t.v[0], p);
    if (c0 < 0 || c1 < 0 || c2 < 0) continue;
    const int zeros = (c0 == 0) + (c1 == 0) + (c2 == 0);
    touched = true;
    if (zeros == 0) return true;  // strictly inside one tile
    if (zeros == 1) {
      // On an open edge: the tile fills the half plane on its left, a
      // straight sector from the forward edge direction to the backward one.
      int e = c0 == 0 ? 0 : (c1 == 0 ? 1 : 2);
      const RPoint& u = t.v[e];
      const RPoint& w = t.v[(e + 1) % 3];
      ++open_sectors[direction_to(p, w)];
      --open_sectors[direction_to(p, u)];
    } else {
      // At a vertex: the sector between the two adjacent edges.
      int k = p == t.v[0] ? 0 : (p == t.v[1] ? 1 : 2);
      ++open_sectors[direction_to(p, t.v[(k + 1) % 3])];
      --open_sectors[direction_to(p, t.v[(k + 2) % 3])];
    }
  }
  if (!touched) return false;
  for (const auto& [dir, balance] : open_sectors)
    if (balance != 0) return false;
  return true;
}

void TileDomain::bounds(Rational* min_x, Rational* max_x, Rational* min_y,
                        Rational* max_y) const {
  *min_x = *max_x = tiles_[0].v[0].x;
  *min_y = *max_y = tiles_[0].v[0].y;
  for (const Triangle& t : tiles_)
    for (const RPoint& q : t.v) {
      if (q.x < *min_x) *min_x = q.x;
      if (q.x > *max_x) *max_x = q.x;
      if (q.y < *min_y) *min_y = q.y;
      if (q.y > *max_y) *max_y = q.y;
    }
}

TileDomain TileDomain::reflected_x() const {
  std::vector<Triangle> out = tiles_;
  for (Triangle& t : out)
    for (RPoint& q : t.v) q.x = -q.x;
  return TileDomain(std::move(out));
}

TileDomain TileDomain::translated(const Rational& dx, const Rational& dy) const {
  std::vector<Triangle> out = tiles_;
  for (Triangle& t : out)
    for (RPoint& q : t.v) {
      q.x += dx;
      q.y += dy;
    }
  return TileDomain(std::move(out));
}

namespace {

using TileKey = std::array<Rational, 6>;

std::vector<TileKey> normalized_tiles(const std::vector<Triangle>& tiles) {
  std::vector<TileKey> keys;
  keys.reserve(tiles.size());
  for (const Triangle& t : tiles) {
    std::array<RPoint, 3> v = t.v;
    std::sort(v.begin(), v.end());
    keys.push_back({v[0].x, v[0].y, v[1].x, v[1].y, v[2].x, v[2].y});
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

RPoint area_centroid(const std::vector<Triangle>& tiles) {
  Rational sx = 0, sy = 0, total = 0;
  for (const Triangle& t : tiles) {
    const Rational a = cross(t.v[0], t.v[1], t.v[2]);
    sx += a * (t.v[0].x + t.v[1].x + t.v[2].x);
    sy += a * (t.v[0].y + t.v[1].y + t.v[2].y);
    total += a;
  }
  return RPoint{sx / (3 * total), sy / (3 * total)};
}

}  // namespace

bool congruent(const TileDomain& a, const TileDomain& b) {
  if (a.tiles().size() != b.tiles().size()) return false;
  const std::vector<TileKey> target = normalized_tiles(b.tiles());
  const RPoint cb = area_centroid(b.tiles());
  // x' = m00 x + m01 y, y' = m10 x + m11 y over the eight signed
  // axis-permutation matrices.
  static const int kMaps[8][4] = {{1, 0, 0, 1},   {-1, 0, 0, 1}, {1, 0, 0, -1},
                                  {-1, 0, 0, -1}, {0, 1, 1, 0},  {0, -1, 1, 0},
                                  {0, 1, -1, 0},  {0, -1, -1, 0}};
  for (const int* m : kMaps) {
    std::vector<Triangle> moved = a.tiles();
    for (Triangle& t : moved)
      for (RPoint& q : t.v) {
        const Rational x = q.x, y = q.y;
        q.x = m[0] * x + m[1] * y;
        q.y = m[2] * x + m[3] * y;
      }
    const RPoint ca = area_centroid(moved);
    const Rational dx = cb.x - ca.x, dy = cb.y - ca.y;
    for (Triangle& t : moved)
      for (RPoint& q : t.v) {
        q.x += dx;
        q.y += dy;
      }
    if (normalized_tiles(moved) == target) return true;
  }
  return false;
}

}  // namespace drumgeo
