#pragma once

#include <array>
#include <utility>
#include <vector>

#include "latconv/int_linalg.hpp"

namespace latconv {

// Exact integer convex hull in dimension 2 or 3.
//
// 2D: `vertices` in strictly counterclockwise order starting from the
// lexicographically smallest vertex; no three consecutive collinear.
// 3D: `vertices` are exactly the extreme points (lexicographically sorted);
// `facets` triangulate the boundary with outward primitive normals; the
// merged coplanar faces are kept alongside for normal-fan walks.
struct Hull {
  struct Facet {
    std::array<int, 3> v;
    IntVec normal;  // outward, primitive
  };
  struct Face {
    std::vector<int> cycle;  // CCW seen from outside
    IntVec normal;           // outward, primitive
  };

  int dimension = 0;
  std::vector<IntVec> vertices;
  std::vector<Facet> facets;  // 3D only
  std::vector<Face> faces;    // 3D only
};

// Vertex pair attaining the extremes of every direction in the cone
// spanned by `generators` (2 in 2D, exactly 3 in 3D after triangulation).
struct AntipodalCone {
  IntVec p, q;  // p maximizes, q minimizes
  IntVec diff;  // p - q, sign-canonical
  std::vector<IntVec> generators;
};

// Throws DegenerateHull when the points are collinear (2D) or coplanar
// (3D) and OverflowError when a coordinate exceeds the 2^20 cap.
Hull convex_hull(const std::vector<IntVec>& points, int dimension);

// 2D: rotating-calipers sweep; one cone per event between consecutive
// edge-normal directions.  3D: vertex normal cones of the difference body
// conv{p - q}, fan-triangulated.  Cones whose pair difference is
// sign-canonical are kept; together with their negations they cover every
// nonzero direction.
std::vector<AntipodalCone> antipodal_cones(const Hull& hull);

// (min, max) of v . x over the hull vertices; node extent is max - min + 1.
std::pair<Int, Int> width(const IntVec& v, const Hull& hull);

inline Int extent_of(const IntVec& v, const Hull& hull) {
  auto [lo, hi] = width(v, hull);
  return hi - lo + 1;
}

namespace detail {

// Internal hull builder shared with the difference-body construction;
// `coord_cap` loosens the public 2^20 input cap for difference clouds.
Hull convex_hull_3d(const std::vector<IntVec>& points, Int coord_cap);

std::vector<AntipodalCone> antipodal_cones_3d(const Hull& hull);

// True when v lies in the closed cone spanned by the generators.
bool cone_contains(const AntipodalCone& cone, const IntVec& v);

}  // namespace detail

}  // namespace latconv
