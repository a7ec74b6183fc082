#include "latconv/geometry.hpp"

#include <algorithm>
#include <string>

namespace latconv {

namespace {

void check_coords(const std::vector<IntVec>& points, int dimension, Int cap) {
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dimension) throw Error("point dimension mismatch");
    for (Int c : p)
      if (c > cap || c < -cap)
        throw OverflowError("hull coordinate exceeds magnitude cap " + std::to_string(cap));
  }
}

int orient2(const IntVec& a, const IntVec& b, const IntVec& c) {
  Wide v = (Wide(b[0]) - a[0]) * (Wide(c[1]) - a[1]) - (Wide(b[1]) - a[1]) * (Wide(c[0]) - a[0]);
  return sign_of(v);
}

Hull convex_hull_2d(const std::vector<IntVec>& points) {
  std::vector<IntVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateHull("need at least three distinct points");

  // Monotone chain, strict turns only, so collinear points never become
  // hull vertices.
  auto build = [&](auto begin, auto end) {
    std::vector<IntVec> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 && orient2(chain[chain.size() - 2], chain.back(), *it) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<IntVec> lower = build(pts.begin(), pts.end());
  std::vector<IntVec> upper = build(pts.rbegin(), pts.rend());

  Hull h;
  h.dimension = 2;
  h.vertices = std::move(lower);
  h.vertices.pop_back();
  h.vertices.insert(h.vertices.end(), upper.begin(), upper.end() - 1);
  if (h.vertices.size() < 3) throw DegenerateHull("points are collinear");
  return h;
}

// Angle class over (-pi, pi]: 0 for (-pi, 0], 1 for (0, pi].
int angle_class(const IntVec& v) {
  return (v[1] > 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0;
}

bool angle_less(const IntVec& a, const IntVec& b) {
  int ca = angle_class(a), cb = angle_class(b);
  if (ca != cb) return ca < cb;
  return cross2(a, b) > 0;
}

std::vector<AntipodalCone> antipodal_cones_2d(const Hull& hull) {
  const auto& vs = hull.vertices;
  std::size_t n = vs.size();
  std::vector<IntVec> events;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e = sub(vs[(i + 1) % n], vs[i]);
    IntVec normal = primitive(IntVec{e[1], -e[0]});
    events.push_back(normal);
    events.push_back(negated(normal));
  }
  std::sort(events.begin(), events.end(), [](const IntVec& a, const IntVec& b) {
    return angle_less(b, a);  // descending from +pi
  });
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<AntipodalCone> cones;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const IntVec& g1 = events[i];
    const IntVec& g2 = events[(i + 1) % events.size()];
    IntVec mid = add(g1, g2);  // strictly inside: consecutive gap < pi
    std::size_t imax = 0, imin = 0;
    Wide best_max = dot_wide(mid, vs[0]), best_min = best_max;
    for (std::size_t k = 1; k < n; ++k) {
      Wide d = dot_wide(mid, vs[k]);
      if (d > best_max) {
        best_max = d;
        imax = k;
      }
      if (d < best_min) {
        best_min = d;
        imin = k;
      }
    }
    IntVec diff = sub(vs[imax], vs[imin]);
    if (!sign_canonical(diff)) continue;
    AntipodalCone c;
    c.p = vs[imax];
    c.q = vs[imin];
    c.diff = std::move(diff);
    c.generators = {g1, g2};
    cones.push_back(std::move(c));
  }

  // The kept cones tile a half turn; rotate so consecutive cones chain
  // generator-to-generator even if the sweep start split the arc.
  std::size_t start = 0;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const auto& prev = cones[(i + cones.size() - 1) % cones.size()];
    if (prev.generators[1] != cones[i].generators[0]) {
      start = i;
      break;
    }
  }
  std::rotate(cones.begin(), cones.begin() + static_cast<std::ptrdiff_t>(start), cones.end());
  return cones;
}

}  // namespace

Hull convex_hull(const std::vector<IntVec>& points, int dimension) {
  if (dimension != 2 && dimension != 3) throw Error("hull dimension must be 2 or 3");
  check_coords(points, dimension, kCoordCap);
  if (dimension == 2) return convex_hull_2d(points);
  return detail::convex_hull_3d(points, kCoordCap);
}

std::pair<Int, Int> width(const IntVec& v, const Hull& hull) {
  if (is_zero(v)) throw Error("width of zero direction");
  Wide lo = dot_wide(v, hull.vertices[0]), hi = lo;
  for (const auto& x : hull.vertices) {
    Wide d = dot_wide(v, x);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {narrow(lo), narrow(hi)};
}

std::vector<AntipodalCone> antipodal_cones(const Hull& hull) {
  if (hull.dimension == 2) return antipodal_cones_2d(hull);
  if (hull.dimension != 3) throw Error("hull dimension must be 2 or 3");
  return detail::antipodal_cones_3d(hull);
}

namespace detail {

bool cone_contains(const AntipodalCone& cone, const IntVec& v) {
  if (cone.generators.size() == 2) {
    Wide d = cross2(cone.generators[0], cone.generators[1]);
    if (d == 0) return false;
    Wide s1 = cross2(cone.generators[0], v);
    Wide s2 = cross2(v, cone.generators[1]);
    if (d < 0) {
      s1 = -s1;
      s2 = -s2;
    }
    return s1 >= 0 && s2 >= 0;
  }
  IntMatrix g = IntMatrix::from_columns(cone.generators);
  Wide d = g.det_wide();
  if (d == 0) return false;
  IntMatrix adj = g.adjugate();
  for (std::size_t i = 0; i < 3; ++i) {
    Wide s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += Wide(adj.at(i, j)) * v[j];
    if (d < 0) s = -s;
    if (s < 0) return false;
  }
  return true;
}

}  // namespace detail

}  // namespace latconv
