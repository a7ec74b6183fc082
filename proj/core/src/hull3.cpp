#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "latconv/geometry.hpp"
#include "latconv/rng.hpp"

namespace latconv::detail {

namespace {

using P3 = std::array<Int, 3>;

Wide orient3(const P3& a, const P3& b, const P3& c, const P3& d) {
  Wide bx = Wide(b[0]) - a[0], by = Wide(b[1]) - a[1], bz = Wide(b[2]) - a[2];
  Wide cx = Wide(c[0]) - a[0], cy = Wide(c[1]) - a[1], cz = Wide(c[2]) - a[2];
  Wide dx = Wide(d[0]) - a[0], dy = Wide(d[1]) - a[1], dz = Wide(d[2]) - a[2];
  return bx * (cy * dz - cz * dy) - by * (cx * dz - cz * dx) + bz * (cx * dy - cy * dx);
}

struct Facet {
  std::array<int, 3> v;
  std::array<int, 3> nb;  // neighbor across directed edge v[i] -> v[i+1]
  bool alive = true;
  std::vector<int> outside;
};

struct EdgeKey {
  int a, b;
  bool operator==(const EdgeKey&) const = default;
};
struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& e) const {
    return std::size_t(e.a) * 0x9E3779B9u + std::size_t(e.b);
  }
};

class IncrementalHull {
 public:
  explicit IncrementalHull(std::vector<P3> pts) : pts_(std::move(pts)) {}

  // Triangulated hull facets over point indices; throws DegenerateHull for
  // coplanar input.
  std::vector<std::array<int, 3>> build() {
    const int n = static_cast<int>(pts_.size());
    if (n < 4) throw DegenerateHull("need at least four distinct points");

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    CounterRng shuffle_rng(0x1a7c0de511ull);
    for (int i = n - 1; i > 0; --i) {
      auto j = static_cast<int>(shuffle_rng.word(static_cast<std::uint64_t>(i)) %
                                static_cast<std::uint64_t>(i + 1));
      std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }

    init_simplex(order);

    std::vector<int> work;
    for (int f = 0; f < static_cast<int>(facets_.size()); ++f)
      if (!facets_[static_cast<std::size_t>(f)].outside.empty()) work.push_back(f);

    while (!work.empty()) {
      int fid = work.back();
      work.pop_back();
      Facet& f = facets_[static_cast<std::size_t>(fid)];
      if (!f.alive || f.outside.empty()) continue;

      // Furthest conflict point of this facet.
      int p = -1;
      Wide best = 0;
      for (int cand : f.outside) {
        Wide d = orient3(pts_[std::size_t(f.v[0])], pts_[std::size_t(f.v[1])],
                         pts_[std::size_t(f.v[2])], pts_[std::size_t(cand)]);
        if (p < 0 || d > best || (d == best && cand < p)) {
          best = d;
          p = cand;
        }
      }

      add_point(p, fid, work);
    }

    std::vector<std::array<int, 3>> out;
    for (const Facet& f : facets_)
      if (f.alive) out.push_back(f.v);
    if (out.empty()) throw DegenerateHull("hull construction failed");
    return out;
  }

 private:
  bool sees(int fid, int p) const {
    const Facet& f = facets_[static_cast<std::size_t>(fid)];
    return orient3(pts_[std::size_t(f.v[0])], pts_[std::size_t(f.v[1])],
                   pts_[std::size_t(f.v[2])], pts_[std::size_t(p)]) > 0;
  }

  void init_simplex(const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    int a = order[0], b = -1, c = -1, d = -1;
    for (int i = 1; i < n && b < 0; ++i)
      if (pts_[std::size_t(order[std::size_t(i)])] != pts_[std::size_t(a)]) b = order[std::size_t(i)];
    if (b < 0) throw DegenerateHull("all points coincide");
    for (int i = 1; i < n && c < 0; ++i) {
      int q = order[std::size_t(i)];
      if (q == b) continue;
      const P3 &pa = pts_[std::size_t(a)], &pb = pts_[std::size_t(b)], &pq = pts_[std::size_t(q)];
      Wide cx = (Wide(pb[1]) - pa[1]) * (Wide(pq[2]) - pa[2]) - (Wide(pb[2]) - pa[2]) * (Wide(pq[1]) - pa[1]);
      Wide cy = (Wide(pb[2]) - pa[2]) * (Wide(pq[0]) - pa[0]) - (Wide(pb[0]) - pa[0]) * (Wide(pq[2]) - pa[2]);
      Wide cz = (Wide(pb[0]) - pa[0]) * (Wide(pq[1]) - pa[1]) - (Wide(pb[1]) - pa[1]) * (Wide(pq[0]) - pa[0]);
      if (cx != 0 || cy != 0 || cz != 0) c = q;
    }
    if (c < 0) throw DegenerateHull("points are collinear");
    for (int i = 1; i < n && d < 0; ++i) {
      int q = order[std::size_t(i)];
      if (q == b || q == c) continue;
      if (orient3(pts_[std::size_t(a)], pts_[std::size_t(b)], pts_[std::size_t(c)],
                  pts_[std::size_t(q)]) != 0)
        d = q;
    }
    if (d < 0) throw DegenerateHull("points are coplanar");

    auto make = [&](int u, int v, int w, int opp) {
      if (orient3(pts_[std::size_t(u)], pts_[std::size_t(v)], pts_[std::size_t(w)],
                  pts_[std::size_t(opp)]) > 0)
        std::swap(v, w);
      Facet f;
      f.v = {u, v, w};
      f.nb = {-1, -1, -1};
      facets_.push_back(std::move(f));
    };
    make(a, b, c, d);
    make(a, b, d, c);
    make(a, c, d, b);
    make(b, c, d, a);
    wire_neighbors({0, 1, 2, 3});

    for (int q : order) {
      if (q == a || q == b || q == c || q == d) continue;
      for (int f = 0; f < 4; ++f) {
        if (sees(f, q)) {
          facets_[std::size_t(f)].outside.push_back(q);
          break;
        }
      }
    }
  }

  void wire_neighbors(const std::vector<int>& ids) {
    std::unordered_map<EdgeKey, int, EdgeKeyHash> owner;
    for (int id : ids) {
      const Facet& f = facets_[std::size_t(id)];
      for (int i = 0; i < 3; ++i)
        owner[{f.v[std::size_t(i)], f.v[std::size_t((i + 1) % 3)]}] = id;
    }
    for (int id : ids) {
      Facet& f = facets_[std::size_t(id)];
      for (int i = 0; i < 3; ++i) {
        auto it = owner.find({f.v[std::size_t((i + 1) % 3)], f.v[std::size_t(i)]});
        if (it != owner.end()) f.nb[std::size_t(i)] = it->second;
      }
    }
  }

  void add_point(int p, int witness, std::vector<int>& work) {
    // Visible region via DFS over facet adjacency.
    std::vector<int> visible;
    std::vector<int> stack{witness};
    std::unordered_set<int> seen{witness};
    struct HEdge {
      int a, b, alive_nb;
    };
    std::vector<HEdge> horizon;
    while (!stack.empty()) {
      int fid = stack.back();
      stack.pop_back();
      visible.push_back(fid);
      const Facet f = facets_[std::size_t(fid)];
      for (int i = 0; i < 3; ++i) {
        int g = f.nb[std::size_t(i)];
        if (sees(g, p)) {
          if (seen.insert(g).second) stack.push_back(g);
        } else {
          horizon.push_back({f.v[std::size_t(i)], f.v[std::size_t((i + 1) % 3)], g});
        }
      }
    }

    std::vector<int> orphans;
    for (int fid : visible) {
      Facet& f = facets_[std::size_t(fid)];
      f.alive = false;
      for (int q : f.outside)
        if (q != p) orphans.push_back(q);
      f.outside.clear();
    }

    // One new facet per horizon edge; the edge keeps its direction as seen
    // from the dead side so the shared edge with the alive neighbor flips.
    std::unordered_map<int, int> start_of, end_of;
    std::vector<int> fresh;
    for (const HEdge& e : horizon) {
      Facet nf;
      nf.v = {e.a, e.b, p};
      nf.nb = {e.alive_nb, -1, -1};
      int id = static_cast<int>(facets_.size());
      facets_.push_back(std::move(nf));
      fresh.push_back(id);
      start_of[e.a] = id;
      end_of[e.b] = id;
      // Re-point the alive neighbor across (b, a).
      Facet& g = facets_[std::size_t(e.alive_nb)];
      for (int i = 0; i < 3; ++i)
        if (g.v[std::size_t(i)] == e.b && g.v[std::size_t((i + 1) % 3)] == e.a)
          g.nb[std::size_t(i)] = id;
    }
    for (int id : fresh) {
      Facet& f = facets_[std::size_t(id)];
      f.nb[1] = start_of.at(f.v[1]);  // edge (b -> p) meets the facet starting at b
      f.nb[2] = end_of.at(f.v[0]);    // edge (p -> a) meets the facet ending at a
    }

    for (int q : orphans) {
      for (int id : fresh) {
        if (sees(id, q)) {
          facets_[std::size_t(id)].outside.push_back(q);
          break;
        }
      }
    }
    for (int id : fresh)
      if (!facets_[std::size_t(id)].outside.empty()) work.push_back(id);
  }

  std::vector<P3> pts_;
  std::vector<Facet> facets_;
};

struct PlaneKey {
  IntVec normal;
  Wide offset;  // normal . x on the plane; wide since diff-body dots can pass 64 bits
  bool operator==(const PlaneKey&) const = default;
};
struct PlaneKeyHash {
  std::size_t operator()(const PlaneKey& k) const {
    return IntVecHash{}(k.normal) ^
           (static_cast<std::size_t>(static_cast<std::uint64_t>(k.offset)) * 0x9E3779B97F4A7C15ull);
  }
};

int orient2_proj(const IntVec& a, const IntVec& b, const IntVec& c, int u, int v) {
  Wide x = (Wide(b[u]) - a[u]) * (Wide(c[v]) - a[v]) - (Wide(b[v]) - a[v]) * (Wide(c[u]) - a[u]);
  return sign_of(x);
}

// Strict 2D hull of coplanar 3D points, CCW as seen from the normal side.
std::vector<IntVec> face_cycle(std::vector<IntVec> pts, const IntVec& normal) {
  int drop = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(normal[std::size_t(i)]) > std::abs(normal[std::size_t(drop)])) drop = i;
  int u = (drop + 1) % 3, v = (drop + 2) % 3;
  auto lex = [&](const IntVec& a, const IntVec& b) {
    if (a[std::size_t(u)] != b[std::size_t(u)]) return a[std::size_t(u)] < b[std::size_t(u)];
    return a[std::size_t(v)] < b[std::size_t(v)];
  };
  std::sort(pts.begin(), pts.end(), lex);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto build = [&](auto begin, auto end) {
    std::vector<IntVec> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orient2_proj(chain[chain.size() - 2], chain.back(), *it, u, v) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<IntVec> lower = build(pts.begin(), pts.end());
  std::vector<IntVec> upper = build(pts.rbegin(), pts.rend());
  std::vector<IntVec> cycle = std::move(lower);
  cycle.pop_back();
  cycle.insert(cycle.end(), upper.begin(), upper.end() - 1);
  if (normal[std::size_t(drop)] < 0) std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

Hull convex_hull_3d(const std::vector<IntVec>& points, Int coord_cap) {
  for (const auto& p : points) {
    if (p.size() != 3) throw Error("point dimension mismatch");
    for (Int c : p)
      if (c > coord_cap || c < -coord_cap)
        throw OverflowError("hull coordinate exceeds magnitude cap " + std::to_string(coord_cap));
  }
  std::vector<IntVec> uniq = points;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() < 4) throw DegenerateHull("need at least four distinct points");

  std::vector<P3> pts(uniq.size());
  for (std::size_t i = 0; i < uniq.size(); ++i) pts[i] = {uniq[i][0], uniq[i][1], uniq[i][2]};
  IncrementalHull builder(pts);
  std::vector<std::array<int, 3>> tris = builder.build();

  // Merge coplanar triangles into true faces, then rebuild a strictly
  // convex cycle per face; only extreme points survive.
  std::unordered_map<PlaneKey, std::vector<IntVec>, PlaneKeyHash> groups;
  for (const auto& t : tris) {
    const IntVec &a = uniq[std::size_t(t[0])], &b = uniq[std::size_t(t[1])],
                 &c = uniq[std::size_t(t[2])];
    IntVec n = primitive(cross3(sub(b, a), sub(c, a)));
    PlaneKey key{n, dot_wide(n, a)};
    auto& g = groups[key];
    g.push_back(a);
    g.push_back(b);
    g.push_back(c);
  }

  std::vector<std::pair<IntVec, std::vector<IntVec>>> raw_faces;  // normal, cycle coordinates
  std::vector<IntVec> verts;
  for (auto& [key, g] : groups) {
    std::vector<IntVec> cycle = face_cycle(std::move(g), key.normal);
    verts.insert(verts.end(), cycle.begin(), cycle.end());
    raw_faces.emplace_back(key.normal, std::move(cycle));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto vid = [&](const IntVec& p) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
  };

  std::vector<Hull::Face> faces;
  for (auto& [normal, cycle] : raw_faces) {
    Hull::Face f;
    f.normal = normal;
    for (const auto& p : cycle) f.cycle.push_back(vid(p));
    std::size_t lo = 0;
    for (std::size_t i = 1; i < f.cycle.size(); ++i)
      if (f.cycle[i] < f.cycle[lo]) lo = i;
    std::rotate(f.cycle.begin(), f.cycle.begin() + static_cast<std::ptrdiff_t>(lo), f.cycle.end());
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(),
            [](const Hull::Face& a, const Hull::Face& b) { return a.cycle < b.cycle; });

  Hull h;
  h.dimension = 3;
  h.vertices = std::move(verts);
  h.faces = std::move(faces);
  for (const auto& f : h.faces) {
    for (std::size_t i = 1; i + 1 < f.cycle.size(); ++i)
      h.facets.push_back(Hull::Facet{{f.cycle[0], f.cycle[i], f.cycle[i + 1]}, f.normal});
  }

  // Euler check over the triangulated boundary.
  std::unordered_set<std::uint64_t> edges;
  for (const auto& t : h.facets)
    for (int i = 0; i < 3; ++i) {
      int a = t.v[std::size_t(i)], b = t.v[std::size_t((i + 1) % 3)];
      if (a > b) std::swap(a, b);
      edges.insert((std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b));
    }
  auto v_count = static_cast<long>(h.vertices.size());
  auto e_count = static_cast<long>(edges.size());
  auto f_count = static_cast<long>(h.facets.size());
  if (v_count - e_count + f_count != 2)
    throw Error("internal hull error: Euler check failed");
  return h;
}

std::vector<AntipodalCone> antipodal_cones_3d(const Hull& hull) {
  const auto& vs = hull.vertices;
  std::vector<IntVec> diffs;
  diffs.reserve(vs.size() * vs.size());
  for (const auto& p : vs)
    for (const auto& q : vs)
      if (p != q) diffs.push_back(sub(p, q));
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());

  Hull diff_body = convex_hull_3d(diffs, 2 * kCoordCap);

  // Faces around each difference-body vertex, walked in cyclic order via
  // shared directed edges.
  std::unordered_map<std::uint64_t, int> face_of_edge;  // directed edge -> face index
  auto ekey = [](int a, int b) {
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
  };
  for (std::size_t f = 0; f < diff_body.faces.size(); ++f) {
    const auto& cyc = diff_body.faces[f].cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      face_of_edge[ekey(cyc[i], cyc[(i + 1) % cyc.size()])] = static_cast<int>(f);
  }
  // successor of v in face f's cycle
  auto succ = [&](int f, int v) {
    const auto& cyc = diff_body.faces[std::size_t(f)].cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (cyc[i] == v) return cyc[(i + 1) % cyc.size()];
    throw Error("internal cone error: vertex not in face");
  };
  std::vector<std::vector<int>> first_face(diff_body.vertices.size());
  for (std::size_t f = 0; f < diff_body.faces.size(); ++f)
    for (int v : diff_body.faces[f].cycle) first_face[std::size_t(v)].push_back(static_cast<int>(f));

  std::vector<AntipodalCone> cones;
  for (std::size_t w = 0; w < diff_body.vertices.size(); ++w) {
    const IntVec& diff = diff_body.vertices[w];
    if (!sign_canonical(diff)) continue;

    int f0 = first_face[w].front();
    std::vector<IntVec> rays;
    int f = f0;
    do {
      rays.push_back(diff_body.faces[std::size_t(f)].normal);
      int nxt = succ(f, static_cast<int>(w));
      f = face_of_edge.at(ekey(nxt, static_cast<int>(w)));
    } while (f != f0);
    if (rays.size() < 3) throw Error("internal cone error: fewer than three incident faces");

    // Any strictly interior direction recovers the pair.
    IntVec probe(3, 0);
    for (const auto& r : rays) probe = add(probe, r);
    std::size_t imax = 0, imin = 0;
    Wide best_max = dot_wide(probe, vs[0]), best_min = best_max;
    for (std::size_t k = 1; k < vs.size(); ++k) {
      Wide d = dot_wide(probe, vs[k]);
      if (d > best_max) {
        best_max = d;
        imax = k;
      }
      if (d < best_min) {
        best_min = d;
        imin = k;
      }
    }
    if (sub(vs[imax], vs[imin]) != diff)
      throw Error("internal cone error: pair does not match difference vertex");

    for (std::size_t i = 1; i + 1 < rays.size(); ++i) {
      AntipodalCone c;
      c.p = vs[imax];
      c.q = vs[imin];
      c.diff = diff;
      c.generators = {rays[0], rays[i], rays[i + 1]};
      cones.push_back(std::move(c));
    }
  }
  return cones;
}

}  // namespace latconv::detail
