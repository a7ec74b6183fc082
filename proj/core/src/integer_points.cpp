#include "latconv/integer_points.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "unimodular_reduction.hpp"

namespace latconv {

namespace {

void require_triangle(const Simplex& s) {
  if (!s.is_triangle() || s.ambient_dimension() < 2) throw Error("expected a triangle");
  for (const auto& v : s.vertices)
    if (v.size() != s.ambient_dimension()) throw Error("mixed vertex dimensions");
}

void require_tetrahedron(const Simplex& s) {
  if (!s.is_tetrahedron() || s.ambient_dimension() != 3)
    throw Error("expected a tetrahedron in ambient dimension 3");
  for (const auto& v : s.vertices)
    if (v.size() != 3) throw Error("mixed vertex dimensions");
}

// Rank of the d x 2 edge matrix equals 2 exactly when the triangle has
// nonzero area.
bool triangle_degenerate(const Simplex& tri) {
  IntVec p1 = sub(tri.vertices[1], tri.vertices[0]);
  IntVec p2 = sub(tri.vertices[2], tri.vertices[0]);
  for (std::size_t i = 0; i < p1.size(); ++i)
    for (std::size_t j = i + 1; j < p1.size(); ++j)
      if (Wide(p1[i]) * p2[j] - Wide(p1[j]) * p2[i] != 0) return false;
  return true;
}

bool tetrahedron_degenerate(const Simplex& tet) {
  IntMatrix e = IntMatrix::from_columns({sub(tet.vertices[1], tet.vertices[0]),
                                         sub(tet.vertices[2], tet.vertices[0]),
                                         sub(tet.vertices[3], tet.vertices[0])});
  return e.det_wide() == 0;
}

Int round_div_half_away(Int s, Int d) {
  Int q = s / d, r = s % d;
  if (2 * std::abs(r) >= d) q += (r > 0 ? 1 : -1);
  return q;
}

// Exact barycentric classification of p against a triangle in any ambient
// dimension: -1 outside (or off-plane), 0 boundary, +1 strictly inside.
int triangle_side(const Simplex& tri, const IntVec& p) {
  const IntVec& v0 = tri.vertices[0];
  IntVec p1 = sub(tri.vertices[1], v0);
  IntVec p2 = sub(tri.vertices[2], v0);
  IntVec r = sub(p, v0);
  std::size_t d = p1.size();
  // Nonzero 2x2 minor of [p1 p2] picks the rows used to solve for weights.
  std::size_t ri = d, rj = d;
  Wide det = 0;
  for (std::size_t i = 0; i < d && det == 0; ++i)
    for (std::size_t j = i + 1; j < d && det == 0; ++j) {
      det = Wide(p1[i]) * p2[j] - Wide(p1[j]) * p2[i];
      ri = i;
      rj = j;
    }
  if (det == 0) throw DegenerateSimplex("degenerate triangle");
  Wide wa = Wide(r[ri]) * p2[rj] - Wide(r[rj]) * p2[ri];   // det * alpha
  Wide wb = Wide(p1[ri]) * r[rj] - Wide(p1[rj]) * r[ri];   // det * beta
  // Consistency across all coordinates keeps off-plane points out.
  for (std::size_t i = 0; i < d; ++i)
    if (wa * p1[i] + wb * p2[i] != det * r[i]) return -1;
  if (det < 0) {
    det = -det;
    wa = -wa;
    wb = -wb;
  }
  Wide wc = det - wa - wb;  // det * (1 - alpha - beta)
  if (wa < 0 || wb < 0 || wc < 0) return -1;
  return (wa > 0 && wb > 0 && wc > 0) ? 1 : 0;
}

int tetrahedron_side(const Simplex& tet, const IntVec& p) {
  IntMatrix e = IntMatrix::from_columns({sub(tet.vertices[1], tet.vertices[0]),
                                         sub(tet.vertices[2], tet.vertices[0]),
                                         sub(tet.vertices[3], tet.vertices[0])});
  Wide det = e.det_wide();
  if (det == 0) throw DegenerateSimplex("degenerate tetrahedron");
  IntVec r = sub(p, tet.vertices[0]);
  IntMatrix adj = e.adjugate();
  Wide w[4];
  for (std::size_t i = 0; i < 3; ++i) {
    Wide s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += Wide(adj.at(i, j)) * r[j];
    w[i] = s;
  }
  if (det < 0) {
    det = -det;
    for (int i = 0; i < 3; ++i) w[i] = -w[i];
  }
  w[3] = det - w[0] - w[1] - w[2];
  int zeros = 0;
  for (Wide x : w) {
    if (x < 0) return -1;
    if (x == 0) ++zeros;
  }
  return zeros == 0 ? 1 : 0;
}

bool strictly_inside(const Simplex& s, const IntVec& p) {
  return (s.is_triangle() ? triangle_side(s, p) : tetrahedron_side(s, p)) == 1;
}

}  // namespace

IntMatrix TriangleDecomposition::r_matrix() const {
  IntMatrix r(X.rows(), 2);
  r.at(0, 0) = 1;
  r.at(0, 1) = m;
  r.at(1, 1) = n;
  return r;
}

IntMatrix TetrahedronDecomposition::r_matrix() const {
  IntMatrix r = IntMatrix::identity(3);
  r.at(0, 2) = a;
  r.at(1, 2) = b;
  r.at(2, 2) = n;
  return r;
}

std::vector<IntVec> segment_interior_points(const IntVec& p, const IntVec& q) {
  IntVec d = sub(q, p);
  Int g = gcd_all(d);
  if (g == 0) throw Error("segment endpoints coincide");
  std::vector<IntVec> pts;
  pts.reserve(static_cast<std::size_t>(g - 1));
  IntVec step(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) step[i] = d[i] / g;
  IntVec cur = p;
  for (Int k = 1; k < g; ++k) {
    cur = add(cur, step);
    pts.push_back(cur);
  }
  return pts;
}

Int pick_interior_count(const Simplex& tri) {
  require_triangle(tri);
  if (tri.ambient_dimension() != 2) throw Error("pick_interior_count expects a 2D triangle");
  IntVec p1 = sub(tri.vertices[1], tri.vertices[0]);
  IntVec p2 = sub(tri.vertices[2], tri.vertices[0]);
  Int twice_area = std::abs(cross2(p1, p2));
  if (twice_area == 0) throw DegenerateSimplex("degenerate triangle");
  Int boundary = 0;
  for (int i = 0; i < 3; ++i) {
    IntVec d = sub(tri.vertices[(i + 1) % 3], tri.vertices[i]);
    boundary += gcd_all(d);  // lattice points per edge, counting one endpoint
  }
  // A = i + b/2 - 1 with A = twice_area / 2.
  return (twice_area - boundary + 2) / 2;
}

TriangleDecomposition decompose_triangle(const Simplex& tri) {
  require_triangle(tri);
  IntVec p1 = sub(tri.vertices[1], tri.vertices[0]);
  IntVec p2 = sub(tri.vertices[2], tri.vertices[0]);
  std::size_t d = tri.ambient_dimension();
  detail::RowReducer red(IntMatrix::from_columns({p1, p2}));
  for (std::size_t j = 1; j < d; ++j) red.eliminate(0, 0, j);
  red.make_pivot_positive(0, 0);
  Int g = red.entry(0, 0);
  if (g == 0) throw DegenerateSimplex("triangle has coincident vertices");
  if (g != 1)
    throw NonPrimitiveEdge("first edge has gcd " + std::to_string(g) +
                           "; split at its interior lattice points first");
  for (std::size_t j = 2; j < d; ++j) red.eliminate(1, 1, j);
  red.make_pivot_positive(1, 1);
  Int n = red.entry(1, 1);
  if (n == 0) throw DegenerateSimplex("triangle edges are linearly dependent");
  red.add_row(0, 1, -(red.entry(0, 1) / n));
  if (red.entry(0, 1) < 0) red.add_row(0, 1, 1);
  TriangleDecomposition out;
  out.X = red.unimodular();
  out.m = red.entry(0, 1);
  out.n = n;
  out.edge_columns = IntMatrix::from_columns({p1, p2});
  return out;
}

TetrahedronDecomposition decompose_tetrahedron(const Simplex& tet) {
  require_tetrahedron(tet);
  IntVec p1 = sub(tet.vertices[1], tet.vertices[0]);
  IntVec p2 = sub(tet.vertices[2], tet.vertices[0]);
  IntVec p3 = sub(tet.vertices[3], tet.vertices[0]);
  if (tetrahedron_degenerate(tet)) throw DegenerateSimplex("degenerate tetrahedron");

  Int c1 = gcd_all(p1);
  if (c1 != 1)
    throw PreconditionViolated("edge (v0,v1) carries lattice points: gcd = " + std::to_string(c1));

  detail::RowReducer red(IntMatrix::from_columns({p1, p2, p3}));
  red.eliminate(0, 0, 1);
  red.eliminate(0, 0, 2);
  red.make_pivot_positive(0, 0);
  red.eliminate(1, 1, 2);
  red.make_pivot_positive(1, 1);
  Int face_n = red.entry(1, 1);
  if (face_n != 1)
    throw PreconditionViolated("face (v0,v1,v2) carries lattice points: reduced gcd = " +
                               std::to_string(face_n));
  red.add_row(0, 1, -red.entry(0, 1));
  red.make_pivot_positive(2, 2);
  Int n = red.entry(2, 2);
  if (n == 0) throw DegenerateSimplex("degenerate tetrahedron");
  red.add_row(0, 2, -(red.entry(0, 2) / n));
  if (red.entry(0, 2) < 0) red.add_row(0, 2, 1);
  red.add_row(1, 2, -(red.entry(1, 2) / n));
  if (red.entry(1, 2) < 0) red.add_row(1, 2, 1);

  Int a = red.entry(0, 2);
  Int b = red.entry(1, 2);
  IntMatrix x = red.unimodular();
  std::vector<IntVec> cols{p1, p2, p3};
  if (a > b) {
    // Relabeling v1 <-> v2 swaps the first two columns of R; restoring the
    // triangular shape swaps rows, which X absorbs as a column swap.
    std::swap(a, b);
    for (std::size_t r = 0; r < 3; ++r) std::swap(x.at(r, 0), x.at(r, 1));
    std::swap(cols[0], cols[1]);
  }

  if (n > 1) {
    struct Check {
      Int g;
      const char* what;
    } checks[] = {
        {std::gcd(b, n), "face (v0,v1,v3): gcd(b,n)"},
        {std::gcd(a, n), "face (v0,v2,v3): gcd(a,n)"},
        {std::gcd(a + b - 1, n), "face (v1,v2,v3): gcd(a+b-1,n)"},
    };
    for (const auto& c : checks)
      if (c.g != 1)
        throw PreconditionViolated(std::string(c.what) + " = " + std::to_string(c.g));
  }

  TetrahedronDecomposition out;
  out.X = x;
  out.a = a;
  out.b = b;
  out.n = n;
  out.edge_columns = IntMatrix::from_columns(cols);
  return out;
}

namespace detail {

std::optional<IntVec> abn_accept(Int a, Int b, Int n, Int i) {
  if (i <= 0 || i >= n) return std::nullopt;
  Int an = static_cast<Int>(((-Wide(a) * i) % n + n) % n);
  Int bn = static_cast<Int>(((-Wide(b) * i) % n + n) % n);
  if (an <= 0 || bn <= 0 || an + bn + i >= n) return std::nullopt;
  IntVec w(3);
  w[0] = static_cast<Int>((Wide(an) + Wide(a) * i) / n);
  w[1] = static_cast<Int>((Wide(bn) + Wide(b) * i) / n);
  w[2] = i;
  return w;
}

Int abn_scan_first(Int a, Int b, Int n) {
  Int an = mod_floor(static_cast<Int>((-Wide(a)) % n), n);
  Int bn = mod_floor(static_cast<Int>((-Wide(b)) % n), n);
  Int da = mod_floor(static_cast<Int>(Wide(a) % n), n);
  Int db = mod_floor(static_cast<Int>(Wide(b) % n), n);
  for (Int i = 1; i < n; ++i) {
    if (an > 0 && bn > 0 && an + bn + i < n) return i;
    an -= da;
    if (an < 0) an += n;
    bn -= db;
    if (bn < 0) bn += n;
  }
  return 0;
}

namespace {

// Canonical tetrahedron (0, e1, e2, (a,b,n)): p strictly inside?
bool canonical_inside(Int a, Int b, Int n, Int x, Int y, Int z) {
  Wide wa = Wide(x) * n - Wide(a) * z;
  Wide wb = Wide(y) * n - Wide(b) * z;
  Wide wc = z;
  return wa > 0 && wb > 0 && wc > 0 && wa + wb + wc < n;
}

}  // namespace

bool abn_heuristic(Int a, Int b, Int n, int which, IntVec* out) {
  switch (which) {
    case 0:
    case 3: {
      if (a <= 0) return false;
      Int i = n / a - (which == 3 ? 1 : 0);
      auto w = abn_accept(a, b, n, i);
      if (w && out) *out = *w;
      return w.has_value();
    }
    case 1: {
      Int x, y;
      Int g = extended_gcd(mod_floor(a + b - 1, n), n, x, y);
      if (g != 1) return false;
      Int i = mod_floor(x, n);
      auto w = abn_accept(a, b, n, i);
      if (w && out) *out = *w;
      return w.has_value();
    }
    case 2: {
      Int cx = round_div_half_away(1 + a, 4);
      Int cy = round_div_half_away(1 + b, 4);
      Int cz = round_div_half_away(n, 4);
      if (!canonical_inside(a, b, n, cx, cy, cz)) return false;
      if (out) *out = IntVec{cx, cy, cz};
      return true;
    }
    default:
      return false;
  }
}

std::optional<IntVec> abn_interior_point(Int a, Int b, Int n) {
  if (n < 4 || a <= 1) return std::nullopt;
  if (a + b == n) return std::nullopt;
  // a + b = n + 1 cannot pass the face gcd conditions; kept as a guard.
  if (a + b == n + 1) return std::nullopt;
  if (a + b > n + 1) return abn_accept(a, b, n, 1);
  for (int h = 0; h < 4; ++h) {
    IntVec w;
    if (abn_heuristic(a, b, n, h, &w)) return w;
  }
  if (Int i = abn_scan_first(a, b, n); i > 0) return abn_accept(a, b, n, i);
  return std::nullopt;
}

}  // namespace detail

std::optional<IntVec> triangle_interior_point(const Simplex& tri) {
  require_triangle(tri);
  if (triangle_degenerate(tri)) throw DegenerateSimplex("degenerate triangle");
  for (int i = 0; i < 3; ++i) {
    IntVec d = sub(tri.vertices[(i + 1) % 3], tri.vertices[i]);
    if (gcd_all(d) != 1)
      throw PreconditionViolated("triangle edge carries interior lattice points");
  }

  std::size_t dim = tri.ambient_dimension();
  IntVec s(dim, 0);
  for (const auto& v : tri.vertices) s = add(s, v);
  bool integral = true;
  for (Int c : s) integral = integral && (c % 3 == 0);
  if (integral) {
    IntVec c(dim);
    for (std::size_t i = 0; i < dim; ++i) c[i] = s[i] / 3;
    return c;
  }
  IntVec rounded(dim);
  for (std::size_t i = 0; i < dim; ++i) rounded[i] = round_div_half_away(s[i], 3);
  if (triangle_side(tri, rounded) == 1) return rounded;

  TriangleDecomposition dec = decompose_triangle(tri);
  if (dec.empty_form()) return std::nullopt;
  // alpha = (n-m)/n, beta = 1/n turn R*(alpha,beta) into (1,1); the point is
  // the sum of the first two columns of X.
  IntVec w = add(dec.X.column(0), dec.X.column(1));
  return add(tri.vertices[0], w);
}

std::optional<IntVec> tetrahedron_interior_point(const Simplex& tet) {
  TetrahedronDecomposition dec = decompose_tetrahedron(tet);
  if (dec.n == 1) return std::nullopt;
  const Int a = dec.a, b = dec.b, n = dec.n;
  if (a <= 1 || n < 4 || a + b == n || a + b == n + 1) return std::nullopt;

  auto lift = [&](const IntVec& w) { return add(tet.vertices[0], dec.X.apply(w)); };

  if (a + b > n + 1) return lift(*detail::abn_accept(a, b, n, 1));
  for (int h = 0; h < 4; ++h) {
    if (h == 2) {
      // Rounded average of all coordinates, accepted only after an exact
      // interior test.
      IntVec s(3, 0);
      for (const auto& v : tet.vertices) s = add(s, v);
      IntVec c(3);
      for (int i = 0; i < 3; ++i) c[i] = round_div_half_away(s[i], 4);
      if (tetrahedron_side(tet, c) == 1) return c;
      continue;
    }
    IntVec w;
    if (detail::abn_heuristic(a, b, n, h, &w)) return lift(w);
  }
  if (Int i = detail::abn_scan_first(a, b, n); i > 0) return lift(*detail::abn_accept(a, b, n, i));
  return std::nullopt;
}

namespace {

struct SliceRange {
  Int lo = 0, hi = -1;  // empty by default
};

// Range of integers x with lo <= x <= hi where the simplex meets the
// hyperplane axis = c, derived from edge crossings in exact rationals.
SliceRange slice_range(const std::vector<IntVec>& verts, std::size_t fixed_axis, Int c,
                       std::size_t range_axis) {
  bool any = false;
  // Track min/max of fractions num/den with den > 0.
  Wide lo_num = 0, lo_den = 1, hi_num = 0, hi_den = 1;
  auto fold = [&](Wide num, Wide den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (!any) {
      lo_num = hi_num = num;
      lo_den = hi_den = den;
      any = true;
      return;
    }
    if (num * lo_den < lo_num * den) {
      lo_num = num;
      lo_den = den;
    }
    if (num * hi_den > hi_num * den) {
      hi_num = num;
      hi_den = den;
    }
  };
  std::size_t k = verts.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Int pi = verts[i][fixed_axis], pj = verts[j][fixed_axis];
      if (pi == pj) {
        if (pi == c) {
          fold(verts[i][range_axis], 1);
          fold(verts[j][range_axis], 1);
        }
        continue;
      }
      if ((pi - c > 0) == (pj - c > 0) && pi != c && pj != c) continue;
      // x = x_i + (c - p_i) * (x_j - x_i) / (p_j - p_i)
      Wide den = Wide(pj) - pi;
      Wide num = Wide(verts[i][range_axis]) * den + (Wide(c) - pi) * (Wide(verts[j][range_axis]) - verts[i][range_axis]);
      fold(num, den);
    }
  SliceRange r;
  if (!any) return r;
  // ceil(lo), floor(hi) with positive denominators
  Wide q = lo_num / lo_den;
  if (q * lo_den < lo_num) q += 1;
  r.lo = static_cast<Int>(q);
  q = hi_num / hi_den;
  if (q * hi_den > hi_num) q -= 1;
  r.hi = static_cast<Int>(q);
  return r;
}

template <typename Visit>
void scan_simplex(const Simplex& s, Int cell_budget, Visit&& visit) {
  std::size_t d = s.ambient_dimension();
  IntVec lo = s.vertices[0], hi = s.vertices[0];
  for (const auto& v : s.vertices)
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  Wide cells = 1;
  for (std::size_t i = 0; i < d; ++i) {
    cells *= Wide(hi[i]) - lo[i] + 1;
    if (cells > cell_budget)
      throw BoxTooLarge("bounding box exceeds scan budget of " + std::to_string(cell_budget) +
                        " cells");
  }
  if (d == 2) {
    IntVec p(2);
    for (Int y = lo[1]; y <= hi[1]; ++y) {
      SliceRange r = slice_range(s.vertices, 1, y, 0);
      p[1] = y;
      for (Int x = r.lo; x <= r.hi; ++x) {
        p[0] = x;
        visit(p);
      }
    }
    return;
  }
  if (d == 3) {
    IntVec p(3);
    for (Int z = lo[2]; z <= hi[2]; ++z) {
      SliceRange rx = slice_range(s.vertices, 2, z, 0);
      SliceRange ry = slice_range(s.vertices, 2, z, 1);
      p[2] = z;
      for (Int y = ry.lo; y <= ry.hi; ++y) {
        p[1] = y;
        for (Int x = rx.lo; x <= rx.hi; ++x) {
          p[0] = x;
          visit(p);
        }
      }
    }
    return;
  }
  throw Error("brute-force scan supports ambient dimensions 2 and 3");
}

}  // namespace

std::vector<IntVec> brute_force_interior_points(const Simplex& s, Int cell_budget) {
  if (!s.is_triangle() && !s.is_tetrahedron()) throw Error("expected a triangle or tetrahedron");
  std::vector<IntVec> pts;
  if (s.is_triangle()) {
    scan_simplex(s, cell_budget, [&](const IntVec& p) {
      if (triangle_side(s, p) == 1) pts.push_back(p);
    });
  } else {
    scan_simplex(s, cell_budget, [&](const IntVec& p) {
      if (tetrahedron_side(s, p) == 1) pts.push_back(p);
    });
  }
  return pts;
}

LatticePointCounts brute_force_counts(const Simplex& s, Int cell_budget) {
  if (!s.is_triangle() && !s.is_tetrahedron()) throw Error("expected a triangle or tetrahedron");
  LatticePointCounts out;
  if (s.is_triangle()) {
    scan_simplex(s, cell_budget, [&](const IntVec& p) {
      int side = triangle_side(s, p);
      if (side == 1) {
        ++out.interior;
      } else if (side == 0) {
        bool vertex = false;
        for (const auto& v : s.vertices) vertex = vertex || v == p;
        if (!vertex) ++out.edge_interior;
      }
    });
    return out;
  }
  std::array<Simplex, 4> faces{
      Simplex{{s.vertices[0], s.vertices[1], s.vertices[2]}},
      Simplex{{s.vertices[0], s.vertices[1], s.vertices[3]}},
      Simplex{{s.vertices[0], s.vertices[2], s.vertices[3]}},
      Simplex{{s.vertices[1], s.vertices[2], s.vertices[3]}},
  };
  scan_simplex(s, cell_budget, [&](const IntVec& p) {
    int side = tetrahedron_side(s, p);
    if (side == 1) {
      ++out.interior;
      return;
    }
    if (side != 0) return;
    bool vertex = false;
    for (const auto& v : s.vertices) vertex = vertex || v == p;
    if (vertex) return;
    bool on_edge = false;
    for (std::size_t i = 0; i < 4 && !on_edge; ++i)
      for (std::size_t j = i + 1; j < 4 && !on_edge; ++j) {
        IntVec a = sub(p, s.vertices[i]);
        IntVec b = sub(s.vertices[j], s.vertices[i]);
        bool collinear = is_zero(cross3(a, b));
        if (!collinear) continue;
        Wide t = dot_wide(a, b), len = dot_wide(b, b);
        on_edge = t > 0 && t < len;
      }
    if (on_edge)
      ++out.edge_interior;
    else
      ++out.face_interior;
  });
  return out;
}

std::array<Simplex, 2> subdivide_parallelogram(const IntVec& origin, const IntVec& g1,
                                               const IntVec& g2) {
  Simplex probe{{origin, add(origin, g1), add(origin, g2)}};
  if (triangle_degenerate(probe)) throw DegenerateSimplex("parallelogram generators are dependent");
  IntVec far = add(add(origin, g1), g2);
  return {Simplex{{origin, add(origin, g1), far}}, Simplex{{origin, add(origin, g2), far}}};
}

std::array<Simplex, 5> parallelepiped_to_tetrahedra(const IntVec& origin, const IntVec& g1,
                                                    const IntVec& g2, const IntVec& g3) {
  if (IntMatrix::from_columns({g1, g2, g3}).det_wide() == 0)
    throw DegenerateSimplex("parallelepiped generators are dependent");
  IntVec c1 = add(origin, g1), c2 = add(origin, g2), c3 = add(origin, g3);
  IntVec c12 = add(c1, g2), c13 = add(c1, g3), c23 = add(c2, g3);
  IntVec far = add(c12, g3);
  return {
      Simplex{{origin, c1, c2, c3}},
      Simplex{{c12, c1, c2, far}},
      Simplex{{c13, c1, c3, far}},
      Simplex{{c23, c2, c3, far}},
      Simplex{{c1, c2, c3, far}},
  };
}

std::vector<Simplex> subdivide_simplex(const Simplex& s) {
  if (s.is_triangle()) {
    if (triangle_degenerate(s)) throw DegenerateSimplex("degenerate triangle");
    constexpr int kEdges[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (const auto& e : kEdges) {
      IntVec a = s.vertices[e[0]], b = s.vertices[e[1]];
      if (!std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) std::swap(a, b);
      IntVec d = sub(b, a);
      if (gcd_all(d) == 1) continue;
      IntVec t = segment_interior_points(a, b)[0];
      return {Simplex{{a, t, s.vertices[e[2]]}}, Simplex{{t, b, s.vertices[e[2]]}}};
    }
    if (auto t = triangle_interior_point(s)) {
      return {Simplex{{s.vertices[0], s.vertices[1], *t}},
              Simplex{{s.vertices[1], s.vertices[2], *t}},
              Simplex{{s.vertices[2], s.vertices[0], *t}}};
    }
    return {};
  }
  if (!s.is_tetrahedron()) throw Error("expected a triangle or tetrahedron");
  if (tetrahedron_degenerate(s)) throw DegenerateSimplex("degenerate tetrahedron");
  constexpr int kEdges[6][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2},
                                {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}};
  for (const auto& e : kEdges) {
    IntVec a = s.vertices[e[0]], b = s.vertices[e[1]];
    if (!std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) std::swap(a, b);
    IntVec d = sub(b, a);
    if (gcd_all(d) == 1) continue;
    IntVec t = segment_interior_points(a, b)[0];
    return {Simplex{{a, t, s.vertices[e[2]], s.vertices[e[3]]}},
            Simplex{{t, b, s.vertices[e[2]], s.vertices[e[3]]}}};
  }
  constexpr int kFaces[4][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 3, 1}, {1, 2, 3, 0}};
  for (const auto& f : kFaces) {
    Simplex face{{s.vertices[f[0]], s.vertices[f[1]], s.vertices[f[2]]}};
    if (auto t = triangle_interior_point(face)) {
      const IntVec& apex = s.vertices[f[3]];
      return {Simplex{{s.vertices[f[0]], s.vertices[f[1]], *t, apex}},
              Simplex{{s.vertices[f[1]], s.vertices[f[2]], *t, apex}},
              Simplex{{s.vertices[f[2]], s.vertices[f[0]], *t, apex}}};
    }
  }
  if (auto t = tetrahedron_interior_point(s)) {
    return {Simplex{{s.vertices[0], s.vertices[1], s.vertices[2], *t}},
            Simplex{{s.vertices[0], s.vertices[1], s.vertices[3], *t}},
            Simplex{{s.vertices[0], s.vertices[2], s.vertices[3], *t}},
            Simplex{{s.vertices[1], s.vertices[2], s.vertices[3], *t}}};
  }
  return {};
}

HeuristicStats heuristic_stats(Int n_max, int threads) {
  if (n_max < 1) throw Error("heuristic_stats requires n_max >= 1");
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  auto sweep_n = [](Int n, HeuristicStats& acc) {
    if (n < 4) return;  // n < 4 has no interior points at all
    // gcd(x, n) == 1 table
    std::vector<char> cop(static_cast<std::size_t>(n), 1);
    cop[0] = (n == 1);
    Int rest = n;
    for (Int p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      for (Int x = 0; x < n; x += p) cop[static_cast<std::size_t>(x)] = 0;
      while (rest % p == 0) rest /= p;
    }
    if (rest > 1)
      for (Int x = 0; x < n; x += rest) cop[static_cast<std::size_t>(x)] = 0;

    for (Int a = 2; a < n; ++a) {
      if (!cop[static_cast<std::size_t>(a)]) continue;  // gcd(a,n) = 1 face condition
      for (Int b = a; a + b < n; ++b) {
        if (!cop[static_cast<std::size_t>(b)]) continue;
        Int c = a + b - 1;
        if (c >= n) c -= n;
        if (!cop[static_cast<std::size_t>(c)]) continue;
        if (detail::abn_scan_first(a, b, n) == 0) continue;  // needs an interior point
        ++acc.cases;
        bool any = false;
        for (int h = 0; h < 4; ++h) {
          if (detail::abn_heuristic(a, b, n, h)) {
            ++acc.resolved[static_cast<std::size_t>(h)];
            any = true;
          }
        }
        if (any) ++acc.combined;
      }
    }
  };

  std::vector<HeuristicStats> partial(static_cast<std::size_t>(threads));
  std::atomic<Int> next{1};
  auto worker = [&](int t) {
    for (;;) {
      Int n = next.fetch_add(1);
      if (n > n_max) break;
      sweep_n(n, partial[static_cast<std::size_t>(t)]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  HeuristicStats out;
  out.n_max = n_max;
  for (const auto& p : partial) {
    out.cases += p.cases;
    out.combined += p.combined;
    for (std::size_t h = 0; h < 4; ++h) out.resolved[h] += p.resolved[h];
  }
  return out;
}

namespace detail {
bool simplex_strictly_inside(const Simplex& s, const IntVec& p) { return strictly_inside(s, p); }
}  // namespace detail

}  // namespace latconv
