#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "latconv/int_linalg.hpp"

namespace latconv {

// Triangle (3 vertices) or tetrahedron (4 vertices) with exact integer
// coordinates.  The ambient dimension is vertices[0].size() >= 2; a
// triangle may live in a higher-dimensional lattice (tetrahedron faces).
struct Simplex {
  std::vector<IntVec> vertices;

  std::size_t ambient_dimension() const { return vertices.empty() ? 0 : vertices[0].size(); }
  bool is_triangle() const { return vertices.size() == 3; }
  bool is_tetrahedron() const { return vertices.size() == 4; }
};

// Columns of the simplex edge matrix (v_i - v_0) and the unimodular /
// upper-triangular split  edges = X * R.
//
// Triangles reduce to R = [[1, m], [0, n]] (plus zero rows in higher
// ambient dimension); tetrahedra to R = [[1, 0, a], [0, 1, b], [0, 0, n]]
// with 0 <= a <= b < n.  `edge_columns` records the columns actually
// decomposed, i.e. after any vertex relabeling used for a <= b.
struct TriangleDecomposition {
  IntMatrix X;             // d x d, |det| = 1
  Int m = 0, n = 0;        // normalized: 0 <= m < n
  IntMatrix edge_columns;  // d x 2

  IntMatrix r_matrix() const;
  // No interior lattice point can exist when R is one of the empty forms.
  bool empty_form() const { return n == 1 || m == 0 || m == 1; }
};

struct TetrahedronDecomposition {
  IntMatrix X;             // 3 x 3, |det| = 1
  Int a = 0, b = 0, n = 0; // normalized: 0 <= a <= b < n
  IntMatrix edge_columns;  // 3 x 3

  IntMatrix r_matrix() const;
};

// Lattice points strictly between p and q: the gcd of the component
// differences minus one points, ordered from p to q.  Any ambient dimension.
std::vector<IntVec> segment_interior_points(const IntVec& p, const IntVec& q);

// Interior lattice point count of a 2D triangle via A = i + b/2 - 1.
Int pick_interior_count(const Simplex& tri);

// Requires the first edge (v1 - v0) primitive; throws NonPrimitiveEdge
// otherwise.  Throws DegenerateSimplex when the edges are dependent.
TriangleDecomposition decompose_triangle(const Simplex& tri);

// Requires no lattice points strictly inside edges or faces; violations
// are reported with the failing gcd.  Unit tetrahedra come back as n = 1.
TetrahedronDecomposition decompose_tetrahedron(const Simplex& tet);

// A lattice point strictly inside, or nullopt when none exists.  The
// triangle must have no lattice points inside its edges.
std::optional<IntVec> triangle_interior_point(const Simplex& tri);

// Same for tetrahedra with clean edges and faces.  Fast cases follow the
// (a, b, n) classification; a + b < n falls through the heuristics and
// finally the exhaustive weight scan gamma = i/n.
std::optional<IntVec> tetrahedron_interior_point(const Simplex& tet);

struct LatticePointCounts {
  Int interior = 0;       // strictly inside the simplex
  Int edge_interior = 0;  // strictly inside an edge
  Int face_interior = 0;  // strictly inside a facet (tetrahedra only)
};

inline constexpr Int kDefaultScanBudget = 100'000'000;

// Exhaustive lattice scan with exact barycentric sign tests.  Oracle-grade:
// shares no code with the decomposition paths above.
std::vector<IntVec> brute_force_interior_points(const Simplex& s, Int cell_budget = kDefaultScanBudget);
LatticePointCounts brute_force_counts(const Simplex& s, Int cell_budget = kDefaultScanBudget);

// Parallelogram split along the diagonal through the origin corner:
// (o, o+g1, o+g1+g2) and (o, o+g2, o+g1+g2).
std::array<Simplex, 2> subdivide_parallelogram(const IntVec& origin, const IntVec& g1, const IntVec& g2);

// Five-tetrahedron split of a parallelepiped: one central tetrahedron on
// (g1, g2, g3, g1+g2+g3) plus four corner tetrahedra.
std::array<Simplex, 5> parallelepiped_to_tetrahedra(const IntVec& origin, const IntVec& g1,
                                                    const IntVec& g2, const IntVec& g3);

// One subdivision step: split at the first edge point, else fan from a
// face/interior point; empty result means the simplex has no lattice
// points beyond its vertices.
std::vector<Simplex> subdivide_simplex(const Simplex& s);

// Coverage statistics of the a + b < n heuristics over all normalized
// (a, b, n) with n <= n_max that pass the gcd conditions and contain an
// interior point.
struct HeuristicStats {
  Int n_max = 0;
  Int cases = 0;  // triples with a + b < n and an interior point
  std::array<Int, 4> resolved{};  // floor(n/a) | euclid | rounded centroid | floor(n/a)-1
  Int combined = 0;

  static constexpr std::array<const char*, 4> kNames{"floor_n_over_a", "euclid",
                                                     "rounded_centroid", "floor_n_over_a_minus_1"};

  std::optional<double> fraction(std::size_t heuristic) const {
    if (cases == 0) return std::nullopt;
    return static_cast<double>(resolved[heuristic]) / static_cast<double>(cases);
  }
  std::optional<double> combined_fraction() const {
    if (cases == 0) return std::nullopt;
    return static_cast<double>(combined) / static_cast<double>(cases);
  }
};

HeuristicStats heuristic_stats(Int n_max, int threads = 0);

namespace detail {

// (alpha, beta, gamma) = (((-a i) mod n)/n, ((-b i) mod n)/n, i/n) when all
// three weights are positive and sum below one; returns R * weights, an
// integer vector, else nullopt.
std::optional<IntVec> abn_accept(Int a, Int b, Int n, Int i);

// Interior point of the canonical tetrahedron (0, e1, e2, (a,b,n)) in
// R-coordinates, or nullopt.  Exercised directly by the heuristics sweep.
std::optional<IntVec> abn_interior_point(Int a, Int b, Int n);

// Smallest i in [1, n) accepted by abn_accept, or 0 when the scan proves
// the tetrahedron empty.
Int abn_scan_first(Int a, Int b, Int n);

bool abn_heuristic(Int a, Int b, Int n, int which, IntVec* out = nullptr);

// Exact strict-interior test (scan-grade barycentric signs).
bool simplex_strictly_inside(const Simplex& s, const IntVec& p);

}  // namespace detail

}  // namespace latconv
