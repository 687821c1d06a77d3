#ifndef WATCHTOWER_MESH25D_HPP
#define WATCHTOWER_MESH25D_HPP

#include "watchtower/geometry.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace watchtower {

// One imprecise mesh vertex: fixed xy, height constrained to [low, high].
struct UncertainVertex2_5D {
  Scalar x;
  Scalar y;
  Scalar low;
  Scalar high;
};

struct MeshEdge {
  size_t a, b;                 // a < b
  std::array<int, 2> faces;    // adjacent triangle indices, second may be -1
  int face_count;
};

struct ImpreciseMesh2_5D {
  std::vector<UncertainVertex2_5D> vertices;
  std::vector<std::array<size_t, 3>> triangles;
  std::vector<MeshEdge> edges; // derived

  size_t size() const { return vertices.size(); }
  Point2 projection(size_t i) const { return {vertices[i].x, vertices[i].y}; }
};

// Validates projections, intervals, and that the triangles form a planar
// triangulation (edges meet only at shared endpoints); derives the edge
// list with face adjacency. Throws InvalidMesh.
ImpreciseMesh2_5D validate_mesh(std::vector<UncertainVertex2_5D> vertices,
                                std::vector<std::array<size_t, 3>> triangles);

struct Realization2_5D {
  std::vector<Scalar> z;
};

bool realization_in_intervals(const ImpreciseMesh2_5D& M, const Realization2_5D& R);

Point3 realized_vertex(const ImpreciseMesh2_5D& M, const Realization2_5D& R, size_t i);

// Height of the realized surface at a projected point; throws OutsideDomain
// if no triangle contains (x, y).
Scalar mesh_height_at(const ImpreciseMesh2_5D& M, const Realization2_5D& R,
                      const Scalar& x, const Scalar& y);

// Tower of height h standing on vertex `base_vertex`, which is realized at
// the top of its interval.
struct Viewpoint2_5D {
  size_t base_vertex;
  Scalar tower_height;
};

Point3 viewpoint_position(const ImpreciseMesh2_5D& M, const Viewpoint2_5D& V);

// True iff the closed segment v-p never dips below the realized surface.
// Exact: terrain height along the segment is piecewise linear with
// breakpoints at edge crossings, so checking those suffices.
bool segment_above_terrain(const Point3& v, const Point3& p,
                           const ImpreciseMesh2_5D& M, const Realization2_5D& R);

// Closed parameter range of the target edge hidden from V by one blocker.
struct OcclusionInterval {
  Scalar s_lo, s_hi;
  size_t blocker;
};

// The set of s in [0,1] where the sight segment V -> e(s) passes strictly
// below blocker edge b. Grazing contact counts as visible. The set is a
// single interval (possibly empty); returned with exact endpoints.
std::optional<OcclusionInterval> occlusion_interval(const Point3& V,
                                                    const ImpreciseMesh2_5D& M,
                                                    size_t target_edge,
                                                    size_t blocker_edge,
                                                    const Realization2_5D& R);

bool edge_fully_visible(const Point3& V, const ImpreciseMesh2_5D& M,
                        size_t edge, const Realization2_5D& R);

bool point_sees_all(const Point3& V, const ImpreciseMesh2_5D& M,
                    const Realization2_5D& R);

// All mesh edges fully visible from the viewpoint's implied position.
// Requires R to realize the base vertex at the top of its interval.
bool sees_all(const Viewpoint2_5D& V, const ImpreciseMesh2_5D& M,
              const Realization2_5D& R);

// Greedy lowering search for a realization guarded from V. Starts at the
// all-tops realization and only ever lowers vertices to their interval
// bottoms; none means the greedy could not certify a guard.
std::optional<Realization2_5D> greedy_guard_from(const Viewpoint2_5D& V,
                                                 const ImpreciseMesh2_5D& M);

struct ZeroWatchtowerResult {
  size_t vertex;
  Realization2_5D realization;
};

// Decides whether some realization is guarded from one of its own vertices
// (tower height zero); smallest vertex index wins.
std::optional<ZeroWatchtowerResult> zero_watchtower(const ImpreciseMesh2_5D& M);

struct ApproxResult {
  size_t vertex;
  Scalar height; // a multiple of epsilon
  Realization2_5D realization;
};

// Smallest multiple of epsilon (scanning k = 0, 1, 2, ...) at which the
// greedy finds a guarded realization from some vertex.
ApproxResult approx_watchtower(const ImpreciseMesh2_5D& M, const Scalar& epsilon);

} // namespace watchtower

#endif
