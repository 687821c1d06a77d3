#include "watchtower/mesh25d.hpp"
#include "watchtower/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace watchtower {

namespace {

bool point_in_triangle(const Point2& p, const Point2& a, const Point2& b,
                       const Point2& c) {
  // closed triangle, any winding
  Orientation o1 = orientation(a, b, p);
  Orientation o2 = orientation(b, c, p);
  Orientation o3 = orientation(c, a, p);
  bool has_left = o1 == Orientation::Left || o2 == Orientation::Left ||
                  o3 == Orientation::Left;
  bool has_right = o1 == Orientation::Right || o2 == Orientation::Right ||
                   o3 == Orientation::Right;
  return !(has_left && has_right);
}

bool on_closed_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed segments sharing no endpoint index; true if they intersect at all.
bool segments_touch(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d) {
  Orientation o1 = orientation(a, b, c);
  Orientation o2 = orientation(a, b, d);
  Orientation o3 = orientation(c, d, a);
  Orientation o4 = orientation(c, d, b);
  if (int(o1) * int(o2) < 0 && int(o3) * int(o4) < 0) return true;
  return (o1 == Orientation::Collinear && on_closed_segment(c, a, b)) ||
         (o2 == Orientation::Collinear && on_closed_segment(d, a, b)) ||
         (o3 == Orientation::Collinear && on_closed_segment(a, c, d)) ||
         (o4 == Orientation::Collinear && on_closed_segment(b, c, d));
}

} // namespace

ImpreciseMesh2_5D validate_mesh(std::vector<UncertainVertex2_5D> vertices,
                                std::vector<std::array<size_t, 3>> triangles) {
  const size_t n = vertices.size();
  if (n < 3) throw Error(ErrorCode::InvalidMesh, "mesh needs at least 3 vertices");
  if (triangles.empty())
    throw Error(ErrorCode::InvalidMesh, "mesh needs at least 1 triangle");
  for (const auto& v : vertices)
    if (v.low > v.high)
      throw Error(ErrorCode::InvalidMesh, "vertex interval inverted");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (vertices[i].x == vertices[j].x && vertices[i].y == vertices[j].y)
        throw Error(ErrorCode::InvalidMesh, "duplicate vertex projection");

  ImpreciseMesh2_5D M;
  M.vertices = std::move(vertices);
  M.triangles = std::move(triangles);

  std::map<std::pair<size_t, size_t>, MeshEdge> edge_map;
  for (size_t t = 0; t < M.triangles.size(); ++t) {
    const auto& tri = M.triangles[t];
    for (size_t c : tri)
      if (c >= n) throw Error(ErrorCode::InvalidMesh, "triangle index out of range");
    if (orientation(M.projection(tri[0]), M.projection(tri[1]),
                    M.projection(tri[2])) == Orientation::Collinear)
      throw Error(ErrorCode::InvalidMesh, "degenerate triangle projection");
    for (int k = 0; k < 3; ++k) {
      size_t a = tri[k], b = tri[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      auto [it, fresh] = edge_map.try_emplace({a, b}, MeshEdge{a, b, {-1, -1}, 0});
      if (it->second.face_count == 2)
        throw Error(ErrorCode::InvalidMesh, "edge borders more than 2 faces");
      it->second.faces[it->second.face_count++] = int(t);
    }
  }
  for (auto& [key, e] : edge_map) M.edges.push_back(e);

  for (size_t i = 0; i < M.edges.size(); ++i) {
    for (size_t j = i + 1; j < M.edges.size(); ++j) {
      const MeshEdge& e = M.edges[i];
      const MeshEdge& f = M.edges[j];
      if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) continue;
      if (segments_touch(M.projection(e.a), M.projection(e.b),
                         M.projection(f.a), M.projection(f.b)))
        throw Error(ErrorCode::InvalidMesh, "edge projections cross");
    }
  }
  return M;
}

bool realization_in_intervals(const ImpreciseMesh2_5D& M, const Realization2_5D& R) {
  if (R.z.size() != M.size()) return false;
  for (size_t i = 0; i < M.size(); ++i)
    if (R.z[i] < M.vertices[i].low || R.z[i] > M.vertices[i].high) return false;
  return true;
}

Point3 realized_vertex(const ImpreciseMesh2_5D& M, const Realization2_5D& R,
                       size_t i) {
  return {M.vertices[i].x, M.vertices[i].y, R.z[i]};
}

Scalar mesh_height_at(const ImpreciseMesh2_5D& M, const Realization2_5D& R,
                      const Scalar& x, const Scalar& y) {
  Point2 p{x, y};
  for (const auto& tri : M.triangles) {
    Point2 a = M.projection(tri[0]), b = M.projection(tri[1]),
           c = M.projection(tri[2]);
    if (!point_in_triangle(p, a, b, c)) continue;
    Scalar area = cross(a, b, c);
    Scalar wa = cross(p, b, c);
    Scalar wb = cross(p, c, a);
    Scalar wc = cross(p, a, b);
    return (wa * R.z[tri[0]] + wb * R.z[tri[1]] + wc * R.z[tri[2]]) / area;
  }
  throw Error(ErrorCode::OutsideDomain, "point not over the mesh");
}

Point3 viewpoint_position(const ImpreciseMesh2_5D& M, const Viewpoint2_5D& V) {
  const auto& v = M.vertices[V.base_vertex];
  return {v.x, v.y, v.high + V.tower_height};
}

bool segment_above_terrain(const Point3& v, const Point3& p,
                           const ImpreciseMesh2_5D& M, const Realization2_5D& R) {
  Point2 a{v.x, v.y}, b{p.x, p.y};
  if (a == b)
    return std::min(v.z, p.z) >= mesh_height_at(M, R, a.x, a.y);

  bool use_x = a.x != b.x;
  auto param = [&](const Point2& q) -> Scalar {
    return use_x ? (q.x - a.x) / (b.x - a.x) : (q.y - a.y) / (b.y - a.y);
  };

  std::vector<Scalar> ts{Scalar(0), Scalar(1)};
  for (size_t i = 0; i < M.size(); ++i) {
    Point2 w = M.projection(i);
    if (on_closed_segment(w, a, b)) ts.push_back(param(w));
  }
  Line2 seg_line = line_through(a, b);
  for (const MeshEdge& e : M.edges) {
    Point2 c = M.projection(e.a), d = M.projection(e.b);
    Line2 el = line_through(c, d);
    if (el == seg_line) continue; // collinear: vertex checkpoints cover it
    Point2 x;
    try {
      x = intersect_lines(seg_line, el);
    } catch (const Error&) {
      continue; // parallel
    }
    if (!on_closed_segment(x, a, b) || !on_closed_segment(x, c, d)) continue;
    ts.push_back(param(x));
  }

  for (const Scalar& t : ts) {
    Scalar x = a.x + t * (b.x - a.x);
    Scalar y = a.y + t * (b.y - a.y);
    Scalar seg_z = v.z + t * (p.z - v.z);
    if (seg_z < mesh_height_at(M, R, x, y)) return false;
  }
  return true;
}

namespace {

struct Linear {
  Scalar c0, c1; // value(s) = c0 + c1 * s
  Scalar at(const Scalar& s) const { return c0 + c1 * s; }
};

Scalar cross2(const Scalar& ux, const Scalar& uy, const Scalar& vx,
              const Scalar& vy) {
  return ux * vy - uy * vx;
}

} // namespace

std::optional<OcclusionInterval> occlusion_interval(const Point3& V,
                                                    const ImpreciseMesh2_5D& M,
                                                    size_t target_edge,
                                                    size_t blocker_edge,
                                                    const Realization2_5D& R) {
  const MeshEdge& te = M.edges[target_edge];
  const MeshEdge& be = M.edges[blocker_edge];
  Point3 A = realized_vertex(M, R, te.a);
  Point3 B = realized_vertex(M, R, te.b);
  Point3 P = realized_vertex(M, R, be.a);
  Point3 Q = realized_vertex(M, R, be.b);

  // Blocked(s) <=> the projections of V->e(s) and P->Q properly cross and
  // e(s) is strictly below the plane through V and the blocker line. All
  // conditions are signs of functions linear in s.
  Scalar dx = B.x - A.x, dy = B.y - A.y, dz = B.z - A.z;

  Linear L1{cross2(A.x - V.x, A.y - V.y, P.x - V.x, P.y - V.y),
            cross2(dx, dy, P.x - V.x, P.y - V.y)};
  Linear L2{cross2(A.x - V.x, A.y - V.y, Q.x - V.x, Q.y - V.y),
            cross2(dx, dy, Q.x - V.x, Q.y - V.y)};
  Scalar c3 = cross2(V.x - P.x, V.y - P.y, Q.x - P.x, Q.y - P.y);
  if (c3 == 0) return std::nullopt; // V in the blocker's vertical plane: grazing
  Linear L4{cross2(A.x - P.x, A.y - P.y, Q.x - P.x, Q.y - P.y),
            cross2(dx, dy, Q.x - P.x, Q.y - P.y)};

  // Normal of the plane through V, P, Q.
  Scalar px = P.x - V.x, py = P.y - V.y, pz = P.z - V.z;
  Scalar qx = Q.x - V.x, qy = Q.y - V.y, qz = Q.z - V.z;
  Scalar Nx = py * qz - pz * qy;
  Scalar Ny = pz * qx - px * qz;
  Scalar Nz = px * qy - py * qx; // nonzero since c3 != 0
  Linear F{Nx * (A.x - V.x) + Ny * (A.y - V.y) + Nz * (A.z - V.z),
           Nx * dx + Ny * dy + Nz * dz};

  auto blocked = [&](const Scalar& s) {
    return sign(L1.at(s)) * sign(L2.at(s)) < 0 && sign(c3) * sign(L4.at(s)) < 0 &&
           sign(Nz) * sign(F.at(s)) < 0;
  };

  std::vector<Scalar> cuts{Scalar(0), Scalar(1)};
  for (const Linear* L : {&L1, &L2, &L4, &F}) {
    if (L->c1 == 0) continue;
    Scalar root = -L->c0 / L->c1;
    if (root > 0 && root < 1) cuts.push_back(root);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  bool open = false;
  Scalar lo, hi;
  std::optional<OcclusionInterval> out;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Scalar mid = (cuts[i] + cuts[i + 1]) / 2;
    if (blocked(mid)) {
      if (!open) {
        open = true;
        lo = cuts[i];
      }
      hi = cuts[i + 1];
    } else if (open) {
      if (out) throw std::logic_error("occlusion set not an interval");
      out = OcclusionInterval{lo, hi, blocker_edge};
      open = false;
    }
  }
  if (open) {
    if (out) throw std::logic_error("occlusion set not an interval");
    out = OcclusionInterval{lo, hi, blocker_edge};
  }
  return out;
}

bool edge_fully_visible(const Point3& V, const ImpreciseMesh2_5D& M,
                        size_t edge, const Realization2_5D& R) {
  for (size_t b = 0; b < M.edges.size(); ++b) {
    if (b == edge) continue;
    if (occlusion_interval(V, M, edge, b, R)) return false;
  }
  return true;
}

bool point_sees_all(const Point3& V, const ImpreciseMesh2_5D& M,
                    const Realization2_5D& R) {
  for (size_t e = 0; e < M.edges.size(); ++e)
    if (!edge_fully_visible(V, M, e, R)) return false;
  return true;
}

bool sees_all(const Viewpoint2_5D& V, const ImpreciseMesh2_5D& M,
              const Realization2_5D& R) {
  return point_sees_all(viewpoint_position(M, V), M, R);
}

namespace {

// Edges whose realized span passes strictly above the sight segment v-p at
// some shared projection point.
std::vector<size_t> blocking_edges(const Point3& v, const Point3& p,
                                   const ImpreciseMesh2_5D& M,
                                   const Realization2_5D& R) {
  std::vector<size_t> out;
  Point2 a{v.x, v.y}, b{p.x, p.y};
  if (a == b) return out;
  bool use_x = a.x != b.x;
  auto param = [&](const Point2& q) -> Scalar {
    return use_x ? (q.x - a.x) / (b.x - a.x) : (q.y - a.y) / (b.y - a.y);
  };
  Line2 seg_line = line_through(a, b);
  for (size_t ei = 0; ei < M.edges.size(); ++ei) {
    const MeshEdge& e = M.edges[ei];
    Point2 c = M.projection(e.a), d = M.projection(e.b);
    Scalar zc = R.z[e.a], zd = R.z[e.b];
    auto edge_param = [&](const Point2& q) -> Scalar {
      return (c.x != d.x) ? (q.x - c.x) / (d.x - c.x) : (q.y - c.y) / (d.y - c.y);
    };
    std::vector<Point2> hits;
    Line2 el = line_through(c, d);
    if (el == seg_line) {
      if (on_closed_segment(c, a, b)) hits.push_back(c);
      if (on_closed_segment(d, a, b)) hits.push_back(d);
      if (on_closed_segment(a, c, d)) hits.push_back(a);
      if (on_closed_segment(b, c, d)) hits.push_back(b);
    } else {
      try {
        Point2 x = intersect_lines(seg_line, el);
        if (on_closed_segment(x, a, b) && on_closed_segment(x, c, d))
          hits.push_back(x);
      } catch (const Error&) {
      }
    }
    for (const Point2& h : hits) {
      Scalar t = param(h);
      Scalar s = edge_param(h);
      Scalar seg_z = v.z + t * (p.z - v.z);
      Scalar edge_z = zc + s * (zd - zc);
      if (edge_z > seg_z) {
        out.push_back(ei);
        break;
      }
    }
  }
  return out;
}

} // namespace

std::optional<Realization2_5D> greedy_guard_from(const Viewpoint2_5D& V,
                                                 const ImpreciseMesh2_5D& M) {
  const size_t n = M.size();
  Realization2_5D R;
  R.z.reserve(n);
  for (const auto& vtx : M.vertices) R.z.push_back(vtx.high);
  Point3 vp = viewpoint_position(M, V);

  auto lower = [&](size_t i) {
    if (i == V.base_vertex) return false;
    if (R.z[i] == M.vertices[i].low) return false;
    R.z[i] = M.vertices[i].low;
    return true;
  };

  for (size_t pass = 0; pass <= n + 1; ++pass) {
    if (point_sees_all(vp, M, R)) return R;
    bool changed = false;

    // Case 1: some vertex is invisible; clear the farthest one's line of
    // sight by dropping every blocker edge to the bottom.
    size_t worst = n;
    Scalar worst_d2;
    for (size_t i = 0; i < n; ++i) {
      if (i == V.base_vertex) continue;
      Point3 pi = realized_vertex(M, R, i);
      if (segment_above_terrain(vp, pi, M, R)) continue;
      Scalar d2 = (pi.x - vp.x) * (pi.x - vp.x) + (pi.y - vp.y) * (pi.y - vp.y) +
                  (pi.z - vp.z) * (pi.z - vp.z);
      if (worst == n || d2 > worst_d2) {
        worst = i;
        worst_d2 = d2;
      }
    }
    if (worst < n) {
      for (size_t ei : blocking_edges(vp, realized_vertex(M, R, worst), M, R)) {
        changed |= lower(M.edges[ei].a);
        changed |= lower(M.edges[ei].b);
      }
      if (changed) continue;
    }

    // Case 2: every vertex is visible but some edge is not; lower the apex
    // of an adjacent face of an occluded edge.
    for (size_t e = 0; e < M.edges.size() && !changed; ++e) {
      if (edge_fully_visible(vp, M, e, R)) continue;
      for (int f = 0; f < M.edges[e].face_count; ++f) {
        const auto& tri = M.triangles[M.edges[e].faces[f]];
        for (size_t c : tri) {
          if (c == M.edges[e].a || c == M.edges[e].b) continue;
          changed |= lower(c);
        }
      }
    }
    if (!changed) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<ZeroWatchtowerResult> zero_watchtower(const ImpreciseMesh2_5D& M) {
  for (size_t l = 0; l < M.size(); ++l) {
    auto R = greedy_guard_from({l, Scalar(0)}, M);
    if (R) return ZeroWatchtowerResult{l, std::move(*R)};
  }
  return std::nullopt;
}

ApproxResult approx_watchtower(const ImpreciseMesh2_5D& M, const Scalar& epsilon) {
  if (epsilon <= 0)
    throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  if (auto zero = zero_watchtower(M))
    return ApproxResult{zero->vertex, Scalar(0), std::move(zero->realization)};

  // Feasibility cap: exponential search on the fixed all-bottoms
  // realization (base pinned at its top). Any terrain is guarded from a
  // sufficiently high point over any vertex.
  auto bottoms_from = [&](size_t l) {
    Realization2_5D R;
    R.z.reserve(M.size());
    for (const auto& v : M.vertices) R.z.push_back(v.low);
    R.z[l] = M.vertices[l].high;
    return R;
  };
  auto bottoms_guarded = [&](size_t l, const Scalar& h) {
    return sees_all({l, h}, M, bottoms_from(l));
  };
  Scalar cap = epsilon;
  while (true) {
    bool ok = false;
    for (size_t l = 0; l < M.size() && !ok; ++l) ok = bottoms_guarded(l, cap);
    if (ok) break;
    cap *= 2;
  }

  for (Scalar h = epsilon;; h += epsilon) {
    for (size_t l = 0; l < M.size(); ++l) {
      auto R = greedy_guard_from({l, h}, M);
      if (R) return ApproxResult{l, h, std::move(*R)};
    }
    if (h >= cap) {
      // The cap realization is itself a witness; the greedy may miss it,
      // so test it directly to guarantee termination.
      for (size_t l = 0; l < M.size(); ++l)
        if (bottoms_guarded(l, h))
          return ApproxResult{l, h, bottoms_from(l)};
    }
  }
}

} // namespace watchtower
