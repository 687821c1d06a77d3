#ifndef WATCHTOWER_TEST_HELPERS_HPP
#define WATCHTOWER_TEST_HELPERS_HPP

#include "watchtower/mesh25d.hpp"
#include "watchtower/solver1d.hpp"

#include <array>
#include <random>
#include <vector>

namespace watchtower::testing {

inline ImpreciseTerrain1D make_terrain(
    std::vector<std::array<long, 3>> rows) { // {x, low, high}
  std::vector<UncertainVertex1D> verts;
  for (const auto& r : rows)
    verts.push_back({Scalar(r[0]), Scalar(r[1]), Scalar(r[2])});
  return validate_terrain(std::move(verts));
}

inline ImpreciseTerrain1D make_terrain_q(
    std::vector<std::array<const char*, 3>> rows) {
  std::vector<UncertainVertex1D> verts;
  for (const auto& r : rows)
    verts.push_back({parse_scalar(r[0]), parse_scalar(r[1]), parse_scalar(r[2])});
  return validate_terrain(std::move(verts));
}

// Intervals [0,0],[1,1],[0,1/2],[1,1],[0,0] at x = 0..4.
inline ImpreciseTerrain1D m_instance() {
  return make_terrain_q({{"0", "0", "0"},
                         {"1", "1", "1"},
                         {"2", "0", "1/2"},
                         {"3", "1", "1"},
                         {"4", "0", "0"}});
}

inline std::vector<Point2> m_polyline() {
  return {{Scalar(0), Scalar(0)},
          {Scalar(1), Scalar(1)},
          {Scalar(2), Scalar(0)},
          {Scalar(3), Scalar(1)},
          {Scalar(4), Scalar(0)}};
}

inline ImpreciseTerrain1D random_terrain(std::mt19937_64& rng, size_t n,
                                         int coord_max = 100,
                                         bool zero_width = false) {
  std::uniform_int_distribution<int> num(0, coord_max);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<UncertainVertex1D> verts;
  verts.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Scalar lo(num(rng), den(rng));
    Scalar hi = zero_width ? lo : Scalar(num(rng), den(rng));
    mpq_class l = lo, h = hi;
    l.canonicalize();
    h.canonicalize();
    if (l > h) std::swap(l, h);
    verts.push_back({Scalar((long)i), l, h});
  }
  return validate_terrain(std::move(verts));
}

inline Realization1D random_realization(std::mt19937_64& rng,
                                        const ImpreciseTerrain1D& T,
                                        unsigned samples = 5) {
  std::uniform_int_distribution<unsigned> pick(0, samples - 1);
  Realization1D R;
  for (const auto& v : T.vertices) {
    unsigned j = pick(rng);
    R.heights.push_back(v.low + Scalar(j) * (v.high - v.low) / Scalar(samples - 1));
  }
  return R;
}

// ---- 2.5D helpers ----

// Sign of the incircle determinant for a CCW triangle abc and probe d.
inline int incircle(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d) {
  auto row = [&](const Point2& p, Scalar& x, Scalar& y, Scalar& w) {
    x = p.x - d.x;
    y = p.y - d.y;
    w = x * x + y * y;
  };
  Scalar ax, ay, aw, bx, by, bw, cx, cy, cw;
  row(a, ax, ay, aw);
  row(b, bx, by, bw);
  row(c, cx, cy, cw);
  Scalar det = ax * (by * cw - bw * cy) - ay * (bx * cw - bw * cx) +
               aw * (bx * cy - by * cx);
  return sign(det);
}

// Brute-force Delaunay triangulation of a small point set; empty result
// means the set is degenerate (cocircular/collinear) and the caller should
// draw another sample.
inline std::vector<std::array<size_t, 3>> delaunay(const std::vector<Point2>& pts) {
  const size_t n = pts.size();
  std::vector<std::array<size_t, 3>> tris;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Orientation o = orientation(pts[i], pts[j], pts[k]);
        if (o == Orientation::Collinear) continue;
        size_t a = i, b = j, c = k;
        if (o == Orientation::Right) std::swap(b, c);
        bool empty = true;
        for (size_t l = 0; l < n && empty; ++l) {
          if (l == i || l == j || l == k) continue;
          int s = incircle(pts[a], pts[b], pts[c], pts[l]);
          if (s > 0) empty = false;
          if (s == 0) return {}; // cocircular: resample
        }
        if (empty) tris.push_back({a, b, c});
      }
  return tris;
}

inline ImpreciseMesh2_5D random_mesh(std::mt19937_64& rng, size_t n,
                                     int coord_max = 8, int z_max = 4) {
  std::uniform_int_distribution<int> coord(0, coord_max);
  std::uniform_int_distribution<int> zc(0, z_max);
  while (true) {
    std::vector<Point2> pts;
    while (pts.size() < n) {
      Point2 p{Scalar(coord(rng)), Scalar(coord(rng))};
      bool dup = false;
      for (const auto& q : pts) dup |= (q == p);
      if (!dup) pts.push_back(p);
    }
    auto tris = delaunay(pts);
    if (tris.empty()) continue;
    std::vector<UncertainVertex2_5D> verts;
    for (const auto& p : pts) {
      int a = zc(rng), b = zc(rng);
      if (a > b) std::swap(a, b);
      verts.push_back({p.x, p.y, Scalar(a), Scalar(b)});
    }
    try {
      return validate_mesh(std::move(verts), std::move(tris));
    } catch (...) {
      continue; // non-triangulation Delaunay output (shouldn't happen)
    }
  }
}

// Two parallel ridges of height 2 with a valley between them and low tails
// outside: no vertex sees past the far ridge, so no zero watchtower exists
// from anywhere.
inline ImpreciseMesh2_5D pit_instance() {
  // columns x = 0..4 with profile 0, 2, valley, 2, 0; two rows y = 0, 3
  std::vector<UncertainVertex2_5D> verts;
  const long profile_lo[5] = {0, 2, 0, 2, 0};
  const long profile_hi[5] = {0, 2, 1, 2, 0};
  for (long y : {0L, 3L})
    for (long x = 0; x < 5; ++x)
      verts.push_back({Scalar(x), Scalar(y), Scalar(profile_lo[x]),
                       Scalar(profile_hi[x])});
  std::vector<std::array<size_t, 3>> tris;
  for (size_t i = 0; i + 1 < 5; ++i) {
    tris.push_back({i, i + 1, i + 6});
    tris.push_back({i, i + 6, i + 5});
  }
  return validate_mesh(std::move(verts), std::move(tris));
}

inline Realization2_5D tops_realization(const ImpreciseMesh2_5D& M) {
  Realization2_5D R;
  for (const auto& v : M.vertices) R.z.push_back(v.high);
  return R;
}

} // namespace watchtower::testing

#endif
