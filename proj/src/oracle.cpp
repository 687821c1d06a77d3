#include "watchtower/oracle.hpp"
#include "watchtower/errors.hpp"
#include "watchtower/visibility1d.hpp"

#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace watchtower {

unsigned long long oracle_budget() {
  if (const char* s = std::getenv("WATCHTOWER_BUDGET")) {
    unsigned long long v = std::strtoull(s, nullptr, 10);
    if (v > 0) return v;
  }
  return 1000000ULL;
}

namespace {

std::vector<Scalar> grid_values(const Scalar& lo, const Scalar& hi, unsigned m) {
  if (m < 2) throw Error(ErrorCode::ParseError, "grid needs at least 2 samples");
  if (lo == hi) return {lo};
  std::vector<Scalar> vals;
  vals.reserve(m);
  for (unsigned j = 0; j < m; ++j)
    vals.push_back(lo + Scalar(j) * (hi - lo) / Scalar(m - 1));
  return vals;
}

void check_budget(const std::vector<std::vector<Scalar>>& axes) {
  unsigned long long budget = oracle_budget();
  unsigned long long count = 1;
  for (const auto& axis : axes) {
    if (count > budget / axis.size())
      throw Error(ErrorCode::BudgetExceeded, "too many grid realizations");
    count *= axis.size();
  }
}

// Odometer enumeration over the per-vertex sample lists.
void enumerate(const std::vector<std::vector<Scalar>>& axes,
               const std::function<void(const std::vector<Scalar>&)>& fn) {
  std::vector<size_t> idx(axes.size(), 0);
  std::vector<Scalar> vals(axes.size());
  for (size_t i = 0; i < axes.size(); ++i) vals[i] = axes[i][0];
  while (true) {
    fn(vals);
    size_t i = 0;
    while (i < axes.size() && ++idx[i] == axes[i].size()) {
      idx[i] = 0;
      vals[i] = axes[i][0];
      ++i;
    }
    if (i == axes.size()) return;
    vals[i] = axes[i][idx[i]];
  }
}

std::vector<std::vector<Scalar>> terrain_axes(const ImpreciseTerrain1D& T,
                                              const GridSpec& g) {
  std::vector<std::vector<Scalar>> axes;
  axes.reserve(T.size());
  for (const auto& v : T.vertices)
    axes.push_back(grid_values(v.low, v.high, g.samples_per_interval));
  check_budget(axes);
  return axes;
}

} // namespace

Oracle1DResult oracle_1d_both(const ImpreciseTerrain1D& T, const GridSpec& g) {
  auto axes = terrain_axes(T, g);
  bool first = true;
  Oracle1DResult best;
  enumerate(axes, [&](const std::vector<Scalar>& heights) {
    std::vector<Point2> poly;
    poly.reserve(T.size());
    for (size_t i = 0; i < T.size(); ++i)
      poly.push_back({T.vertices[i].x, heights[i]});
    UpperRegion P = visibility_region(poly);
    Scalar disc;
    bool have = false;
    for (size_t i = 0; i < poly.size(); ++i) {
      Scalar gap = P.boundary_at(poly[i].x) - poly[i].y;
      if (gap < 0) gap = 0;
      if (!have || gap < disc) {
        disc = gap;
        have = true;
      }
    }
    Scalar cont = fixed_terrain_watchtower(poly, P).height;
    if (first) {
      best = {disc, cont};
      first = false;
    } else {
      if (disc < best.discrete) best.discrete = disc;
      if (cont < best.continuous) best.continuous = cont;
    }
  });
  return best;
}

Scalar oracle_1d(const ImpreciseTerrain1D& T, const GridSpec& g, OracleMode mode) {
  Oracle1DResult r = oracle_1d_both(T, g);
  return mode == OracleMode::Discrete ? r.discrete : r.continuous;
}

namespace {

std::vector<std::vector<Scalar>> mesh_axes(const ImpreciseMesh2_5D& M,
                                           const GridSpec& g) {
  std::vector<std::vector<Scalar>> axes;
  axes.reserve(M.size());
  for (const auto& v : M.vertices)
    axes.push_back(grid_values(v.low, v.high, g.samples_per_interval));
  check_budget(axes);
  return axes;
}

} // namespace

bool oracle_2_5d_zero(const ImpreciseMesh2_5D& M, const GridSpec& g) {
  auto axes = mesh_axes(M, g);
  bool found = false;
  enumerate(axes, [&](const std::vector<Scalar>& zs) {
    if (found) return;
    Realization2_5D R{zs};
    for (size_t l = 0; l < M.size() && !found; ++l)
      if (point_sees_all(realized_vertex(M, R, l), M, R)) found = true;
  });
  return found;
}

Scalar oracle_2_5d_height(const ImpreciseMesh2_5D& M, const GridSpec& g,
                          const Scalar& epsilon) {
  if (epsilon <= 0)
    throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  auto axes = mesh_axes(M, g);
  bool have = false;
  Scalar best;
  enumerate(axes, [&](const std::vector<Scalar>& zs) {
    Realization2_5D R{zs};
    for (size_t l = 0; l < M.size(); ++l) {
      Scalar saved = R.z[l];
      R.z[l] = M.vertices[l].high; // base pinned to its top
      auto guards = [&](unsigned long long k) {
        Point3 vp = realized_vertex(M, R, l);
        vp.z += Scalar((unsigned long)k) * epsilon;
        return point_sees_all(vp, M, R);
      };
      // Raising the viewpoint on a fixed realization is monotone, so an
      // exponential probe plus binary search finds the least k.
      unsigned long long hi = 1;
      if (guards(0)) {
        if (!have || best > 0) {
          best = 0;
          have = true;
        }
        R.z[l] = saved;
        continue;
      }
      while (!guards(hi)) {
        hi *= 2;
        if (hi > (1ULL << 40))
          throw Error(ErrorCode::BudgetExceeded, "height search diverged");
      }
      unsigned long long lo = hi / 2; // guards(lo) false
      while (lo + 1 < hi) {
        unsigned long long mid = lo + (hi - lo) / 2;
        (guards(mid) ? hi : lo) = mid;
      }
      Scalar h = Scalar((unsigned long)hi) * epsilon;
      if (!have || h < best) {
        best = h;
        have = true;
      }
      R.z[l] = saved;
    }
  });
  return best;
}

} // namespace watchtower
