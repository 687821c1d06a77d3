#include "watchtower/solver1d.hpp"
#include "watchtower/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace watchtower {

namespace {

std::vector<Point2> realized_polyline(const ImpreciseTerrain1D& T,
                                      const Realization1D& R) {
  std::vector<Point2> poly;
  poly.reserve(T.size());
  for (size_t i = 0; i < T.size(); ++i) poly.push_back(realized_vertex(T, R, i));
  return poly;
}

Realization1D realization_from_path(const ImpreciseTerrain1D& T,
                                    const TautPath& path) {
  Realization1D R;
  R.heights.reserve(T.size());
  for (size_t i = 0; i < T.size(); ++i)
    R.heights.push_back(crossing_with_vertical(path, T.vertices[i].x).y);
  return R;
}

} // namespace

bool sees(const Point2& a, const Point2& b, const std::vector<Point2>& polyline) {
  const Point2& l = (a.x <= b.x) ? a : b;
  const Point2& r = (a.x <= b.x) ? b : a;
  if (l.x < polyline.front().x || r.x > polyline.back().x)
    throw Error(ErrorCode::OutOfRange, "segment endpoint outside terrain range");
  if (l.x == r.x) {
    Scalar ground = polyline_height_at(polyline, l.x);
    return std::min(l.y, r.y) >= ground;
  }
  // The segment and the polyline are linear between polyline breakpoints,
  // so comparing at breakpoints (plus the segment's endpoints) is exact.
  auto seg_y = [&](const Scalar& x) -> Scalar {
    return l.y + (r.y - l.y) * (x - l.x) / (r.x - l.x);
  };
  if (l.y < polyline_height_at(polyline, l.x)) return false;
  if (r.y < polyline_height_at(polyline, r.x)) return false;
  for (const Point2& v : polyline) {
    if (v.x <= l.x || v.x >= r.x) continue;
    if (seg_y(v.x) < v.y) return false;
  }
  return true;
}

bool sees(const Point2& a, const Point2& b, const ImpreciseTerrain1D& T,
          const Realization1D& R) {
  return sees(a, b, realized_polyline(T, R));
}

Realization1D raise_wings(const ImpreciseTerrain1D& T, Realization1D R) {
  R.heights.front() = T.vertices.front().high;
  R.heights.back() = T.vertices.back().high;
  return R;
}

TautPath compute_pi(const ImpreciseTerrain1D& T) {
  Channel Q = polygon_Q(T);
  return taut_path(Q, T.top(0), T.top(T.size() - 1));
}

CertificateCheck validate_certificate(const ImpreciseTerrain1D& T,
                                      const Realization1D& R, const Tower1D& W) {
  if (R.heights.size() != T.size())
    return {false, "realization size mismatch"};
  if (!realization_in_intervals(T, R))
    return {false, "realization leaves an interval"};
  if (W.base.x != W.top.x) return {false, "tower not vertical"};
  if (W.top.y < W.base.y) return {false, "tower top below base"};
  if (W.height != W.top.y - W.base.y) return {false, "tower height mismatch"};
  if (W.base.x < T.vertices.front().x || W.base.x > T.vertices.back().x)
    return {false, "tower base outside terrain range"};
  std::vector<Point2> poly = realized_polyline(T, R);
  if (polyline_height_at(poly, W.base.x) != W.base.y)
    return {false, "tower base not on the realized polyline"};
  UpperRegion P = visibility_region(poly);
  if (W.top.y < P.boundary_at(W.top.x))
    return {false, "tower top outside the visibility region"};
  return {true, ""};
}

namespace {

// Candidate ranking for deterministic tie-breaking: discrete vertices by
// index, then apexes by x-order, then the baseline.
struct RankedCandidate {
  Scalar height;
  int family; // 0 = discrete vertex, 1 = apex, 2 = baseline
  size_t order;
  CandidateKind kind;

  bool better_than(const RankedCandidate& other) const {
    if (height != other.height) return height < other.height;
    if (family != other.family) return family < other.family;
    return order < other.order;
  }
};

Solution1D certify(const ImpreciseTerrain1D& T, Solution1D sol) {
  if (sol.height != sol.tower.height)
    throw std::logic_error("internal certificate failure: tower height "
                           "disagrees with the reported optimum");
  CertificateCheck check = validate_certificate(T, sol.realization, sol.tower);
  if (!check)
    throw std::logic_error("internal certificate failure: " + check.reason);
  return sol;
}

} // namespace

Solution1D solve_discrete_1d(const ImpreciseTerrain1D& T) {
  TautPath pi = compute_pi(T);
  UpperRegion P = visibility_region(pi.bends);
  Realization1D pi_real = realization_from_path(T, pi);

  bool have_best = false;
  Scalar best_height;
  size_t best_index = 0;
  for (size_t i = 0; i < T.size(); ++i) {
    Scalar gap = P.boundary_at(T.vertices[i].x) - T.vertices[i].high;
    if (gap < 0) gap = 0;
    if (!have_best || gap < best_height) {
      have_best = true;
      best_height = gap;
      best_index = i;
    }
  }

  Realization1D realization = pi_real;
  realization.heights[best_index] = T.vertices[best_index].high;
  Point2 base{T.vertices[best_index].x, T.vertices[best_index].high};
  Point2 top{base.x, base.y + best_height};
  Solution1D sol{best_height, std::move(realization), make_tower(base, top),
                 DiscreteVertexCandidate{best_index}};
  return certify(T, std::move(sol));
}

Solution1D solve_continuous_1d(const ImpreciseTerrain1D& T) {
  const size_t n = T.size();
  Channel Q = polygon_Q(T);
  TautPath pi = taut_path(Q, T.top(0), T.top(n - 1));
  UpperRegion P = visibility_region(pi.bends);

  // Apex candidates: vertices of P strictly inside the terrain's x-range
  // and strictly between two consecutive interval abscissas. Apexes at an
  // interval abscissa are covered by the discrete candidates.
  std::vector<Point2> apexes;
  for (const Point2& v : P.vertices()) {
    if (!(v.x > T.vertices.front().x && v.x < T.vertices.back().x)) continue;
    auto it = std::lower_bound(
        T.vertices.begin(), T.vertices.end(), v.x,
        [](const UncertainVertex1D& u, const Scalar& x) { return u.x < x; });
    if (it != T.vertices.end() && it->x == v.x) continue;
    apexes.push_back(v);
  }

  // Last path edges toward every apex, in bulk: one left-to-right sweep
  // for the rho_1 side and one mirrored sweep for the rho_2 side. The
  // tangent query against the funnel at the apex's strip reproduces the
  // taut path in Q_p exactly (no chain vertices separate the strip from
  // the apex).
  std::vector<Point2> w_left(apexes.size()), w_right(apexes.size());
  {
    FunnelSweep sweep(T.top(0));
    size_t li = 1, ui = 1; // chain cursors (skip the shared first column)
    const auto& lo = Q.lower();
    const auto& up = Q.upper();
    for (size_t a = 0; a < apexes.size(); ++a) {
      const Point2& p = apexes[a];
      // feed chain vertices interleaved by x, lower first at equal x
      while ((li < lo.size() && lo[li].x < p.x) ||
             (ui < up.size() && up[ui].x < p.x)) {
        bool take_lower = li < lo.size() && lo[li].x < p.x &&
                          (ui >= up.size() || lo[li].x <= up[ui].x);
        if (take_lower)
          sweep.add_lower(lo[li++]);
        else
          sweep.add_upper(up[ui++]);
      }
      Point2 prev = sweep.tangent_to(p).prev;
      // strip index k: last interval with x < p.x
      size_t k = li - 1;
      const Scalar& xk = T.vertices[k].x;
      w_left[a] = (prev.x == xk) ? prev
                                 : Point2{xk, y_at(line_through(prev, p), xk)};
    }
  }
  {
    auto mirror = [](const Point2& p) { return Point2{-p.x, p.y}; };
    FunnelSweep sweep(mirror(T.top(n - 1)));
    size_t li = 1, ui = 1; // cursors over reversed chains
    const auto& lo = Q.lower();
    const auto& up = Q.upper();
    for (size_t a = apexes.size(); a-- > 0;) {
      const Point2& p = apexes[a];
      // mirrored coordinates: feed by decreasing original x, lower first
      while ((li < lo.size() && lo[lo.size() - 1 - li].x > p.x) ||
             (ui < up.size() && up[up.size() - 1 - ui].x > p.x)) {
        bool lower_ok = li < lo.size() && lo[lo.size() - 1 - li].x > p.x;
        bool take_lower =
            lower_ok && (ui >= up.size() ||
                         lo[lo.size() - 1 - li].x >= up[up.size() - 1 - ui].x);
        if (take_lower)
          sweep.add_lower(mirror(lo[lo.size() - 1 - li])), ++li;
        else
          sweep.add_upper(mirror(up[up.size() - 1 - ui])), ++ui;
      }
      Point2 prev = mirror(sweep.tangent_to(mirror(p)).prev);
      size_t k1 = n - li; // first interval with x > p.x
      const Scalar& xk1 = T.vertices[k1].x;
      w_right[a] = (prev.x == xk1) ? prev
                                   : Point2{xk1, y_at(line_through(p, prev), xk1)};
    }
  }

  std::vector<RankedCandidate> candidates;
  Solution1D discrete = solve_discrete_1d(T);
  candidates.push_back(RankedCandidate{
      discrete.height, 0, std::get<DiscreteVertexCandidate>(discrete.candidate).index,
      discrete.candidate});

  for (size_t a = 0; a < apexes.size(); ++a) {
    Scalar chord_y = y_at(line_through(w_left[a], w_right[a]), apexes[a].x);
    Scalar height = apexes[a].y - chord_y;
    if (height < 0) height = 0;
    candidates.push_back(
        RankedCandidate{height, 1, a, ApexCandidate{apexes[a]}});
  }

  Tower1D baseline_tower = fixed_terrain_watchtower(pi.bends);
  candidates.push_back(
      RankedCandidate{baseline_tower.height, 2, 0, BaselinePiCandidate{}});

  const RankedCandidate* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.better_than(*best)) best = &c;
  }

  if (best->family == 0) return discrete;
  if (best->family == 2) {
    Solution1D sol{baseline_tower.height, realization_from_path(T, pi),
                   baseline_tower, BaselinePiCandidate{}};
    return certify(T, std::move(sol));
  }

  // Winning apex: rebuild rho_1 and rho_2 in Q_p to materialize the
  // canonical realization (rho_1 to w_k, the base edge, rho_2 onward).
  const Point2& p = apexes[best->order];
  Channel Qp = Q.upper_at(p.x) < p.y ? polygon_Qp(Q, p) : Q;
  TautPath rho1 = taut_path(Qp, T.top(0), p);
  TautPath rho2 = taut_path(Qp, T.top(n - 1), p); // traversed right-to-left

  Realization1D realization;
  realization.heights.resize(n);
  size_t k = 0;
  while (k + 1 < n && T.vertices[k + 1].x < p.x) ++k;
  for (size_t i = 0; i <= k; ++i)
    realization.heights[i] = crossing_with_vertical(rho1, T.vertices[i].x).y;
  for (size_t i = k + 1; i < n; ++i)
    realization.heights[i] = crossing_with_vertical(rho2, T.vertices[i].x).y;

  Point2 w_k{T.vertices[k].x, realization.heights[k]};
  Point2 w_k1{T.vertices[k + 1].x, realization.heights[k + 1]};
  Point2 base{p.x, y_at(line_through(w_k, w_k1), p.x)};
  Solution1D sol{best->height, std::move(realization), make_tower(base, p),
                 ApexCandidate{p}};
  return certify(T, std::move(sol));
}

} // namespace watchtower
