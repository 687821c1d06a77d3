#include "watchtower/terrain1d.hpp"
#include "watchtower/errors.hpp"

#include <algorithm>

namespace watchtower {

ImpreciseTerrain1D validate_terrain(std::vector<UncertainVertex1D> raw) {
  if (raw.size() < 2)
    throw Error(ErrorCode::TooFewVertices, "terrain needs at least 2 vertices");
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].low > raw[i].high)
      throw Error(ErrorCode::IntervalInverted,
                  "interval " + std::to_string(i) + " has low > high");
    if (i > 0 && !(raw[i - 1].x < raw[i].x))
      throw Error(ErrorCode::NonMonotoneX,
                  "x not strictly increasing at index " + std::to_string(i));
  }
  return ImpreciseTerrain1D{std::move(raw)};
}

Point2 realized_vertex(const ImpreciseTerrain1D& T, const Realization1D& R, size_t i) {
  return {T.vertices[i].x, R.heights[i]};
}

bool realization_in_intervals(const ImpreciseTerrain1D& T, const Realization1D& R) {
  if (R.heights.size() != T.size()) return false;
  for (size_t i = 0; i < T.size(); ++i) {
    if (R.heights[i] < T.vertices[i].low || R.heights[i] > T.vertices[i].high)
      return false;
  }
  return true;
}

Scalar polyline_height_at(const std::vector<Point2>& polyline, const Scalar& x) {
  if (polyline.empty() || x < polyline.front().x || x > polyline.back().x)
    throw Error(ErrorCode::OutOfRange, "x outside polyline range");
  // binary search for the segment containing x
  size_t lo = 0, hi = polyline.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (polyline[mid].x <= x)
      lo = mid;
    else
      hi = mid;
  }
  if (polyline[lo].x == x) return polyline[lo].y;
  if (polyline[hi].x == x) return polyline[hi].y;
  const Point2& a = polyline[lo];
  const Point2& b = polyline[hi];
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

Scalar terrain_height_at(const ImpreciseTerrain1D& T, const Realization1D& R,
                         const Scalar& x) {
  if (x < T.vertices.front().x || x > T.vertices.back().x)
    throw Error(ErrorCode::OutOfRange, "x outside terrain range");
  std::vector<Point2> poly;
  poly.reserve(T.size());
  for (size_t i = 0; i < T.size(); ++i) poly.push_back(realized_vertex(T, R, i));
  return polyline_height_at(poly, x);
}

Tower1D make_tower(Point2 base, Point2 top) {
  if (base.x != top.x)
    throw Error(ErrorCode::InvalidTower, "tower must be vertical");
  if (top.y < base.y)
    throw Error(ErrorCode::InvalidTower, "tower top below its base");
  return Tower1D{base, top, top.y - base.y};
}

namespace {

void check_chain_monotone(const std::vector<Point2>& chain, const char* name) {
  if (chain.size() < 2)
    throw Error(ErrorCode::InvalidChannel, std::string(name) + " chain too short");
  for (size_t i = 1; i < chain.size(); ++i) {
    if (!(chain[i - 1].x < chain[i].x))
      throw Error(ErrorCode::InvalidChannel,
                  std::string(name) + " chain not x-monotone");
  }
}

} // namespace

Channel::Channel(std::vector<Point2> lower, std::vector<Point2> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  check_chain_monotone(lower_, "lower");
  check_chain_monotone(upper_, "upper");
  if (lower_.front().x != upper_.front().x || lower_.back().x != upper_.back().x)
    throw Error(ErrorCode::InvalidChannel, "chains cover different x-ranges");
  // lower(x) <= upper(x) needs checking only at the breakpoints of both chains
  for (const Point2& p : lower_) {
    if (p.y > upper_at(p.x))
      throw Error(ErrorCode::InvalidChannel, "lower chain above upper chain");
  }
  for (const Point2& p : upper_) {
    if (lower_at(p.x) > p.y)
      throw Error(ErrorCode::InvalidChannel, "lower chain above upper chain");
  }
}

Scalar Channel::lower_at(const Scalar& x) const {
  return polyline_height_at(lower_, x);
}

Scalar Channel::upper_at(const Scalar& x) const {
  return polyline_height_at(upper_, x);
}

bool Channel::contains(const Point2& p) const {
  if (p.x < x_first() || p.x > x_last()) return false;
  return lower_at(p.x) <= p.y && p.y <= upper_at(p.x);
}

Channel polygon_Q(const ImpreciseTerrain1D& T) {
  std::vector<Point2> lower, upper;
  lower.reserve(T.size());
  upper.reserve(T.size());
  for (size_t i = 0; i < T.size(); ++i) {
    lower.push_back(T.bottom(i));
    upper.push_back(T.top(i));
  }
  return Channel(std::move(lower), std::move(upper));
}

Channel polygon_Qp(const Channel& Q, const Point2& p) {
  const auto& upper = Q.upper();
  auto it = std::lower_bound(upper.begin(), upper.end(), p.x,
                             [](const Point2& v, const Scalar& x) { return v.x < x; });
  if (it == upper.begin() || it == upper.end() || it->x == p.x)
    throw Error(ErrorCode::ApexOutsideStrip,
                "apex x not strictly between consecutive upper-chain vertices");
  const Point2& right = *it;
  const Point2& left = *(it - 1);
  if (orientation(left, right, p) != Orientation::Left)
    return Q; // triangle contained in Q
  std::vector<Point2> new_upper(upper.begin(), it);
  new_upper.push_back(p);
  new_upper.insert(new_upper.end(), it, upper.end());
  return Channel(std::vector<Point2>(Q.lower()), std::move(new_upper));
}

QhatResult polygon_Qhat(const Channel& Q, const std::vector<Point2>& apexes) {
  std::vector<Point2> sorted = apexes;
  std::sort(sorted.begin(), sorted.end(),
            [](const Point2& a, const Point2& b) { return a.x < b.x; });
  const auto& upper = Q.upper();
  std::vector<Point2> merged;
  std::vector<Point2> dropped;
  merged.reserve(upper.size() + sorted.size());
  size_t ai = 0;
  for (size_t i = 0; i < upper.size(); ++i) {
    while (ai < sorted.size() && sorted[ai].x <= upper[i].x) {
      const Point2& p = sorted[ai++];
      bool retained = false;
      if (i > 0 && p.x > upper[i - 1].x && p.x < upper[i].x &&
          orientation(upper[i - 1], upper[i], p) == Orientation::Left) {
        retained = true;
      }
      if (retained)
        merged.push_back(p);
      else
        dropped.push_back(p);
    }
    merged.push_back(upper[i]);
  }
  while (ai < sorted.size()) dropped.push_back(sorted[ai++]);
  return QhatResult{Channel(std::vector<Point2>(Q.lower()), std::move(merged)),
                    std::move(dropped)};
}

} // namespace watchtower
