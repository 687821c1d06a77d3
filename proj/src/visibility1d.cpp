#include "watchtower/visibility1d.hpp"
#include "watchtower/errors.hpp"

#include <algorithm>
#include <cassert>

namespace watchtower {

UpperRegion::UpperRegion(std::vector<Line2> pieces, std::vector<Scalar> breaks)
    : pieces_(std::move(pieces)), breaks_(std::move(breaks)) {
  assert(!pieces_.empty());
  assert(breaks_.size() + 1 == pieces_.size());
}

Scalar UpperRegion::boundary_at(const Scalar& x) const {
  size_t idx = std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin();
  return y_at(pieces_[idx], x);
}

std::vector<Point2> UpperRegion::vertices() const {
  std::vector<Point2> out;
  out.reserve(breaks_.size());
  for (size_t i = 0; i < breaks_.size(); ++i) {
    out.push_back(Point2{breaks_[i], y_at(pieces_[i], breaks_[i])});
  }
  return out;
}

namespace {

struct SlopedLine {
  Scalar slope;
  Scalar intercept; // y = slope * x + intercept

  Line2 to_line() const { return make_line(-slope, Scalar(1), intercept); }
};

// Abscissa where two lines of different slope meet.
Scalar meet_x(const SlopedLine& a, const SlopedLine& b) {
  return (b.intercept - a.intercept) / (a.slope - b.slope);
}

} // namespace

UpperRegion visibility_region(const std::vector<Point2>& polyline) {
  if (polyline.size() < 2)
    throw Error(ErrorCode::DegeneratePolyline, "polyline needs >= 2 vertices");
  std::vector<SlopedLine> lines;
  lines.reserve(polyline.size() - 1);
  for (size_t i = 1; i < polyline.size(); ++i) {
    const Point2& a = polyline[i - 1];
    const Point2& b = polyline[i];
    if (!(a.x < b.x))
      throw Error(ErrorCode::DegeneratePolyline, "polyline not x-monotone");
    Scalar slope = (b.y - a.y) / (b.x - a.x);
    lines.push_back(SlopedLine{slope, a.y - slope * a.x});
  }

  std::sort(lines.begin(), lines.end(), [](const SlopedLine& a, const SlopedLine& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.intercept < b.intercept;
  });
  // On slope ties only the highest intercept can appear on the envelope.
  std::vector<SlopedLine> unique_lines;
  for (const auto& l : lines) {
    if (!unique_lines.empty() && unique_lines.back().slope == l.slope)
      unique_lines.back() = l;
    else
      unique_lines.push_back(l);
  }

  // Upper envelope by increasing slope: a new line takes over to the
  // right; pop predecessors it dominates.
  std::vector<SlopedLine> env;
  std::vector<Scalar> breaks;
  for (const auto& l : unique_lines) {
    while (!env.empty()) {
      Scalar x = meet_x(env.back(), l);
      if (!breaks.empty() && x <= breaks.back()) {
        env.pop_back();
        breaks.pop_back();
      } else {
        breaks.push_back(x);
        break;
      }
    }
    env.push_back(l);
  }

  std::vector<Line2> pieces;
  pieces.reserve(env.size());
  for (const auto& l : env) pieces.push_back(l.to_line());
  return UpperRegion(std::move(pieces), std::move(breaks));
}

Tower1D fixed_terrain_watchtower(const std::vector<Point2>& polyline) {
  return fixed_terrain_watchtower(polyline, visibility_region(polyline));
}

Tower1D fixed_terrain_watchtower(const std::vector<Point2>& polyline,
                                 const UpperRegion& region) {
  // boundary - polyline is piecewise linear; its minimum is attained at a
  // breakpoint of either function. Merge-scan both breakpoint sets.
  const Scalar& x_min = polyline.front().x;
  const Scalar& x_max = polyline.back().x;
  std::vector<Scalar> candidates;
  for (const Point2& v : polyline) candidates.push_back(v.x);
  for (const Scalar& b : region.breaks()) {
    if (b > x_min && b < x_max) candidates.push_back(b);
  }
  std::sort(candidates.begin(), candidates.end());

  bool have_best = false;
  Scalar best_gap, best_x;
  for (const Scalar& x : candidates) {
    Scalar gap = region.boundary_at(x) - polyline_height_at(polyline, x);
    if (!have_best || gap < best_gap) {
      have_best = true;
      best_gap = gap;
      best_x = x;
    }
  }
  Point2 base{best_x, polyline_height_at(polyline, best_x)};
  Point2 top{best_x, base.y + best_gap};
  return make_tower(base, top);
}

} // namespace watchtower
