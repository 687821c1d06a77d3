#include "watchtower/channel_path.hpp"
#include "watchtower/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace watchtower {

namespace {

double dist_d(const Point2& a, const Point2& b) {
  double dx = a.x.get_d() - b.x.get_d();
  double dy = a.y.get_d() - b.y.get_d();
  return std::sqrt(dx * dx + dy * dy);
}

} // namespace

double TautPath::length() const {
  double total = 0.0;
  for (size_t i = 1; i < bends.size(); ++i) total += dist_d(bends[i - 1], bends[i]);
  return total;
}

FunnelSweep::FunnelSweep(const Point2& source) {
  committed_.push_back(source);
  lower_.push_back(source);
  upper_.push_back(source);
  lower_cum_.push_back(0.0);
  upper_cum_.push_back(0.0);
}

void FunnelSweep::advance_apex_over_upper() {
  committed_length_ += upper_cum_[upper_head_ + 1] - upper_cum_[upper_head_];
  ++upper_head_;
  committed_.push_back(upper_[upper_head_]);
  lower_[lower_head_] = upper_[upper_head_];
  lower_cum_[lower_head_] = 0.0;
}

void FunnelSweep::advance_apex_over_lower() {
  committed_length_ += lower_cum_[lower_head_ + 1] - lower_cum_[lower_head_];
  ++lower_head_;
  committed_.push_back(lower_[lower_head_]);
  upper_[upper_head_] = lower_[lower_head_];
  upper_cum_[upper_head_] = 0.0;
}

void FunnelSweep::add_lower(const Point2& p) {
  while (lower_.size() - lower_head_ >= 2 &&
         orientation(lower_[lower_.size() - 2], lower_.back(), p) !=
             Orientation::Right) {
    lower_.pop_back();
    lower_cum_.pop_back();
  }
  if (lower_.size() - lower_head_ == 1) {
    while (upper_.size() - upper_head_ >= 2 &&
           orientation(upper_[upper_head_], upper_[upper_head_ + 1], p) ==
               Orientation::Left) {
      advance_apex_over_upper();
    }
  }
  lower_cum_.push_back(lower_cum_.back() + dist_d(lower_.back(), p));
  lower_.push_back(p);
}

void FunnelSweep::add_upper(const Point2& q) {
  while (upper_.size() - upper_head_ >= 2 &&
         orientation(upper_[upper_.size() - 2], upper_.back(), q) !=
             Orientation::Left) {
    upper_.pop_back();
    upper_cum_.pop_back();
  }
  if (upper_.size() - upper_head_ == 1) {
    while (lower_.size() - lower_head_ >= 2 &&
           orientation(lower_[lower_head_], lower_[lower_head_ + 1], q) ==
               Orientation::Right) {
      advance_apex_over_lower();
    }
  }
  upper_cum_.push_back(upper_cum_.back() + dist_d(upper_.back(), q));
  upper_.push_back(q);
}

const Point2& FunnelSweep::last_upper_pred() const {
  return upper_[upper_.size() - 2];
}

TautPath FunnelSweep::path_to(const Point2& t) const {
  TautPath path;
  path.bends = committed_;
  if (upper_.size() - upper_head_ >= 2 &&
      orientation(upper_[upper_head_], upper_[upper_head_ + 1], t) ==
          Orientation::Left) {
    size_t k = upper_head_;
    while (k + 1 < upper_.size() &&
           orientation(upper_[k], upper_[k + 1], t) == Orientation::Left) {
      ++k;
      path.bends.push_back(upper_[k]);
    }
  } else if (lower_.size() - lower_head_ >= 2 &&
             orientation(lower_[lower_head_], lower_[lower_head_ + 1], t) ==
                 Orientation::Right) {
    size_t k = lower_head_;
    while (k + 1 < lower_.size() &&
           orientation(lower_[k], lower_[k + 1], t) == Orientation::Right) {
      ++k;
      path.bends.push_back(lower_[k]);
    }
  }
  if (path.bends.empty() || !(path.bends.back() == t)) path.bends.push_back(t);
  return path;
}

FunnelSweep::Tangent FunnelSweep::tangent_to(const Point2& t) const {
  // The funnel chains are convex, so the "next vertex still blocks the
  // straight run to t" predicate flips at most once along each chain;
  // binary search for the flip.
  auto wrap = [&](const std::vector<Point2>& chain,
                  const std::vector<double>& cum, size_t head,
                  Orientation blocking) -> std::optional<Tangent> {
    if (chain.size() - head < 2 ||
        orientation(chain[head], chain[head + 1], t) != blocking)
      return std::nullopt;
    size_t lo = head;               // invariant: predicate holds at edge lo
    size_t hi = chain.size() - 1;   // predicate checked on edges [k, k+1]
    while (hi - lo > 1) {
      size_t mid = (lo + hi) / 2;
      if (mid + 1 < chain.size() &&
          orientation(chain[mid], chain[mid + 1], t) == blocking)
        lo = mid;
      else
        hi = mid;
    }
    const Point2& prev = chain[lo + 1];
    double len = committed_length_ + (cum[lo + 1] - cum[head]) + dist_d(prev, t);
    return Tangent{prev, len};
  };

  if (auto tan = wrap(upper_, upper_cum_, upper_head_, Orientation::Left))
    return *tan;
  if (auto tan = wrap(lower_, lower_cum_, lower_head_, Orientation::Right))
    return *tan;
  return Tangent{committed_.back(), committed_length_ + dist_d(committed_.back(), t)};
}

namespace {

void check_endpoint(const Channel& C, const Point2& p, const char* name) {
  if (p.x < C.x_first() || p.x > C.x_last() || !C.contains(p))
    throw Error(ErrorCode::EndpointOutsideChannel,
                std::string(name) + " endpoint outside the channel");
}

// Feed all chain vertices with s.x < x < limit into the sweep, lower
// chain first at equal x. Returns the sweep positioned at `limit`.
void sweep_until(FunnelSweep& sweep, const Channel& C, const Scalar& from_x,
                 const Scalar& limit) {
  const auto& lo = C.lower();
  const auto& up = C.upper();
  size_t i = 0, j = 0;
  while (i < lo.size() && lo[i].x <= from_x) ++i;
  while (j < up.size() && up[j].x <= from_x) ++j;
  while (i < lo.size() || j < up.size()) {
    bool take_lower;
    if (i >= lo.size())
      take_lower = false;
    else if (j >= up.size())
      take_lower = true;
    else
      take_lower = lo[i].x <= up[j].x;
    const Point2& next = take_lower ? lo[i] : up[j];
    if (!(next.x < limit)) break;
    if (take_lower) {
      sweep.add_lower(next);
      ++i;
    } else {
      sweep.add_upper(next);
      ++j;
    }
  }
}

Point2 reflect(const Point2& p) { return Point2{-p.x, p.y}; }

Channel reflect_channel(const Channel& C) {
  std::vector<Point2> lo, up;
  lo.reserve(C.lower().size());
  up.reserve(C.upper().size());
  for (auto it = C.lower().rbegin(); it != C.lower().rend(); ++it)
    lo.push_back(reflect(*it));
  for (auto it = C.upper().rbegin(); it != C.upper().rend(); ++it)
    up.push_back(reflect(*it));
  return Channel(std::move(lo), std::move(up));
}

} // namespace

TautPath taut_path(const Channel& C, const Point2& s, const Point2& t) {
  check_endpoint(C, s, "source");
  check_endpoint(C, t, "target");
  if (s.x == t.x) {
    if (!(s == t))
      throw Error(ErrorCode::EndpointOutsideChannel,
                  "source and target on the same vertical");
    return TautPath{{s}};
  }
  if (t.x < s.x) {
    Channel rc = reflect_channel(C);
    TautPath rp = taut_path(rc, reflect(s), reflect(t));
    for (auto& b : rp.bends) b = reflect(b);
    std::reverse(rp.bends.begin(), rp.bends.end()); // keep bends in increasing x
    return rp;
  }
  if (s.x != C.x_first())
    throw Error(ErrorCode::EndpointOutsideChannel,
                "source must lie on a channel wall");
  FunnelSweep sweep(s);
  sweep_until(sweep, C, s.x, t.x);
  return sweep.path_to(t);
}

std::vector<TreeEntry> shortest_path_tree(const Channel& C, const Point2& s) {
  check_endpoint(C, s, "source");
  if (s.x == C.x_last() && C.x_first() != C.x_last()) {
    Channel rc = reflect_channel(C);
    auto entries = shortest_path_tree(rc, reflect(s));
    size_t n = C.upper().size();
    for (auto& e : entries) {
      e.vertex = n - 1 - e.vertex;
      e.prev = reflect(e.prev);
    }
    std::reverse(entries.begin(), entries.end());
    return entries;
  }
  if (s.x != C.x_first())
    throw Error(ErrorCode::EndpointOutsideChannel,
                "tree source must lie on a channel wall");

  std::vector<TreeEntry> entries;
  FunnelSweep sweep(s);
  const auto& lo = C.lower();
  const auto& up = C.upper();
  size_t i = 0, j = 0;
  while (i < lo.size() && lo[i].x <= s.x) ++i;
  while (j < up.size() && up[j].x <= s.x) ++j;
  while (i < lo.size() || j < up.size()) {
    bool take_lower;
    if (i >= lo.size())
      take_lower = false;
    else if (j >= up.size())
      take_lower = true;
    else
      take_lower = lo[i].x <= up[j].x;
    if (take_lower) {
      sweep.add_lower(lo[i]);
      ++i;
    } else {
      auto tangent = sweep.tangent_to(up[j]);
      sweep.add_upper(up[j]);
      entries.push_back(TreeEntry{j, tangent.prev, tangent.length});
      ++j;
    }
  }
  return entries;
}

Point2 crossing_with_vertical(const TautPath& path, const Scalar& x) {
  if (path.bends.empty() || x < path.bends.front().x || x > path.bends.back().x)
    throw Error(ErrorCode::OutOfRange, "x outside the path's range");
  return Point2{x, polyline_height_at(path.bends, x)};
}

} // namespace watchtower
