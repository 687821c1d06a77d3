#ifndef WATCHTOWER_CHANNEL_PATH_HPP
#define WATCHTOWER_CHANNEL_PATH_HPP

#include "watchtower/terrain1d.hpp"

#include <cstddef>
#include <vector>

namespace watchtower {

// Euclidean shortest path inside an x-monotone channel, as an x-monotone
// bend sequence. Interior bends lie on chain vertices; bends on the lower
// chain are right turns, bends on the upper chain are left turns.
struct TautPath {
  std::vector<Point2> bends; // source ... target

  double length() const;
};

// Incremental funnel over constraints processed in increasing x. Exposed
// so callers can interleave constraint events with tangent queries for
// targets ahead of the sweep front (the bulk last-edge computation of the
// continuous solver).
class FunnelSweep {
public:
  explicit FunnelSweep(const Point2& source);

  void add_lower(const Point2& p);
  void add_upper(const Point2& q);

  // Shortest path from the source to a target lying ahead of every
  // constraint processed so far. Does not mutate the sweep.
  TautPath path_to(const Point2& t) const;

  // Last bend before the target on the shortest path to it, plus the
  // length of that path (double precision, reporting only).
  struct Tangent {
    Point2 prev;
    double length;
  };
  Tangent tangent_to(const Point2& t) const;

  // Bend immediately preceding the most recently added upper vertex.
  const Point2& last_upper_pred() const;

private:
  // committed_ ends at the funnel apex; funnel chains store the apex at
  // index head_ of each deque-like vector. *_cum_ holds cumulative chain
  // length from index 0, so apex->chain[k] length is cum[k] - cum[head].
  std::vector<Point2> committed_;
  double committed_length_ = 0.0;
  std::vector<Point2> lower_, upper_;
  std::vector<double> lower_cum_, upper_cum_;
  size_t lower_head_ = 0, upper_head_ = 0;

  void advance_apex_over_upper();
  void advance_apex_over_lower();
};

// The unique shortest path between s and t in C. s must lie on the left
// wall of the channel; t anywhere inside with s.x < t.x <= x_last.
TautPath taut_path(const Channel& C, const Point2& s, const Point2& t);

// Last path edge and length for every upper-chain vertex, from a source
// on the left or right wall (s.x must equal an extreme of C).
struct TreeEntry {
  size_t vertex;    // index into C.upper()
  Point2 prev;      // bend immediately before the vertex
  double length;    // path length from the source
};
std::vector<TreeEntry> shortest_path_tree(const Channel& C, const Point2& s);

// Exact intersection of an x-monotone path with the vertical line at x.
Point2 crossing_with_vertical(const TautPath& path, const Scalar& x);

} // namespace watchtower

#endif
