#ifndef WATCHTOWER_TERRAIN1D_HPP
#define WATCHTOWER_TERRAIN1D_HPP

#include "watchtower/geometry.hpp"

#include <cstddef>
#include <vector>

namespace watchtower {

// One imprecise vertex: fixed abscissa, height constrained to [low, high].
struct UncertainVertex1D {
  Scalar x;
  Scalar low;
  Scalar high;
};

struct ImpreciseTerrain1D {
  std::vector<UncertainVertex1D> vertices;

  size_t size() const { return vertices.size(); }
  Point2 top(size_t i) const { return {vertices[i].x, vertices[i].high}; }
  Point2 bottom(size_t i) const { return {vertices[i].x, vertices[i].low}; }
};

// Validates monotone abscissas, interval order, and minimum size.
ImpreciseTerrain1D validate_terrain(std::vector<UncertainVertex1D> raw);

// A choice of one height per interval.
struct Realization1D {
  std::vector<Scalar> heights;
};

// Realized polyline vertex i of terrain T under realization R.
Point2 realized_vertex(const ImpreciseTerrain1D& T, const Realization1D& R, size_t i);

// True iff low_i <= heights_i <= high_i for every interval.
bool realization_in_intervals(const ImpreciseTerrain1D& T, const Realization1D& R);

// Linear interpolation along the realized polyline. Throws OutOfRange
// outside [x_1, x_n].
Scalar terrain_height_at(const ImpreciseTerrain1D& T, const Realization1D& R,
                         const Scalar& x);
Scalar polyline_height_at(const std::vector<Point2>& polyline, const Scalar& x);

struct Tower1D {
  Point2 base;
  Point2 top;
  Scalar height;
};

Tower1D make_tower(Point2 base, Point2 top);

// An x-monotone corridor between two chains defined on a shared x-range.
// Houses Q, Q_p and Q-hat.
class Channel {
public:
  Channel(std::vector<Point2> lower, std::vector<Point2> upper);

  const std::vector<Point2>& lower() const { return lower_; }
  const std::vector<Point2>& upper() const { return upper_; }
  const Scalar& x_first() const { return lower_.front().x; }
  const Scalar& x_last() const { return lower_.back().x; }

  Scalar lower_at(const Scalar& x) const;
  Scalar upper_at(const Scalar& x) const;
  bool contains(const Point2& p) const;

private:
  std::vector<Point2> lower_;
  std::vector<Point2> upper_;
};

// The interval corridor: lower chain through the bottoms, upper chain
// through the tops.
Channel polygon_Q(const ImpreciseTerrain1D& T);

// Union of Q with the triangle t_k p t_{k+1}. If p is not strictly above
// the upper chain the triangle is contained and Q is returned unchanged.
// Requires x_k < p.x < x_{k+1} for consecutive upper-chain vertices.
Channel polygon_Qp(const Channel& Q, const Point2& p);

struct QhatResult {
  Channel channel;
  std::vector<Point2> dropped; // apexes contained in Q (or filtered)
};

// Upper chain = x-sorted merge of interval tops and retained apexes.
// Apexes on or below the tops' chain, outside the open x-range, or at an
// interval abscissa are dropped and reported.
QhatResult polygon_Qhat(const Channel& Q, const std::vector<Point2>& apexes);

} // namespace watchtower

#endif
