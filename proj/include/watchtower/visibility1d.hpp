#ifndef WATCHTOWER_VISIBILITY1D_HPP
#define WATCHTOWER_VISIBILITY1D_HPP

#include "watchtower/terrain1d.hpp"

#include <vector>

namespace watchtower {

// The unbounded convex region above the upper envelope of a family of
// non-vertical lines: pieces with strictly increasing slope separated by
// the breakpoint abscissas (breaks.size() == pieces.size() - 1).
class UpperRegion {
public:
  UpperRegion(std::vector<Line2> pieces, std::vector<Scalar> breaks);

  const std::vector<Line2>& pieces() const { return pieces_; }
  const std::vector<Scalar>& breaks() const { return breaks_; }

  Scalar boundary_at(const Scalar& x) const;

  // Boundary vertices: intersections of consecutive pieces.
  std::vector<Point2> vertices() const;

private:
  std::vector<Line2> pieces_;
  std::vector<Scalar> breaks_;
};

// Intersection of the upper halfplanes of all edge extensions of an
// x-monotone polyline; redundant halfplanes removed.
UpperRegion visibility_region(const std::vector<Point2>& polyline);

// Shortest watchtower of a fixed (precise) terrain: minimizes
// boundary(x) - polyline(x) over the terrain's x-range; ties broken by
// smallest x.
Tower1D fixed_terrain_watchtower(const std::vector<Point2>& polyline);
Tower1D fixed_terrain_watchtower(const std::vector<Point2>& polyline,
                                 const UpperRegion& region);

} // namespace watchtower

#endif
