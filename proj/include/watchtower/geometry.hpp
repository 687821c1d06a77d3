#ifndef WATCHTOWER_GEOMETRY_HPP
#define WATCHTOWER_GEOMETRY_HPP

#include "watchtower/scalar.hpp"

#include <compare>

namespace watchtower {

struct Point2 {
  Scalar x;
  Scalar y;

  bool operator==(const Point2& other) const {
    return x == other.x && y == other.y;
  }
  bool operator!=(const Point2& other) const { return !(*this == other); }
};

struct Point3 {
  Scalar x;
  Scalar y;
  Scalar z;

  bool operator==(const Point3& other) const {
    return x == other.x && y == other.y && z == other.z;
  }
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

// Sign of det(q - p, r - p); Left = counterclockwise.
Orientation orientation(const Point2& p, const Point2& q, const Point2& r);

// Raw cross product (q - p) x (r - p), when the magnitude matters.
Scalar cross(const Point2& p, const Point2& q, const Point2& r);

// A line a*x + b*y = c, normalized so the representation is unique per
// geometric line: gcd(a, b, c) = 1 and the leading nonzero of (a, b) is
// positive.
struct Line2 {
  Scalar a;
  Scalar b;
  Scalar c;

  bool operator==(const Line2& other) const {
    return a == other.a && b == other.b && c == other.c;
  }

  bool is_vertical() const { return b == 0; }
  bool contains(const Point2& p) const { return a * p.x + b * p.y == c; }
};

Line2 make_line(Scalar a, Scalar b, Scalar c); // normalizes
Line2 line_through(const Point2& p, const Point2& q);
Point2 intersect_lines(const Line2& l1, const Line2& l2);
Scalar y_at(const Line2& l, const Scalar& x);

} // namespace watchtower

#endif
