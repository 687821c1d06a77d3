#include "watchtower/geometry.hpp"
#include "watchtower/errors.hpp"

namespace watchtower {

Scalar cross(const Point2& p, const Point2& q, const Point2& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point2& p, const Point2& q, const Point2& r) {
  int s = sgn(cross(p, q, r));
  if (s > 0) return Orientation::Left;
  if (s < 0) return Orientation::Right;
  return Orientation::Collinear;
}

Line2 make_line(Scalar a, Scalar b, Scalar c) {
  if (a == 0 && b == 0)
    throw Error(ErrorCode::ParseError, "degenerate line coefficients");
  // Clear denominators, reduce by gcd, fix the leading sign.
  mpz_class common_den = a.get_den();
  mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), b.get_den().get_mpz_t());
  mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_class ia = mpz_class(a.get_num() * (common_den / a.get_den()));
  mpz_class ib = mpz_class(b.get_num() * (common_den / b.get_den()));
  mpz_class ic = mpz_class(c.get_num() * (common_den / c.get_den()));
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
  if (g != 0) {
    ia /= g;
    ib /= g;
    ic /= g;
  }
  if (ia < 0 || (ia == 0 && ib < 0)) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  return Line2{Scalar(ia), Scalar(ib), Scalar(ic)};
}

Line2 line_through(const Point2& p, const Point2& q) {
  if (p == q)
    throw Error(ErrorCode::CoincidentPoints, "line through coincident points");
  Scalar a = q.y - p.y;
  Scalar b = p.x - q.x;
  Scalar c = a * p.x + b * p.y;
  return make_line(a, b, c);
}

Point2 intersect_lines(const Line2& l1, const Line2& l2) {
  Scalar det = l1.a * l2.b - l2.a * l1.b;
  if (det == 0)
    throw Error(ErrorCode::ParallelLines, "parallel or identical lines");
  Scalar x = (l1.c * l2.b - l2.c * l1.b) / det;
  Scalar y = (l1.a * l2.c - l2.a * l1.c) / det;
  return Point2{x, y};
}

Scalar y_at(const Line2& l, const Scalar& x) {
  if (l.is_vertical())
    throw Error(ErrorCode::VerticalLine, "y_at on a vertical line");
  return (l.c - l.a * x) / l.b;
}

} // namespace watchtower
