#include <doctest.h>

#include "watchtower/channel_path.hpp"
#include "watchtower/errors.hpp"

#include "helpers.hpp"

#include <random>

using namespace watchtower;
using namespace watchtower::testing;

namespace {

Point2 P(long x, long y) { return {Scalar(x), Scalar(y)}; }

double dist(const Point2& a, const Point2& b) {
  double dx = Scalar(b.x - a.x).get_d();
  double dy = Scalar(b.y - a.y).get_d();
  return std::sqrt(dx * dx + dy * dy);
}

double length_of(const std::vector<Point2>& pts) {
  double total = 0;
  for (size_t i = 1; i < pts.size(); ++i) total += dist(pts[i - 1], pts[i]);
  return total;
}

} // namespace

TEST_CASE("unobstructed channel gives a straight path") {
  Channel C({P(0, 0), P(3, 0)}, {P(0, 2), P(3, 2)});
  TautPath path = taut_path(C, P(0, 1), P(3, 1));
  CHECK(path.bends == std::vector<Point2>{P(0, 1), P(3, 1)});
}

TEST_CASE("reflex bottom vertex forces the unique bend") {
  Channel C({P(0, 1), P(1, 3), P(2, 1)}, {P(0, 1), P(1, 10), P(2, 1)});
  TautPath path = taut_path(C, P(0, 1), P(2, 1));
  CHECK(path.bends == std::vector<Point2>{P(0, 1), P(1, 3), P(2, 1)});
}

TEST_CASE("pi of the M instance") {
  Channel Q = polygon_Q(m_instance());
  TautPath pi = taut_path(Q, P(0, 0), P(4, 0));
  CHECK(pi.bends == std::vector<Point2>{P(0, 0), P(1, 1),
                                        Point2{Scalar(2), Scalar(1, 2)},
                                        P(3, 1), P(4, 0)});
}

TEST_CASE("endpoints must lie in the channel") {
  Channel C({P(0, 0), P(2, 0)}, {P(0, 1), P(2, 1)});
  CHECK_THROWS_WITH_AS(taut_path(C, P(0, 5), P(2, 0)),
                       doctest::Contains("EndpointOutsideChannel"), Error);
}

TEST_CASE("crossing_with_vertical") {
  TautPath path{{P(0, 0), P(2, 2)}};
  CHECK(crossing_with_vertical(path, Scalar(1)) == P(1, 1));
  CHECK(crossing_with_vertical(path, Scalar(2)) == P(2, 2));
  CHECK_THROWS_AS(crossing_with_vertical(path, Scalar(3)), Error);

  TautPath bent{{P(0, 0), P(1, 1), P(2, 0)}};
  CHECK(crossing_with_vertical(bent, Scalar(1)) == P(1, 1));
}

TEST_CASE("rho1 toward an apex over the M instance") {
  Channel Q = polygon_Q(m_instance());
  Point2 apex{Scalar(3, 2), Scalar(2)};
  Channel Qp = polygon_Qp(Q, apex);
  TautPath rho1 = taut_path(Qp, P(0, 0), apex);
  CHECK(crossing_with_vertical(rho1, Scalar(1)) == P(1, 1));
}

TEST_CASE("shortest_path_tree matches taut_path on every upper vertex") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    ImpreciseTerrain1D T = random_terrain(rng, 2 + trial % 7, 15);
    Channel Q = polygon_Q(T);
    Point2 s = Q.upper().front();
    auto tree = shortest_path_tree(Q, s);
    REQUIRE(tree.size() == Q.upper().size() - 1);
    for (const TreeEntry& entry : tree) {
      const Point2& t = Q.upper()[entry.vertex];
      if (t == s) continue;
      TautPath direct = taut_path(Q, s, t);
      REQUIRE(direct.bends.size() >= 2);
      CHECK(direct.bends[direct.bends.size() - 2] == entry.prev);
      CHECK(entry.length == doctest::Approx(direct.length()).epsilon(1e-9));
    }
  }
}

TEST_CASE("tree from the right wall is the mirror of the left sweep") {
  Channel Q = polygon_Q(m_instance());
  auto tree = shortest_path_tree(Q, Q.upper().back());
  for (const TreeEntry& entry : tree) {
    const Point2& t = Q.upper()[entry.vertex];
    if (t == Q.upper().back()) continue;
    TautPath direct = taut_path(Q, Q.upper().back(), t);
    // bends run in increasing x, so the bend after t is its predecessor
    // on the walk from the right-wall source
    CHECK(direct.bends[1] == entry.prev);
  }
}

TEST_CASE("taut path properties on random channels") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    ImpreciseTerrain1D T = random_terrain(rng, 2 + trial % 8, 20);
    Channel Q = polygon_Q(T);
    TautPath pi = taut_path(Q, Q.upper().front(), Q.upper().back());

    // x-monotone, inside the channel, turn directions match the chains
    for (size_t i = 1; i < pi.bends.size(); ++i)
      CHECK(pi.bends[i - 1].x < pi.bends[i].x);
    for (const Point2& b : pi.bends) CHECK(Q.contains(b));
    for (size_t i = 1; i + 1 < pi.bends.size(); ++i) {
      Orientation o = orientation(pi.bends[i - 1], pi.bends[i], pi.bends[i + 1]);
      if (o == Orientation::Collinear) continue;
      if (o == Orientation::Right)
        CHECK(pi.bends[i].y == Q.lower_at(pi.bends[i].x));
      else
        CHECK(pi.bends[i].y == Q.upper_at(pi.bends[i].x));
    }

    // local optimality: nudging any bend within its vertical slack inside
    // the channel never shortens the path
    double base_len = pi.length();
    for (size_t i = 1; i + 1 < pi.bends.size(); ++i) {
      for (int step = -2; step <= 2; ++step) {
        if (step == 0) continue;
        Scalar lo = Q.lower_at(pi.bends[i].x);
        Scalar hi = Q.upper_at(pi.bends[i].x);
        Scalar y = pi.bends[i].y + Scalar(step) * (hi - lo) / 5;
        if (y < lo || y > hi) continue;
        std::vector<Point2> alt = pi.bends;
        alt[i].y = y;
        CHECK(length_of(alt) >= base_len - 1e-9);
      }
    }
  }
}
