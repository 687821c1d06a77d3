#include <doctest.h>

#include "watchtower/errors.hpp"
#include "watchtower/visibility1d.hpp"

#include "helpers.hpp"

#include <random>

using namespace watchtower;
using namespace watchtower::testing;

namespace {
Point2 P(long x, long y) { return {Scalar(x), Scalar(y)}; }
} // namespace

TEST_CASE("single edge region is its own line") {
  UpperRegion R = visibility_region({P(0, 0), P(1, 1)});
  CHECK(R.pieces().size() == 1);
  CHECK(R.boundary_at(Scalar(7)) == 7);
  CHECK(R.vertices().empty());
}

TEST_CASE("V polyline region") {
  UpperRegion R = visibility_region({P(0, 1), P(1, 0), P(2, 1)});
  CHECK(R.pieces().size() == 2);
  CHECK(R.boundary_at(Scalar(1)) == 0);
  CHECK(R.boundary_at(Scalar(0)) == 1);
  CHECK(R.vertices() == std::vector<Point2>{P(1, 0)});
}

TEST_CASE("M polyline region is max(x, 4-x)") {
  UpperRegion R = visibility_region(m_polyline());
  CHECK(R.pieces().size() == 2); // the two middle constraints are redundant
  CHECK(R.boundary_at(Scalar(0)) == 4);
  CHECK(R.boundary_at(Scalar(2)) == 2);
  CHECK(R.boundary_at(Scalar(4)) == 4);
  CHECK(R.vertices() == std::vector<Point2>{P(2, 2)});
}

TEST_CASE("degenerate polylines are rejected") {
  CHECK_THROWS_AS(visibility_region({P(0, 0)}), Error);
  CHECK_THROWS_AS(visibility_region({P(0, 0), P(0, 1)}), Error);
}

TEST_CASE("boundary dominates the generating polyline") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    ImpreciseTerrain1D T = random_terrain(rng, 2 + trial % 8, 30);
    Realization1D R = random_realization(rng, T);
    std::vector<Point2> poly;
    for (size_t i = 0; i < T.size(); ++i) poly.push_back(realized_vertex(T, R, i));
    UpperRegion region = visibility_region(poly);
    for (const Point2& v : poly) CHECK(region.boundary_at(v.x) >= v.y);
    // slopes strictly increase
    for (size_t i = 1; i < region.pieces().size(); ++i) {
      const Line2& a = region.pieces()[i - 1];
      const Line2& b = region.pieces()[i];
      CHECK(-a.a / a.b < -b.a / b.b);
    }
  }
}

TEST_CASE("fixed_terrain_watchtower") {
  SUBCASE("concave V has zero height everywhere, leftmost base returned") {
    Tower1D W = fixed_terrain_watchtower({P(0, 1), P(1, 0), P(2, 1)});
    CHECK(W.height == 0);
    CHECK(W.base == P(0, 1));
  }
  SUBCASE("single edge: zero at the leftmost point") {
    Tower1D W = fixed_terrain_watchtower({P(0, 0), P(1, 1)});
    CHECK(W.height == 0);
    CHECK(W.base == P(0, 0));
  }
  SUBCASE("M polyline: height 2, leftmost argmin x=1") {
    Tower1D W = fixed_terrain_watchtower(m_polyline());
    CHECK(W.height == 2);
    CHECK(W.base == P(1, 1));
    CHECK(W.top == P(1, 3));
  }
}

TEST_CASE("boundary points see the whole polyline") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    ImpreciseTerrain1D T = random_terrain(rng, 2 + trial % 6, 20);
    Realization1D R = random_realization(rng, T);
    std::vector<Point2> poly;
    for (size_t i = 0; i < T.size(); ++i) poly.push_back(realized_vertex(T, R, i));
    UpperRegion region = visibility_region(poly);
    for (const Point2& v : poly) {
      Point2 probe{v.x, region.boundary_at(v.x)};
      for (const Point2& w : poly) CHECK(sees(probe, w, poly));
    }
  }
}
