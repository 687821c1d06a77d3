#ifndef WATCHTOWER_SOLVER1D_HPP
#define WATCHTOWER_SOLVER1D_HPP

#include "watchtower/channel_path.hpp"
#include "watchtower/terrain1d.hpp"
#include "watchtower/visibility1d.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace watchtower {

// True iff the segment ab stays on or above the realized polyline.
bool sees(const Point2& a, const Point2& b, const ImpreciseTerrain1D& T,
          const Realization1D& R);
bool sees(const Point2& a, const Point2& b, const std::vector<Point2>& polyline);

// Raises the first and last vertex to the tops of their intervals.
Realization1D raise_wings(const ImpreciseTerrain1D& T, Realization1D R);

// The canonical skeleton: shortest path from t_1 to t_n inside Q.
TautPath compute_pi(const ImpreciseTerrain1D& T);

struct DiscreteVertexCandidate {
  size_t index;
};
struct ApexCandidate {
  Point2 apex;
};
struct BaselinePiCandidate {};

using CandidateKind =
    std::variant<DiscreteVertexCandidate, ApexCandidate, BaselinePiCandidate>;

struct Solution1D {
  Scalar height;
  Realization1D realization;
  Tower1D tower;
  CandidateKind candidate;
};

// Why a certificate failed validation; empty reason means valid.
struct CertificateCheck {
  bool valid;
  std::string reason;
  explicit operator bool() const { return valid; }
};

// Re-verifies (realization, tower) against the terrain with the exact
// visibility predicates: intervals respected, base on the polyline, top
// inside the visibility region of the realization.
CertificateCheck validate_certificate(const ImpreciseTerrain1D& T,
                                      const Realization1D& R, const Tower1D& W);

// Algorithm: base restricted to a vertex; exact optimum in O(n log n).
Solution1D solve_discrete_1d(const ImpreciseTerrain1D& T);

// Base anywhere on the terrain; minimum over the pi baseline, the apex
// candidates of P, and the discrete candidates.
Solution1D solve_continuous_1d(const ImpreciseTerrain1D& T);

} // namespace watchtower

#endif
