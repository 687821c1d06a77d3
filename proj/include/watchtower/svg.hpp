#ifndef WATCHTOWER_SVG_HPP
#define WATCHTOWER_SVG_HPP

#include "watchtower/solver1d.hpp"

#include <string>

namespace watchtower {

// Deterministic figure: interval segments, the realized polyline, the
// visibility-region boundary, and the tower.
std::string render_svg(const ImpreciseTerrain1D& T, const Solution1D& sol);

} // namespace watchtower

#endif
