#ifndef WATCHTOWER_IO_HPP
#define WATCHTOWER_IO_HPP

#include "watchtower/mesh25d.hpp"
#include "watchtower/solver1d.hpp"

#include <json.hpp>

#include <string>

namespace watchtower {

using json = nlohmann::json;

// All numbers travel as exact rational strings ("3", "-1/2", "0.25"); the
// canonical serialized form is the reduced fraction.

ImpreciseTerrain1D terrain_from_json(const json& j);
json terrain_to_json(const ImpreciseTerrain1D& T);
ImpreciseTerrain1D parse_terrain_1d(const std::string& path);

ImpreciseMesh2_5D mesh_from_json(const json& j);
json mesh_to_json(const ImpreciseMesh2_5D& M);
ImpreciseMesh2_5D parse_mesh_2_5d(const std::string& path);

json point_to_json(const Point2& p);
Point2 point_from_json(const json& j);

// Solve report: exact optimum (fraction and 12-digit decimal), the
// certificate (realization + tower), candidate provenance, and timing.
json solution_report_1d(const ImpreciseTerrain1D& T, const Solution1D& sol,
                        const std::string& mode, double millis);

json zero_report_2_5d(const ImpreciseMesh2_5D& M, const ZeroWatchtowerResult& res,
                      double millis);
json approx_report_2_5d(const ImpreciseMesh2_5D& M, const ApproxResult& res,
                        const Scalar& epsilon, double millis);

// Certificate re-validation against the original input. The certificate
// is either a full report or just its "certificate" object.
bool validate_certificate_json(const json& input, const json& cert,
                               std::string& reason);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace watchtower

#endif
