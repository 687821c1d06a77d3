#include "watchtower/io.hpp"
#include "watchtower/errors.hpp"

#include <fstream>
#include <sstream>

namespace watchtower {

namespace {

Scalar scalar_field(const json& j, const char* key) {
  if (!j.contains(key))
    throw Error(ErrorCode::ParseError, std::string("missing field: ") + key);
  const json& v = j.at(key);
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer())
    return Scalar((long)v.get<long long>());
  throw Error(ErrorCode::ParseError,
              std::string("field must be a rational string: ") + key);
}

std::string frac(const Scalar& v) { return to_fraction_string(v); }

} // namespace

ImpreciseTerrain1D terrain_from_json(const json& j) {
  if (!j.contains("vertices") || !j.at("vertices").is_array())
    throw Error(ErrorCode::ParseError, "terrain needs a vertices array");
  std::vector<UncertainVertex1D> verts;
  for (const json& v : j.at("vertices"))
    verts.push_back({scalar_field(v, "x"), scalar_field(v, "low"),
                     scalar_field(v, "high")});
  return validate_terrain(std::move(verts));
}

json terrain_to_json(const ImpreciseTerrain1D& T) {
  json verts = json::array();
  for (const auto& v : T.vertices)
    verts.push_back({{"x", frac(v.x)}, {"low", frac(v.low)}, {"high", frac(v.high)}});
  return json{{"vertices", std::move(verts)}};
}

ImpreciseMesh2_5D mesh_from_json(const json& j) {
  if (!j.contains("vertices") || !j.at("vertices").is_array())
    throw Error(ErrorCode::ParseError, "mesh needs a vertices array");
  if (!j.contains("triangles") || !j.at("triangles").is_array())
    throw Error(ErrorCode::ParseError, "mesh needs a triangles array");
  std::vector<UncertainVertex2_5D> verts;
  for (const json& v : j.at("vertices"))
    verts.push_back({scalar_field(v, "x"), scalar_field(v, "y"),
                     scalar_field(v, "low"), scalar_field(v, "high")});
  std::vector<std::array<size_t, 3>> tris;
  for (const json& t : j.at("triangles")) {
    if (!t.is_array() || t.size() != 3)
      throw Error(ErrorCode::ParseError, "triangle must be an index triple");
    tris.push_back({t[0].get<size_t>(), t[1].get<size_t>(), t[2].get<size_t>()});
  }
  return validate_mesh(std::move(verts), std::move(tris));
}

json mesh_to_json(const ImpreciseMesh2_5D& M) {
  json verts = json::array();
  for (const auto& v : M.vertices)
    verts.push_back({{"x", frac(v.x)},
                     {"y", frac(v.y)},
                     {"low", frac(v.low)},
                     {"high", frac(v.high)}});
  json tris = json::array();
  for (const auto& t : M.triangles) tris.push_back({t[0], t[1], t[2]});
  return json{{"vertices", std::move(verts)}, {"triangles", std::move(tris)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

ImpreciseTerrain1D parse_terrain_1d(const std::string& path) {
  return terrain_from_json(load_json_file(path));
}

ImpreciseMesh2_5D parse_mesh_2_5d(const std::string& path) {
  return mesh_from_json(load_json_file(path));
}

json point_to_json(const Point2& p) {
  return json{{"x", frac(p.x)}, {"y", frac(p.y)}};
}

Point2 point_from_json(const json& j) {
  return {scalar_field(j, "x"), scalar_field(j, "y")};
}

namespace {

json height_json(const Scalar& h) {
  return json{{"fraction", frac(h)}, {"decimal", to_decimal_string(h)}};
}

json realization_json(const std::vector<Scalar>& heights) {
  json arr = json::array();
  for (const Scalar& h : heights) arr.push_back(frac(h));
  return arr;
}

std::string candidate_name(const CandidateKind& kind) {
  if (std::holds_alternative<DiscreteVertexCandidate>(kind)) return "vertex";
  if (std::holds_alternative<ApexCandidate>(kind)) return "apex";
  return "baseline";
}

} // namespace

json solution_report_1d(const ImpreciseTerrain1D& T, const Solution1D& sol,
                        const std::string& mode, double millis) {
  json provenance{{"kind", candidate_name(sol.candidate)}};
  if (const auto* v = std::get_if<DiscreteVertexCandidate>(&sol.candidate))
    provenance["vertex_index"] = v->index;
  if (const auto* a = std::get_if<ApexCandidate>(&sol.candidate))
    provenance["apex"] = point_to_json(a->apex);
  return json{{"problem", "watchtower1d"},
              {"mode", mode},
              {"height", height_json(sol.height)},
              {"candidate", std::move(provenance)},
              {"certificate",
               {{"realization", realization_json(sol.realization.heights)},
                {"tower",
                 {{"base", point_to_json(sol.tower.base)},
                  {"top", point_to_json(sol.tower.top)}}}}},
              {"timing_ms", millis}};
}

json zero_report_2_5d(const ImpreciseMesh2_5D&, const ZeroWatchtowerResult& res,
                      double millis) {
  return json{{"problem", "watchtower25d_zero"},
              {"guarded", true},
              {"certificate",
               {{"vertex", res.vertex},
                {"height", height_json(Scalar(0))},
                {"realization", realization_json(res.realization.z)}}},
              {"timing_ms", millis}};
}

json approx_report_2_5d(const ImpreciseMesh2_5D&, const ApproxResult& res,
                        const Scalar& epsilon, double millis) {
  return json{{"problem", "watchtower25d_approx"},
              {"epsilon", frac(epsilon)},
              {"height", height_json(res.height)},
              {"certificate",
               {{"vertex", res.vertex},
                {"height", height_json(res.height)},
                {"realization", realization_json(res.realization.z)}}},
              {"timing_ms", millis}};
}

namespace {

std::vector<Scalar> scalars_from_array(const json& arr) {
  std::vector<Scalar> out;
  for (const json& v : arr) {
    if (v.is_string())
      out.push_back(parse_scalar(v.get<std::string>()));
    else if (v.is_number_integer())
      out.push_back(Scalar((long)v.get<long long>()));
    else
      throw Error(ErrorCode::ParseError, "expected rational string");
  }
  return out;
}

} // namespace

bool validate_certificate_json(const json& input, const json& cert,
                               std::string& reason) {
  const json& c = cert.contains("certificate") ? cert.at("certificate") : cert;
  try {
    if (c.contains("tower")) {
      ImpreciseTerrain1D T = terrain_from_json(input);
      Realization1D R{scalars_from_array(c.at("realization"))};
      Point2 base = point_from_json(c.at("tower").at("base"));
      Point2 top = point_from_json(c.at("tower").at("top"));
      CertificateCheck check = validate_certificate(T, R, make_tower(base, top));
      reason = check.reason;
      return check.valid;
    }
    if (c.contains("vertex")) {
      ImpreciseMesh2_5D M = mesh_from_json(input);
      Realization2_5D R{scalars_from_array(c.at("realization"))};
      size_t vertex = c.at("vertex").get<size_t>();
      Scalar h(0);
      if (c.contains("height"))
        h = parse_scalar(c.at("height").at("fraction").get<std::string>());
      if (vertex >= M.size()) {
        reason = "base vertex out of range";
        return false;
      }
      if (!realization_in_intervals(M, R)) {
        reason = "realization leaves an interval";
        return false;
      }
      if (R.z[vertex] != M.vertices[vertex].high) {
        reason = "base vertex not at its interval top";
        return false;
      }
      if (h < 0) {
        reason = "negative tower height";
        return false;
      }
      if (!sees_all({vertex, h}, M, R)) {
        reason = "viewpoint does not guard the realization";
        return false;
      }
      reason.clear();
      return true;
    }
  } catch (const Error& e) {
    reason = e.what();
    return false;
  } catch (const json::exception& e) {
    reason = std::string("malformed certificate: ") + e.what();
    return false;
  }
  reason = "unrecognized certificate shape";
  return false;
}

} // namespace watchtower
