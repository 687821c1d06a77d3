#include "watchtower/svg.hpp"
#include "watchtower/visibility1d.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace watchtower {

namespace {

double d(const Scalar& v) { return v.get_d(); }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

} // namespace

std::string render_svg(const ImpreciseTerrain1D& T, const Solution1D& sol) {
  double x_min = d(T.vertices.front().x);
  double x_max = d(T.vertices.back().x);
  double y_min = d(T.vertices.front().low);
  double y_max = d(T.vertices.front().high);
  for (const auto& v : T.vertices) {
    y_min = std::min(y_min, d(v.low));
    y_max = std::max(y_max, d(v.high));
  }
  y_max = std::max(y_max, d(sol.tower.top.y));

  std::vector<Point2> poly;
  for (size_t i = 0; i < T.size(); ++i)
    poly.push_back(realized_vertex(T, sol.realization, i));
  UpperRegion region = visibility_region(poly);

  const double W = 640, H = 480, margin = 40;
  double span_x = std::max(x_max - x_min, 1e-9);
  double span_y = std::max(y_max - y_min, 1e-9);
  auto px = [&](double x) { return margin + (x - x_min) / span_x * (W - 2 * margin); };
  auto py = [&](double y) { return H - margin - (y - y_min) / span_y * (H - 2 * margin); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  out += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";

  // boundary of the visibility region, sampled at breaks and range ends
  {
    std::vector<Scalar> xs{T.vertices.front().x};
    for (const Scalar& b : region.breaks())
      if (b > T.vertices.front().x && b < T.vertices.back().x) xs.push_back(b);
    xs.push_back(T.vertices.back().x);
    out += "<polyline fill=\"none\" stroke=\"#2b7de9\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6 3\" points=\"";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) out += " ";
      out += num(px(d(xs[i]))) + "," + num(py(d(region.boundary_at(xs[i]))));
    }
    out += "\"/>\n";
  }

  for (const auto& v : T.vertices) {
    out += "<line stroke=\"#999999\" stroke-width=\"3\" stroke-linecap=\"round\" x1=\"" +
           num(px(d(v.x))) + "\" y1=\"" + num(py(d(v.low))) + "\" x2=\"" +
           num(px(d(v.x))) + "\" y2=\"" + num(py(d(v.high))) + "\"/>\n";
  }

  out += "<polyline fill=\"none\" stroke=\"#222222\" stroke-width=\"2\" points=\"";
  for (size_t i = 0; i < poly.size(); ++i) {
    if (i) out += " ";
    out += num(px(d(poly[i].x))) + "," + num(py(d(poly[i].y)));
  }
  out += "\"/>\n";

  out += "<line stroke=\"#d62728\" stroke-width=\"2.5\" x1=\"" +
         num(px(d(sol.tower.base.x))) + "\" y1=\"" + num(py(d(sol.tower.base.y))) +
         "\" x2=\"" + num(px(d(sol.tower.top.x))) + "\" y2=\"" +
         num(py(d(sol.tower.top.y))) + "\"/>\n";
  out += "<circle fill=\"#d62728\" r=\"4\" cx=\"" + num(px(d(sol.tower.top.x))) +
         "\" cy=\"" + num(py(d(sol.tower.top.y))) + "\"/>\n";
  out += "</svg>\n";
  return out;
}

} // namespace watchtower
