#include "tensegrity/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tensegrity {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x == 0 ? 0.0 : x);  // avoid "-0"
  return buf;
}

}  // namespace

std::string render_svg(const Framework& f, const Stress& w) {
  if (f.d() != 2) throw std::invalid_argument("render supports d=2 only");
  const int n = f.n();

  // Display only: exact coordinates are converted to double here.
  std::vector<std::pair<double, double>> pts;
  for (int v = 1; v <= n; ++v) pts.push_back({f.config.at(v)[0].get_d(), -f.config.at(v)[1].get_d()});

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (!pts.empty()) {
    min_x = max_x = pts[0].first;
    min_y = max_y = pts[0].second;
    for (const auto& [x, y] : pts) {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  double width = max_x - min_x, height = max_y - min_y;
  const double extent = std::max({width, height, 0.0});
  if (width == 0) width = extent > 0 ? extent : 1;
  if (height == 0) height = extent > 0 ? extent : 1;
  const double cx = (min_x + max_x) / 2, cy = (min_y + max_y) / 2;
  const double view_w = width * 1.2, view_h = height * 1.2;
  const double scale = std::max(view_w, view_h);
  const double stroke = scale * 0.006;
  const double radius = scale * 0.012;
  const double font = scale * 0.04;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(cx - view_w / 2) << " " << num(cy - view_h / 2)
      << " " << num(view_w) << " " << num(view_h) << "\">\n";
  for (const Edge& e : f.graph.edges()) {
    const int s = sgn(w.get(e));
    const auto& [x1, y1] = pts[e.a - 1];
    const auto& [x2, y2] = pts[e.b - 1];
    const char* kind = s > 0 ? "strut" : s < 0 ? "cable" : "zero";
    const char* color = s > 0 ? "red" : s < 0 ? "blue" : "gray";
    out << "  <line class=\"" << kind << "\" x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
        << "\" y2=\"" << num(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << num(stroke) << "\"";
    if (s < 0) out << " stroke-dasharray=\"" << num(stroke * 4) << " " << num(stroke * 3) << "\"";
    out << "/>\n";
  }
  for (int v = 1; v <= n; ++v) {
    const auto& [x, y] = pts[v - 1];
    out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(radius) << "\" fill=\"black\"/>\n";
    out << "  <text x=\"" << num(x + radius * 1.5) << "\" y=\"" << num(y - radius * 1.5) << "\" font-size=\"" << num(font)
        << "\" font-family=\"sans-serif\">v" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tensegrity
