#pragma once

/**
 * @file svg.hpp
 * @brief SVG 1.1 wall diagrams. The only place rationals become doubles.
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "quadwall/scenarios.hpp"
#include "quadwall/walls.hpp"

namespace quadwall {

struct PlotWall {
  Wall wall;
  std::string label;
};

struct PlotSpec {
  std::string title;
  std::vector<PlotWall> walls;
  std::optional<Rational> nu_zero_beta;  // dashed vertical line
};

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace detail

/// Walls sharing a circle are drawn once with their labels stacked.
inline std::string render_svg(const PlotSpec& spec) {
  using detail::fmt;
  const double width = 640, height = 400, margin = 48;

  double lo = 0, hi = 0, top = 0;
  bool first = true;
  for (const auto& w : spec.walls) {
    const double c = w.wall.center_beta.get_d();
    const double r = std::sqrt(w.wall.radius_sq.get_d());
    lo = first ? c - r : std::min(lo, c - r);
    hi = first ? c + r : std::max(hi, c + r);
    top = std::max(top, r);
    first = false;
  }
  if (spec.nu_zero_beta) {
    const double b = spec.nu_zero_beta->get_d();
    lo = first ? b - 1 : std::min(lo, b);
    hi = first ? b + 1 : std::max(hi, b);
  }
  if (first && !spec.nu_zero_beta) lo = -1, hi = 1;
  if (top <= 0) top = (hi - lo) / 2;
  const double pad = 0.1 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double scale = std::min((width - 2 * margin) / (hi - lo), (height - 2 * margin) / (1.15 * top));
  const double base_y = height - margin;
  auto px = [&](double beta) { return margin + (beta - lo) * scale; };
  auto py = [&](double alpha) { return base_y - alpha * scale; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
    << "<title>" << detail::xml_escape(spec.title) << "</title>\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes: beta horizontal, alpha vertical through beta = 0 when visible.
  o << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(base_y) << "\" x2=\"" << fmt(width - margin) << "\" y2=\""
    << fmt(base_y) << "\" stroke=\"black\"/>\n"
    << "<text x=\"" << fmt(width - margin + 6) << "\" y=\"" << fmt(base_y + 4) << "\" font-size=\"14\">&#946;</text>\n";
  const double axis_beta = (lo <= 0 && 0 <= hi) ? 0.0 : lo;
  o << "<line x1=\"" << fmt(px(axis_beta)) << "\" y1=\"" << fmt(base_y) << "\" x2=\"" << fmt(px(axis_beta))
    << "\" y2=\"" << fmt(margin / 2) << "\" stroke=\"black\"/>\n"
    << "<text x=\"" << fmt(px(axis_beta) + 4) << "\" y=\"" << fmt(margin / 2 + 4)
    << "\" font-size=\"14\">&#945;</text>\n";

  if (spec.nu_zero_beta) {
    const double b = spec.nu_zero_beta->get_d();
    o << "<line x1=\"" << fmt(px(b)) << "\" y1=\"" << fmt(base_y) << "\" x2=\"" << fmt(px(b)) << "\" y2=\""
      << fmt(margin / 2) << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n"
      << "<text x=\"" << fmt(px(b) + 4) << "\" y=\"" << fmt(base_y - 6) << "\" font-size=\"11\" fill=\"gray\">"
      << "&#957;=0 (&#946;=" << to_string(*spec.nu_zero_beta) << ")</text>\n";
  }

  // Group labels by exact circle.
  std::vector<std::pair<Wall, std::vector<std::string>>> circles;
  for (const auto& w : spec.walls) {
    auto it = std::find_if(circles.begin(), circles.end(), [&](const auto& c) { return c.first == w.wall; });
    if (it == circles.end()) circles.push_back({w.wall, {w.label}});
    else it->second.push_back(w.label);
  }
  for (const auto& [wall, labels] : circles) {
    const double c = wall.center_beta.get_d();
    const double r = std::sqrt(wall.radius_sq.get_d());
    o << "<path d=\"M " << fmt(px(c - r)) << ' ' << fmt(base_y) << " A " << fmt(r * scale) << ' ' << fmt(r * scale)
      << " 0 0 1 " << fmt(px(c + r)) << ' ' << fmt(base_y) << "\" fill=\"none\" stroke=\"navy\" stroke-width=\"1.5\"/>\n";
    double y = py(r) - 4;
    for (const auto& label : labels) {
      o << "<text x=\"" << fmt(px(c) + 4) << "\" y=\"" << fmt(y) << "\" font-size=\"11\">"
        << detail::xml_escape(label + "  R^2=" + to_string(wall.radius_sq)) << "</text>\n";
      y -= 13;
    }
  }
  o << "</svg>\n";
  return o.str();
}

inline PlotSpec plot_spec(const Scenario& s) {
  PlotSpec spec{"Walls for " + s.label + ", H = " + to_string(s.h.divisor()), {}, std::nullopt};
  for (const auto& w : s.walls)
    spec.walls.push_back({w.wall, w.name + ": " + format_object(w.subobject) + " -> E -> " + format_object(w.quotient)});
  const Invariants vi = invariants(s.v, s.h);
  if (vi.r == 0 && vi.d != 0) spec.nu_zero_beta = make_rational(vi.c, vi.d);
  return spec;
}

}  // namespace quadwall
