#include "arcdiag/render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace arcdiag {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x = 0, y = 0;
};

std::string fmt(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') {
    s.erase(0, 1);  // avoid the sign flickering on a rounded zero
  }
  return s;
}

void require_valid(const ArcDiagram& d, const char* who) {
  auto v = validate(d);
  if (!v.ok()) {
    throw std::invalid_argument(std::string(who) + ": invalid diagram: " + v.detail);
  }
}

Point lerp(Point a, Point b, double t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

// Positions run clockwise from the leftmost point. `sweep` is +1 when the
// drawing surface's y axis points down (SVG) and -1 when it points up (TikZ).
Point on_circle(Point center, double radius, int position, int points, int sweep) {
  double angle = kPi + sweep * 2.0 * kPi * position / points;
  return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
}

std::string label_text(int label, bool latex) {
  if (latex) {
    return label == 0 ? "$z_{\\infty}$" : "$z_{" + std::to_string(label) + "}$";
  }
  return label == 0 ? "z\u221e" : "z" + std::to_string(label);
}

}  // namespace

std::string render_svg(const ArcDiagram& d) {
  require_valid(d, "render_svg");
  const int points = d.point_count();
  const Point center{210, 210};
  const double radius = 170;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"420\" height=\"420\" viewBox=\"0 0 420 420\">\n";
  out += "<circle class=\"boundary\" cx=\"" + fmt(center.x, 2) + "\" cy=\"" +
         fmt(center.y, 2) + "\" r=\"" + fmt(radius, 2) +
         "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";

  for (const auto& [chord, mult] : d.chords) {
    Point a = on_circle(center, radius, chord.first, points, +1);
    Point b = on_circle(center, radius, chord.second, points, +1);
    Point mid = lerp(a, b, 0.5);
    for (int t = 0; t < mult; ++t) {
      Point ctrl = lerp(mid, center, static_cast<double>(t + 1) / (mult + 1));
      out += "<path class=\"arc\" d=\"M " + fmt(a.x, 2) + " " + fmt(a.y, 2) +
             " Q " + fmt(ctrl.x, 2) + " " + fmt(ctrl.y, 2) + " " + fmt(b.x, 2) +
             " " + fmt(b.y, 2) + "\" fill=\"none\" stroke=\"#000000\"/>\n";
    }
  }

  for (int p = 0; p < points; ++p) {
    Point at = on_circle(center, radius, p, points, +1);
    out += "<circle class=\"point\" cx=\"" + fmt(at.x, 2) + "\" cy=\"" +
           fmt(at.y, 2) + "\" r=\"3.00\" fill=\"#000000\"/>\n";
    Point anchor = on_circle(center, radius + 22, p, points, +1);
    out += "<text class=\"label\" x=\"" + fmt(anchor.x, 2) + "\" y=\"" +
           fmt(anchor.y + 5, 2) +
           "\" font-size=\"14\" text-anchor=\"middle\">" +
           label_text(d.arrangement[static_cast<std::size_t>(p)], false) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_tikz(const ArcDiagram& d) {
  require_valid(d, "render_tikz");
  const int points = d.point_count();
  const Point center{0, 0};
  const double radius = 2.0;

  auto coord = [](Point p) {
    return "(" + fmt(p.x, 3) + "," + fmt(p.y, 3) + ")";
  };

  std::string out;
  out += "\\documentclass[border=2pt]{standalone}\n";
  out += "\\usepackage{tikz}\n";
  out += "\\begin{document}\n";
  out += "\\begin{tikzpicture}\n";
  out += "\\draw[lightgray] (0,0) circle (" + fmt(radius, 3) + ");\n";

  for (const auto& [chord, mult] : d.chords) {
    Point a = on_circle(center, radius, chord.first, points, -1);
    Point b = on_circle(center, radius, chord.second, points, -1);
    Point mid = lerp(a, b, 0.5);
    for (int t = 0; t < mult; ++t) {
      Point ctrl = lerp(mid, center, static_cast<double>(t + 1) / (mult + 1));
      out += "\\draw " + coord(a) + " .. controls " + coord(ctrl) + " .. " +
             coord(b) + ";\n";
    }
  }

  for (int p = 0; p < points; ++p) {
    Point at = on_circle(center, radius, p, points, -1);
    out += "\\fill " + coord(at) + " circle (1.5pt);\n";
    Point anchor = on_circle(center, radius + 0.45, p, points, -1);
    out += "\\node at " + coord(anchor) + " {" +
           label_text(d.arrangement[static_cast<std::size_t>(p)], true) + "};\n";
  }
  out += "\\end{tikzpicture}\n";
  out += "\\end{document}\n";
  return out;
}

}  // namespace arcdiag
