#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "galoisdraw/cli.hpp"

namespace galoisdraw::cli {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool empty = true;
  void add(double x, double y, double r = 0) {
    if (empty) {
      x0 = x - r, x1 = x + r, y0 = y - r, y1 = y + r;
      empty = false;
      return;
    }
    x0 = std::min(x0, x - r), x1 = std::max(x1, x + r);
    y0 = std::min(y0, y - r), y1 = std::max(y1, y + r);
  }
};

// Header with a viewBox padded by 5% of the larger side; y is flipped by the
// callers so the drawing reads with y up.
std::string header(const Box& b) {
  if (b.empty)
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" width=\"400\" height=\"400\">\n";
  double w = b.x1 - b.x0, h = b.y1 - b.y0;
  const double side = std::max({w, h, 1e-9});
  const double pad = 0.05 * side;
  w += 2 * pad, h += 2 * pad;
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(b.x0 - pad) + " " + num(-b.y1 - pad) + " " +
         num(w) + " " + num(h) + "\" width=\"400\" height=\"" + num(400 * h / w) + "\">\n";
}

void require_finite(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("drawing has a non-finite coordinate");
}

}  // namespace

std::string format_layout(const Layout& layout) {
  std::string s;
  for (const auto& p : layout) s += num(p.x) + " " + num(p.y) + "\n";
  return s;
}

Layout parse_layout(std::istream& in) {
  Layout out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    Point p;
    if (!(ls >> p.x)) continue;
    if (!(ls >> p.y)) throw InvalidArgument("layout line " + std::to_string(lineno) + ": expected 'x y'");
    out.push_back(p);
  }
  return out;
}

std::string format_packing(const Packing& p) {
  std::string s;
  for (const auto& c : p.circles) s += num(c.center.real()) + " " + num(c.center.imag()) + " " + num(c.radius) + "\n";
  return s;
}

std::string layout_svg(const Graph& g, const Layout& layout) {
  if (g.size() != layout.size()) throw InvalidArgument("layout size does not match the graph");
  Box box;
  for (const auto& p : layout) {
    require_finite(p.x), require_finite(p.y);
    box.add(p.x, p.y);
  }
  const double dot = box.empty ? 0 : 0.015 * std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  std::string s = header(box);
  for (const auto& [u, v] : g.edges())
    s += "  <line x1=\"" + num(layout[u].x) + "\" y1=\"" + num(-layout[u].y) + "\" x2=\"" + num(layout[v].x) +
         "\" y2=\"" + num(-layout[v].y) + "\" stroke=\"black\" stroke-width=\"" + num(dot / 3) + "\"/>\n";
  for (const auto& p : layout)
    s += "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(-p.y) + "\" r=\"" + num(dot) + "\" fill=\"black\"/>\n";
  return s + "</svg>\n";
}

std::string packing_svg(const Packing& p) {
  Box box;
  for (const auto& c : p.circles) {
    require_finite(c.center.real()), require_finite(c.center.imag()), require_finite(c.radius);
    box.add(c.center.real(), c.center.imag(), c.radius);
  }
  const double stroke = box.empty ? 0 : 0.002 * std::max(box.x1 - box.x0, box.y1 - box.y0);
  std::string s = header(box);
  for (const auto& c : p.circles)
    s += "  <circle cx=\"" + num(c.center.real()) + "\" cy=\"" + num(-c.center.imag()) + "\" r=\"" + num(c.radius) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(stroke) + "\"/>\n";
  return s + "</svg>\n";
}

}  // namespace galoisdraw::cli
