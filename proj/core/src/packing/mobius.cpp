#include <cmath>

#include "galoisdraw/packing.hpp"

namespace galoisdraw {

MobiusMap MobiusMap::inversion(Complex q, double r) {
  // q + r^2 / (w - conj q) with w = conj z
  return {q, r * r - std::norm(q), Complex(1), -std::conj(q), true};
}

Complex mobius_apply(const MobiusMap& m, Complex z) {
  if (m.conjugate_first) z = std::conj(z);
  return (m.a * z + m.b) / (m.c * z + m.d);
}

Circle mobius_apply(const MobiusMap& m, const Circle& c) {
  if (std::abs(m.det()) == 0) throw InvalidArgument("degenerate Mobius map");
  Circle z = c;
  if (m.conjugate_first) z.center = std::conj(z.center);
  if (std::abs(m.c) == 0) return {(m.a * z.center + m.b) / m.d, std::abs(m.a / m.d) * z.radius};
  // w = c z + d, then 1/w, then a/c - (det/c)(1/w)
  const Complex o = m.c * z.center + m.d;
  const double rr = std::abs(m.c) * z.radius;
  const double pw = std::norm(o) - rr * rr;
  if (std::abs(pw) <= 1e-14 * std::max(std::norm(o), rr * rr))
    throw InvalidArgument("circle passes through the pole; its image is a line");
  const Complex inv_center = std::conj(o) / pw;
  const double inv_radius = rr / std::abs(pw);
  const Complex k = m.det() / m.c;
  return {m.a / m.c - k * inv_center, std::abs(k) * inv_radius};
}

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
  // f(g(z)) = F(s_f(G(s_g z))); conjugating G's coefficients moves s_f inside.
  Complex ga = g.a, gb = g.b, gc = g.c, gd = g.d;
  if (f.conjugate_first) {
    ga = std::conj(ga);
    gb = std::conj(gb);
    gc = std::conj(gc);
    gd = std::conj(gd);
  }
  return {f.a * ga + f.b * gc, f.a * gb + f.b * gd, f.c * ga + f.d * gc, f.c * gb + f.d * gd,
          f.conjugate_first != g.conjugate_first};
}

std::array<Complex, 2> limiting_points(const Circle& c1, const Circle& c2) {
  const Complex delta = c2.center - c1.center;
  const double d = std::abs(delta);
  if (d == 0) throw InvalidArgument("concentric circles have no finite limiting points");
  const double r1 = c1.radius, r2 = c2.radius;
  if (!(d > r1 + r2) && !(d < std::abs(r1 - r2))) throw InvalidArgument("circles intersect or are tangent");
  const Complex u = delta / d;
  // radical axis crosses the center line at distance t from c1
  const double t = (d * d + r1 * r1 - r2 * r2) / (2 * d);
  const double s = std::sqrt(t * t - r1 * r1);
  Complex p = c1.center + u * (t - s), q = c1.center + u * (t + s);
  if (std::abs(q - c1.center) < std::abs(p - c1.center)) std::swap(p, q);
  return {p, q};
}

MobiusMap concentric_map(const Circle& c1, const Circle& c2) {
  const double d = std::abs(c2.center - c1.center);
  const double r1 = c1.radius, r2 = c2.radius;
  if (!(d > r1 + r2) && !(d < std::abs(r1 - r2))) throw InvalidArgument("circles intersect or are tangent");
  if (d <= 1e-9 * (r1 + r2)) return MobiusMap::identity();
  const auto lp = limiting_points(c1, c2);
  Complex q = lp[0];
  if (d < std::abs(r1 - r2)) {
    // Nested: invert from the point outside both to keep the nesting.
    auto outside = [&](Complex z) { return std::abs(z - c1.center) > r1 && std::abs(z - c2.center) > r2; };
    q = outside(lp[0]) ? lp[0] : lp[1];
  }
  const double s = std::sqrt(std::abs(std::norm(q - c1.center) - r1 * r1));
  return MobiusMap::inversion(q, s);
}

Packing normalize_concentric(const Packing& p, std::size_t hub1, std::size_t hub2, std::optional<std::size_t> unit,
                             std::optional<std::size_t> axis) {
  const std::size_t n = p.circles.size();
  if (hub1 >= n || hub2 >= n || hub1 == hub2) throw InvalidArgument("bad hub vertices");
  if (!unit || !axis) {
    std::optional<std::size_t> common;
    for (std::size_t v = 0; v < n && !common; ++v)
      if (p.graph.has_edge(v, hub1) && p.graph.has_edge(v, hub2)) common = v;
    if (!common) throw InvalidArgument("no circle touches both hubs");
    if (!unit) unit = common;
    if (!axis) axis = common;
  }
  const MobiusMap m = concentric_map(p.circles[hub1], p.circles[hub2]);
  Packing out{p.graph, {}};
  for (const auto& c : p.circles) out.circles.push_back(mobius_apply(m, c));
  const Complex origin = 0.5 * (out.circles[hub1].center + out.circles[hub2].center);
  const double scale = 1.0 / out.circles[*unit].radius;
  const Complex turn = std::polar(1.0, -std::arg(out.circles[*axis].center - origin));
  for (auto& c : out.circles) {
    c.center = (c.center - origin) * turn * scale;
    c.radius *= scale;
  }
  return out;
}

}  // namespace galoisdraw
