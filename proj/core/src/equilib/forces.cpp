#include <cmath>
#include <numbers>
#include <queue>

#include "galoisdraw/equilib.hpp"

namespace galoisdraw {

namespace {

double distance(const Point& p, const Point& q) { return std::hypot(p.x - q.x, p.y - q.y); }

void check_layout(const Graph& g, const Layout& layout) {
  if (layout.size() != g.size())
    throw InvalidArgument("layout has " + std::to_string(layout.size()) + " positions for " +
                          std::to_string(g.size()) + " vertices");
  for (const auto& p : layout)
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidArgument("layout has a non-finite coordinate");
}

[[noreturn]] void coincident(std::size_t i, std::size_t j) {
  throw InvalidArgument("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                        " coincide; repulsion is singular");
}

std::vector<std::vector<long>> hop_distances(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<long>> d(n, std::vector<long>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : g.neighbors(v))
        if (d[s][w] < 0) {
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
    }
    for (std::size_t t = 0; t < n; ++t)
      if (d[s][t] < 0) throw InvalidArgument("Kamada-Kawai energy needs a connected graph");
  }
  return d;
}

}  // namespace

std::vector<Point> fr_forces(const Graph& g, const Layout& layout, double k) {
  check_layout(g, layout);
  if (!(k > 0)) throw InvalidArgument("FR scale must be positive");
  const std::size_t n = g.size();
  std::vector<Point> f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = layout[j].x - layout[i].x, dy = layout[j].y - layout[i].y;
      const double d = std::hypot(dx, dy);
      if (d == 0) coincident(i, j);
      // signed magnitude along i -> j: attraction minus repulsion
      double m = -k * k / d;
      if (g.has_edge(i, j)) m += d * d / k;
      const double ux = dx / d, uy = dy / d;
      f[i].x += m * ux;
      f[i].y += m * uy;
      f[j].x -= m * ux;
      f[j].y -= m * uy;
    }
  return f;
}

namespace {

KKEvaluation kk_with_hops(const Graph& g, const std::vector<std::vector<long>>& hops, const Layout& layout,
                          const ForceModel& model) {
  const std::size_t n = g.size();
  KKEvaluation out;
  out.gradient.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = static_cast<double>(hops[i][j]);
      const double ell = model.L * dij, kij = model.K / (dij * dij);
      const double d = distance(layout[i], layout[j]);
      if (d == 0) coincident(i, j);
      out.energy += 0.5 * kij * (d - ell) * (d - ell);
      const double w = kij * (1 - ell / d);
      const double gx = w * (layout[i].x - layout[j].x), gy = w * (layout[i].y - layout[j].y);
      out.gradient[i].x += gx;
      out.gradient[i].y += gy;
      out.gradient[j].x -= gx;
      out.gradient[j].y -= gy;
    }
  return out;
}

}  // namespace

KKEvaluation kk_energy_gradient(const Graph& g, const Layout& layout, const ForceModel& model) {
  check_layout(g, layout);
  if (!(model.L > 0) || !(model.K > 0)) throw InvalidArgument("KK scales must be positive");
  return kk_with_hops(g, hop_distances(g), layout, model);
}

namespace {

// hops is only read for KK and may be empty for FR.
std::vector<Point> driving_force(const Graph& g, const ForceModel& model, const Layout& x,
                                 const std::vector<std::vector<long>>& hops) {
  if (model.kind == ForceKind::FR) return fr_forces(g, x, model.k);
  auto grad = kk_with_hops(g, hops, x, model).gradient;
  for (auto& p : grad) p = {-p.x, -p.y};
  return grad;
}

double max_norm(const std::vector<Point>& v) {
  double m = 0;
  for (const auto& p : v) m = std::max(m, std::hypot(p.x, p.y));
  return m;
}

std::vector<std::vector<long>> hops_for(const Graph& g, const ForceModel& model, const Layout& layout) {
  if (model.kind == ForceKind::FR) return {};
  check_layout(g, layout);
  if (!(model.L > 0) || !(model.K > 0)) throw InvalidArgument("KK scales must be positive");
  return hop_distances(g);
}

}  // namespace

double equilibrium_residual(const Graph& g, const ForceModel& model, const Layout& layout) {
  return max_norm(driving_force(g, model, layout, hops_for(g, model, layout)));
}

Layout numeric_equilibrium(const Graph& g, const ForceModel& model, Layout x, double tol,
                           const SolverOptions& opts) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const auto hops = hops_for(g, model, x);
  std::vector<Point> v(x.size());
  double res = 0;
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    auto f = driving_force(g, model, x, hops);
    res = max_norm(f);
    if (res < tol) return x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      v[i].x = opts.damping * v[i].x + opts.step * f[i].x;
      v[i].y = opts.damping * v[i].y + opts.step * f[i].y;
      x[i].x += v[i].x;
      x[i].y += v[i].y;
    }
  }
  throw EquilibriumNotConverged("no equilibrium within " + std::to_string(opts.max_iterations) +
                                    " iterations (residual " + std::to_string(res) + ")",
                                std::move(x), res);
}

Layout regular_polygon(std::size_t n, double radius) {
  Layout l(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * double(i) / double(n);
    l[i] = {radius * std::cos(t), radius * std::sin(t)};
  }
  return l;
}

double cycle_equilibrium_radius(std::size_t n, const ForceModel& model) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  const Graph c = cycle_graph(n);
  // Outward radial force on vertex 0, which sits on the positive x axis.
  const auto hops = hops_for(c, model, regular_polygon(n, 1));
  auto radial = [&](double r) { return driving_force(c, model, regular_polygon(n, r), hops)[0].x; };
  double lo = 1e-3, hi = 1e-3;
  if (radial(lo) <= 0) throw NotConverged("radial force does not push outward at small radius");
  while (radial(hi) > 0) {
    lo = hi;
    hi *= 2;
    if (hi > 1e9) throw NotConverged("could not bracket the cycle equilibrium radius");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (radial(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace galoisdraw
