#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <cmath>
#include <numbers>

#include "galoisdraw/packing.hpp"

namespace galoisdraw {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

// Cyclic neighbor order at every vertex from a planar embedding.
std::vector<std::vector<std::size_t>> rotation_system(const Graph& g) {
  BoostGraph bg(g.size());
  for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, bg);
  int idx = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(boost::edge_index, bg, *it, idx++);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(g.size());
  if (!boost::boyer_myrvold_planarity_test(
          boost::boyer_myrvold_params::graph = bg,
          boost::boyer_myrvold_params::embedding =
              boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg))))
    throw InvalidArgument("graph is not planar");
  std::vector<std::vector<std::size_t>> rot(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    for (const auto& e : emb[v]) {
      const auto s = boost::source(e, bg), t = boost::target(e, bg);
      rot[v].push_back(s == v ? t : s);
    }
  return rot;
}

std::size_t successor(const std::vector<std::size_t>& rot, std::size_t u) {
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == u) return rot[(i + 1) % rot.size()];
  throw Error("rotation system is inconsistent");
}

// Angle at a circle of radius r between tangent neighbors x and y.
double corner(double r, double x, double y) { return 2 * std::asin(std::sqrt(x * y / ((r + x) * (r + y)))); }

}  // namespace

double angle_sum(double r, const std::vector<double>& nr) {
  double s = 0;
  for (std::size_t i = 0; i < nr.size(); ++i) s += corner(r, nr[i], nr[(i + 1) % nr.size()]);
  return s;
}

PackingCheck check_packing(const Packing& p) {
  PackingCheck c;
  const auto& cs = p.circles;
  // In concentric normal form one circle encloses all the others.
  std::optional<std::size_t> container;
  for (std::size_t i = 0; i < cs.size() && !container; ++i) {
    bool all = true;
    for (std::size_t j = 0; j < cs.size() && all; ++j)
      if (j != i && std::abs(cs[i].center - cs[j].center) + cs[j].radius > cs[i].radius * (1 + 1e-9)) all = false;
    if (all && cs.size() > 1) container = i;
  }
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const double d = std::abs(cs[i].center - cs[j].center);
      double gap = d - (cs[i].radius + cs[j].radius);
      if (container == i || container == j) gap = std::abs(cs[i].radius - cs[j].radius) - d;
      if (p.graph.has_edge(i, j)) {
        c.tangency = std::max(c.tangency, std::abs(gap));
      } else {
        c.overlap = std::max(c.overlap, -gap);
      }
    }
  return c;
}

std::array<std::size_t, 3> default_outer_face(const Graph& g) {
  if (g.size() < 3) throw InvalidArgument("graph has no triangular face");
  std::size_t v = 0;
  for (std::size_t i = 1; i < g.size(); ++i)
    if (g.degree(i) > g.degree(v)) v = i;
  const auto rot = rotation_system(g);
  if (rot[v].empty()) throw InvalidArgument("graph has no triangular face");
  const std::size_t u = rot[v].front();
  const std::size_t w = successor(rot[u], v);
  if (!g.has_edge(v, w)) throw InvalidArgument("graph is not maximal planar");
  return {v, u, w};
}

PackerResult pack_graph_numeric(const Graph& g, const std::array<std::size_t, 3>& outer, double tol,
                                const PackerOptions& opts) {
  const std::size_t n = g.size();
  if (n < 4) throw InvalidArgument("packer needs at least 4 vertices");
  if (g.edges().size() != 3 * n - 6) throw InvalidArgument("graph is not maximal planar (needs 3n-6 edges)");
  for (auto v : outer)
    if (v >= n) throw InvalidArgument("outer face vertex out of range");
  const auto rot = rotation_system(g);

  // Orient the outer face along the embedding's face traversal.
  std::array<std::size_t, 3> face{};
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i)
    for (int j = 0; j < 3 && !found; ++j) {
      if (i == j || !g.has_edge(outer[i], outer[j])) continue;
      const std::size_t w = successor(rot[outer[j]], outer[i]);
      if (w == outer[3 - i - j]) {
        face = {outer[i], outer[j], w};
        found = true;
      }
    }
  if (!found) throw InvalidArgument("outer vertices do not bound a face");

  std::vector<bool> boundary(n, false);
  for (auto v : face) boundary[v] = true;
  std::vector<double> r(n, 1.0);
  PackerResult out;
  std::vector<double> nr;
  for (out.sweeps = 0; out.sweeps < opts.max_sweeps; ++out.sweeps) {
    double err = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (boundary[v]) continue;
      nr.clear();
      for (auto w : rot[v]) nr.push_back(r[w]);
      const double theta = angle_sum(r[v], nr);
      err = std::max(err, std::abs(theta - 2 * std::numbers::pi));
      // Radius giving angle sum 2 pi if all neighbors had the equivalent
      // uniform radius.
      const double k = static_cast<double>(nr.size());
      const double beta = std::sin(theta / (2 * k)), delta = std::sin(std::numbers::pi / k);
      const double uniform = r[v] * beta / (1 - beta);
      const double target = uniform * (1 - delta) / delta;
      r[v] += opts.relaxation * (target - r[v]);
    }
    out.angle_error = err;
    if (err < opts.angle_tol) break;
  }
  if (out.sweeps == opts.max_sweeps)
    throw NotConverged("radii did not converge (angle error " + std::to_string(out.angle_error) + ")");

  // Outer face clockwise, so every inner face traversal is counterclockwise.
  std::vector<std::optional<Complex>> c(n);
  c[face[0]] = Complex(-1, 0);
  c[face[1]] = Complex(1, 0);
  c[face[2]] = Complex(0, -std::sqrt(3.0));
  bool progress = true;
  std::size_t placed = 3;
  while (placed < n && progress) {
    progress = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (!c[u]) continue;
      for (auto v : rot[u]) {
        if (!c[v]) continue;
        const std::size_t w = successor(rot[v], u);
        if (c[w]) continue;
        const double ru = r[u], rv = r[v], rw = r[w];
        const double alpha = corner(ru, rv, rw);
        const Complex dir = (*c[v] - *c[u]) / std::abs(*c[v] - *c[u]);
        c[w] = *c[u] + (ru + rw) * dir * std::polar(1.0, alpha);
        ++placed;
        progress = true;
      }
    }
  }
  if (placed < n) throw Error("could not lay out every circle");

  out.packing.graph = g;
  for (std::size_t v = 0; v < n; ++v) out.packing.circles.push_back({*c[v], r[v]});
  const PackingCheck chk = check_packing(out.packing);
  if (!chk.ok(tol))
    throw Error("packing misses tolerance: tangency " + std::to_string(chk.tangency) + ", overlap " +
                std::to_string(chk.overlap));
  return out;
}

}  // namespace galoisdraw
