#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "galoisdraw/graphlab.hpp"

namespace galoisdraw {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)), adj_(n) {
  if (!labels_.empty() && labels_.size() != n) throw InvalidArgument("label count does not match vertex count");
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidArgument("edge " + std::to_string(u) + "-" + std::to_string(v) + " leaves the vertex range");
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InvalidArgument("repeated edge");
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (auto w : adj_[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == n_;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete graph needs at least 1 vertex");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph bipyramid(std::size_t k) {
  if (k < 3) throw InvalidArgument("bipyramid needs k >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(i, k);
    e.emplace_back(i, k + 1);
  }
  return Graph(k + 2, std::move(e));
}

Graph pack_graph(std::size_t k, std::size_t n) {
  if (k < 1 || n < 1) throw InvalidArgument("pack parameters must be positive");
  const std::size_t slots = k * (n + 1);
  const std::size_t inner = k * n + 2 * k;
  const std::size_t outer = inner + 1;
  // Vertices in each slot; a pair slot lists (inner side, outer side).
  std::vector<std::vector<std::size_t>> slot(slots);
  std::size_t next = 0;
  for (std::size_t s = 0; s < slots; ++s) {
    if (s % (n + 1) == 0) {
      slot[s] = {next, next + 1};
      next += 2;
    } else {
      slot[s] = {next++};
    }
  }
  std::vector<Edge> e;
  for (std::size_t s = 0; s < slots; ++s) {
    const auto& cur = slot[s];
    const auto& nxt = slot[(s + 1) % slots];
    for (auto u : cur)
      for (auto v : nxt) e.emplace_back(u, v);
    if (cur.size() == 2) {
      e.emplace_back(cur[0], cur[1]);
      e.emplace_back(cur[0], inner);
      e.emplace_back(cur[1], outer);
    } else {
      e.emplace_back(cur[0], inner);
      e.emplace_back(cur[0], outer);
    }
  }
  return Graph(outer + 1, std::move(e));
}

Graph y9() {
  return Graph(9, {{0, 1}, {1, 2}, {2, 3}, {2, 8}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
}

Graph h12() {
  return Graph(12, {{0, 1}, {1, 2}, {2, 3}, {2, 10}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {7, 11}, {8, 9}});
}

// Pendant edge u0-u1 on the triangle u1 u2 u3.
Graph kk4() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }

Graph grid2x3() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 5}, {4, 5}}); }

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> e;
  std::size_t n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    long u = 0, v = 0;
    if (!(ss >> u)) continue;
    std::string extra;
    if (!(ss >> v) || (ss >> extra) || u < 0 || v < 0)
      throw InvalidArgument("edge list line " + std::to_string(lineno) + ": expected two vertex indices");
    e.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    n = std::max({n, static_cast<std::size_t>(u) + 1, static_cast<std::size_t>(v) + 1});
  }
  return Graph(n, std::move(e));
}

Graph build_graph(const GraphSpec& spec) {
  auto arity = [&](std::size_t want) {
    if (spec.args.size() != want)
      throw InvalidArgument("graph '" + spec.name + "' takes " + std::to_string(want) + " parameter(s), got " +
                            std::to_string(spec.args.size()));
    for (long a : spec.args)
      if (a < 0) throw InvalidArgument("graph parameters must be nonnegative");
  };
  const std::string& s = spec.name;
  if (s == "file") {
    std::ifstream in(spec.path);
    if (!in) throw InvalidArgument("cannot read edge list '" + spec.path + "'");
    return read_edge_list(in);
  }
  if (s == "cycle") return arity(1), cycle_graph(static_cast<std::size_t>(spec.args[0]));
  if (s == "path") return arity(1), path_graph(static_cast<std::size_t>(spec.args[0]));
  if (s == "complete") return arity(1), complete_graph(static_cast<std::size_t>(spec.args[0]));
  if (s == "bipyr") return arity(1), bipyramid(static_cast<std::size_t>(spec.args[0]));
  if (s == "pack") {
    arity(2);
    return pack_graph(static_cast<std::size_t>(spec.args[0]), static_cast<std::size_t>(spec.args[1]));
  }
  if (s == "y9") return arity(0), y9();
  if (s == "h12") return arity(0), h12();
  if (s == "kk4") return arity(0), kk4();
  if (s == "grid2x3") return arity(0), grid2x3();
  throw InvalidArgument("unknown graph name '" + s + "'");
}

}  // namespace galoisdraw
