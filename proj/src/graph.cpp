// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace subsum {

std::uint32_t AdjacencyGraph::degree(std::uint32_t i) const noexcept {
  std::uint32_t d = 0;
  const std::uint64_t* r = row(i);
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::uint32_t>(std::popcount(r[w]));
  return d;
}

std::uint64_t AdjacencyGraph::edge_count() const noexcept {
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i < order_; ++i) total += degree(i);
  return total / 2;
}

std::vector<std::uint32_t> AdjacencyGraph::degree_sequence() const {
  std::vector<std::uint32_t> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out[i] = degree(i);
  return out;
}

std::vector<std::uint32_t> AdjacencyGraph::neighbors(std::uint32_t i) const {
  std::vector<std::uint32_t> out;
  const std::uint64_t* r = row(i);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

AdjacencyGraph AdjacencyGraph::complement() const {
  AdjacencyGraph out(order_);
  for (std::uint32_t i = 0; i < order_; ++i)
    for (std::uint32_t j = i + 1; j < order_; ++j)
      if (!adjacent(i, j)) out.add_edge(i, j);
  return out;
}

AdjacencyGraph AdjacencyGraph::from_edges(
    std::uint32_t order, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  AdjacencyGraph g(order);
  for (auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

std::vector<std::int32_t> bfs_distances(const AdjacencyGraph& g, std::uint32_t src) {
  std::vector<std::int32_t> dist(g.order(), -1);
  std::queue<std::uint32_t> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    std::uint32_t u = q.front();
    q.pop();
    for (std::uint32_t v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

bool is_connected(const AdjacencyGraph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::all_of(d.begin(), d.end(), [](std::int32_t x) { return x >= 0; });
}

std::optional<std::uint32_t> distance(const AdjacencyGraph& g, std::uint32_t u, std::uint32_t v) {
  auto d = bfs_distances(g, u);
  if (d[v] < 0) return std::nullopt;
  return static_cast<std::uint32_t>(d[v]);
}

std::optional<std::uint32_t> diameter(const AdjacencyGraph& g) {
  std::uint32_t best = 0;
  for (std::uint32_t s = 0; s < g.order(); ++s) {
    auto d = bfs_distances(g, s);
    for (std::int32_t x : d) {
      if (x < 0) return std::nullopt;
      best = std::max(best, static_cast<std::uint32_t>(x));
    }
  }
  return best;
}

std::optional<std::uint32_t> girth(const AdjacencyGraph& g) {
  // BFS from every root; a non-tree edge seen at depths (du, dv) closes a
  // cycle of length du + dv + 1 through the root, exact over all roots.
  std::optional<std::uint32_t> best;
  for (std::uint32_t s = 0; s < g.order(); ++s) {
    std::vector<std::int32_t> dist(g.order(), -1);
    std::vector<std::int32_t> parent(g.order(), -1);
    std::queue<std::uint32_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = static_cast<std::int32_t>(u);
          q.push(v);
        } else if (static_cast<std::int32_t>(v) != parent[u]) {
          std::uint32_t len = static_cast<std::uint32_t>(dist[u] + dist[v] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_eulerian(const AdjacencyGraph& g) {
  if (!is_connected(g)) return false;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    if (g.degree(i) % 2 != 0) return false;
  return true;
}

namespace {

// Unit-capacity max-flow (BFS augmentation) between s and t on the directed
// doubling of the graph.
std::uint32_t max_flow(const AdjacencyGraph& g, std::uint32_t s, std::uint32_t t) {
  const std::uint32_t n = g.order();
  // cap[u][v] in {0,1,2}: residual capacities; start 1 each direction.
  std::vector<std::vector<std::uint8_t>> cap(n, std::vector<std::uint8_t>(n, 0));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v : g.neighbors(u)) cap[u][v] = 1;

  std::uint32_t flow = 0;
  while (true) {
    std::vector<std::int32_t> prev(n, -1);
    std::queue<std::uint32_t> q;
    prev[s] = static_cast<std::int32_t>(s);
    q.push(s);
    while (!q.empty() && prev[t] < 0) {
      std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t v = 0; v < n; ++v) {
        if (prev[v] < 0 && cap[u][v] > 0) {
          prev[v] = static_cast<std::int32_t>(u);
          q.push(v);
        }
      }
    }
    if (prev[t] < 0) break;
    for (std::uint32_t v = t; v != s;) {
      std::uint32_t u = static_cast<std::uint32_t>(prev[v]);
      --cap[u][v];
      ++cap[v][u];
      v = u;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

std::uint32_t edge_connectivity(const AdjacencyGraph& g) {
  if (g.order() < 2) throw Error(Errc::Disconnected, "edge connectivity needs at least two vertices");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is disconnected");
  // A global minimum cut separates vertex 0 from some other vertex.
  std::uint32_t best = UINT32_MAX;
  for (std::uint32_t t = 1; t < g.order(); ++t) best = std::min(best, max_flow(g, 0, t));
  return best;
}

}  // namespace subsum
