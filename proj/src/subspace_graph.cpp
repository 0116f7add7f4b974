// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum/subspace_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

namespace subsum {

SubspaceGraph::SubspaceGraph(Field f, std::uint32_t n, std::vector<Subspace> verts,
                             AdjacencyGraph adj)
    : field_(std::move(f)), n_(n), vertices_(std::move(verts)), adj_(std::move(adj)) {
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
}

SubspaceGraph SubspaceGraph::build(const Field& f, std::uint32_t n, const BuildOptions& opts) {
  std::vector<Subspace> verts = enumerate_proper_nontrivial(f, n, opts.max_order);
  const std::uint32_t order = static_cast<std::uint32_t>(verts.size());
  AdjacencyGraph adj(order);

  // Pairs (i, j) are independent, so rows are filled in parallel blocks and
  // the result does not depend on the schedule.
  std::uint32_t threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<std::uint32_t>(threads, std::max<std::uint32_t>(order, 1));

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> found(threads);
  auto work = [&](std::uint32_t t) {
    for (std::uint32_t i = t; i < order; i += threads) {
      for (std::uint32_t j = i + 1; j < order; ++j) {
        if (verts[i].dim() + verts[j].dim() < n) continue;  // sum can't reach n
        if (rank(stack(verts[i].basis(), verts[j].basis())) == n)
          found[t].emplace_back(i, j);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& chunk : found)
    for (auto& [i, j] : chunk) adj.add_edge(i, j);

  return SubspaceGraph(f, n, std::move(verts), std::move(adj));
}

std::uint32_t SubspaceGraph::index_of(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end())
    throw Error(Errc::InvalidArgument, "subspace is not a vertex: " + s.label());
  return it->second;
}

std::vector<std::uint32_t> SubspaceGraph::vertices_of_dim(std::uint32_t k) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].dim() == k) out.push_back(i);
  return out;
}

bool adjacent_via_sum(const SubspaceGraph& g, std::uint32_t i, std::uint32_t j) {
  if (i == j) return false;
  return subspace_sum(g.vertex(i), g.vertex(j)).dim() == g.n();
}

std::string to_dot(const SubspaceGraph& g) {
  std::ostringstream out;
  out << "graph subsum {\n";
  out << "  // subspace sum graph, n=" << g.n() << ", q=" << g.field().q() << "\n";
  out << "  node [shape=box];\n";
  for (std::uint32_t k = 1; k < g.n(); ++k) {
    out << "  subgraph cluster_dim" << k << " {\n";
    out << "    label=\"dim " << k << "\";\n";
    out << "    rank=same;\n";
    for (std::uint32_t i : g.vertices_of_dim(k))
      out << "    \"" << g.vertex(i).label() << "\";\n";
    out << "  }\n";
  }
  const auto& adj = g.adjacency();
  for (std::uint32_t i = 0; i < g.order(); ++i)
    for (std::uint32_t j = i + 1; j < g.order(); ++j)
      if (adj.adjacent(i, j))
        out << "  \"" << g.vertex(i).label() << "\" -- \"" << g.vertex(j).label() << "\";\n";
  out << "}\n";
  return out.str();
}

std::string to_adjacency_json(const SubspaceGraph& g) {
  std::ostringstream out;
  out << "{\"version\":\"1\",\"field\":{\"p\":" << g.field().p() << ",\"r\":" << g.field().r()
      << ",\"q\":" << g.field().q() << ",\"modulus\":[";
  const auto& mod = g.field().modulus();
  for (std::size_t i = 0; i < mod.size(); ++i) out << (i ? "," : "") << mod[i];
  out << "]},\"n\":" << g.n() << ",\"order\":" << g.order()
      << ",\"edge_count\":" << g.adjacency().edge_count() << ",\"vertices\":[";
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (i) out << ",";
    out << "{\"index\":" << i << ",\"dim\":" << g.dim_of(i) << ",\"basis\":\""
        << g.vertex(i).label() << "\"}";
  }
  out << "],\"edges\":[";
  bool first = true;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    for (std::uint32_t j = i + 1; j < g.order(); ++j)
      if (g.adjacency().adjacent(i, j)) {
        if (!first) out << ",";
        first = false;
        out << "[" << i << "," << j << "]";
      }
  out << "]}";
  return out.str();
}

std::string to_degree_csv(const SubspaceGraph& g) {
  std::ostringstream out;
  out << "index,dim,basis,degree\n";
  for (std::uint32_t i = 0; i < g.order(); ++i)
    out << i << "," << g.dim_of(i) << "," << g.vertex(i).label() << ","
        << g.adjacency().degree(i) << "\n";
  return out.str();
}

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "order=" << order << ";degrees=[";
  for (std::size_t i = 0; i < degree_multiset.size(); ++i) {
    if (i) out << ",";
    out << degree_multiset[i].first << "^" << degree_multiset[i].second;
  }
  out << "];diameter=" << (diameter ? std::to_string(*diameter) : "inf")
      << ";girth=" << (girth ? std::to_string(*girth) : "inf")
      << ";omega=" << (clique_number ? std::to_string(*clique_number) : "unknown")
      << ";gamma=" << (domination_number ? std::to_string(*domination_number) : "unknown");
  return out.str();
}

Fingerprint fingerprint(const SubspaceGraph& g, Budget budget) {
  Fingerprint fp;
  const AdjacencyGraph& adj = g.adjacency();
  fp.order = adj.order();
  std::map<std::uint32_t, std::uint32_t> counts;
  for (std::uint32_t d : adj.degree_sequence()) ++counts[d];
  fp.degree_multiset.assign(counts.begin(), counts.end());
  fp.diameter = diameter(adj);
  fp.girth = girth(adj);
  CliqueResult clique = max_clique(adj, budget);
  if (clique.exact) fp.clique_number = static_cast<std::uint32_t>(clique.vertices.size());
  DominationResult dom = domination_numbers(adj, nullptr, budget);
  if (dom.gamma.exact) fp.domination_number = dom.gamma.value;
  return fp;
}

}  // namespace subsum
