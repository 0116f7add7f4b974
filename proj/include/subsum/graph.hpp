// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_GRAPH_HPP
#define SUBSUM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "subsum/error.hpp"

namespace subsum {

/// Simple undirected graph with packed bitset adjacency rows. Immutable in
/// practice once populated; all queries are const and thread-safe.
class AdjacencyGraph {
 public:
  explicit AdjacencyGraph(std::uint32_t order)
      : order_(order), words_((order + 63) / 64), bits_(std::size_t{order} * words_, 0) {}

  std::uint32_t order() const noexcept { return order_; }

  void add_edge(std::uint32_t i, std::uint32_t j) {
    if (i == j || i >= order_ || j >= order_)
      throw Error(Errc::InvalidArgument, "bad edge endpoints");
    bits_[std::size_t{i} * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[std::size_t{j} * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  bool adjacent(std::uint32_t i, std::uint32_t j) const noexcept {
    return (bits_[std::size_t{i} * words_ + j / 64] >> (j % 64)) & 1u;
  }

  std::uint32_t degree(std::uint32_t i) const noexcept;
  std::uint64_t edge_count() const noexcept;
  std::vector<std::uint32_t> degree_sequence() const;
  std::vector<std::uint32_t> neighbors(std::uint32_t i) const;

  AdjacencyGraph complement() const;

  const std::uint64_t* row(std::uint32_t i) const noexcept { return &bits_[std::size_t{i} * words_]; }
  std::size_t words() const noexcept { return words_; }

  static AdjacencyGraph from_edges(std::uint32_t order,
                                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

 private:
  std::uint32_t order_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// BFS distances from src; -1 marks unreachable vertices.
std::vector<std::int32_t> bfs_distances(const AdjacencyGraph& g, std::uint32_t src);

bool is_connected(const AdjacencyGraph& g);

/// Exact distance between two vertices; nullopt if disconnected.
std::optional<std::uint32_t> distance(const AdjacencyGraph& g, std::uint32_t u, std::uint32_t v);

/// Exact diameter; nullopt for disconnected graphs (the infinite sentinel).
std::optional<std::uint32_t> diameter(const AdjacencyGraph& g);

/// Length of the shortest cycle; nullopt for forests.
std::optional<std::uint32_t> girth(const AdjacencyGraph& g);

/// Connected with every degree even.
bool is_eulerian(const AdjacencyGraph& g);

/// Exact global minimum edge cut via unit-capacity max-flow from a fixed
/// source to every other vertex. Throws Disconnected.
std::uint32_t edge_connectivity(const AdjacencyGraph& g);

}  // namespace subsum

#endif
