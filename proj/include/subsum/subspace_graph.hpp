// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_SUBSPACE_GRAPH_HPP
#define SUBSUM_SUBSPACE_GRAPH_HPP

#include <map>
#include <optional>
#include <string>

#include "subsum/graph.hpp"
#include "subsum/solvers.hpp"
#include "subsum/subspace_enum.hpp"

namespace subsum {

struct BuildOptions {
  std::uint64_t max_order = kDefaultMaxVertices;
  std::uint32_t threads = 0;  ///< 0 = available parallelism.
};

/// The subspace sum graph of F_q^n: vertices are the nontrivial proper
/// subspaces in enumeration order, edges join pairs whose sum is the whole
/// space. Immutable after build; safe to share across solver threads.
class SubspaceGraph {
 public:
  static SubspaceGraph build(const Field& f, std::uint32_t n, const BuildOptions& opts = {});

  const Field& field() const noexcept { return field_; }
  std::uint32_t n() const noexcept { return n_; }
  const std::vector<Subspace>& vertices() const noexcept { return vertices_; }
  const Subspace& vertex(std::uint32_t i) const { return vertices_.at(i); }
  std::uint32_t dim_of(std::uint32_t i) const { return static_cast<std::uint32_t>(vertices_.at(i).dim()); }
  const AdjacencyGraph& adjacency() const noexcept { return adj_; }
  std::uint32_t order() const noexcept { return adj_.order(); }

  /// Index of a canonical subspace among the vertices; throws
  /// InvalidArgument for the zero/full space or anything non-vertex.
  std::uint32_t index_of(const Subspace& s) const;

  /// Vertices of a given dimension, ascending index.
  std::vector<std::uint32_t> vertices_of_dim(std::uint32_t k) const;

 private:
  SubspaceGraph(Field f, std::uint32_t n, std::vector<Subspace> verts, AdjacencyGraph adj);
  Field field_;
  std::uint32_t n_;
  std::vector<Subspace> vertices_;
  AdjacencyGraph adj_;
  std::map<Subspace, std::uint32_t> index_;
};

/// Adjacency by the canonical-sum route: dim(v_i + v_j) == n. The build uses
/// the rank-of-stack route; the two must agree everywhere (tested).
bool adjacent_via_sum(const SubspaceGraph& g, std::uint32_t i, std::uint32_t j);

/// Graphviz DOT text: one node per vertex named by its canonical basis
/// string, grouped into same-rank clusters by dimension. Deterministic.
std::string to_dot(const SubspaceGraph& g);

/// Versioned JSON adjacency dump.
std::string to_adjacency_json(const SubspaceGraph& g);

/// Degree table: index,dim,basis,degree.
std::string to_degree_csv(const SubspaceGraph& g);

/// Cheap isomorphism-invariant tuple. Over a fixed field, the domination
/// number alone already separates ambient dimensions.
struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> degree_multiset;  ///< (degree, count)
  std::optional<std::uint32_t> diameter;
  std::optional<std::uint32_t> girth;
  std::optional<std::uint32_t> clique_number;   ///< nullopt if the budget ran out
  std::optional<std::uint32_t> domination_number;

  bool operator==(const Fingerprint& other) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const SubspaceGraph& g, Budget budget = {});

}  // namespace subsum

#endif
