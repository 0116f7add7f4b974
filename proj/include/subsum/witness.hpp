// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_WITNESS_HPP
#define SUBSUM_WITNESS_HPP

#include <array>

#include "subsum/subspace_graph.hpp"

namespace subsum {

// Constructive witnesses: explicit cliques, colorings, dominating and
// independent sets built directly from the subspace structure, each checked
// against the graph definition before being returned. A failed check on a
// property the construction guarantees throws (Internal) rather than
// returning silently wrong certificates. Properties that are genuinely
// case-dependent (minimality at n = 2, the chord pattern of the printed
// five-cycle) come back as data for the harness to report.
namespace witness {

struct CliqueWitness {
  std::vector<std::uint32_t> vertices;
  bool pairwise_adjacent = false;
  bool maximal = false;
};

/// All hyperplane vertices: a maximal clique of size 1 + q + ... + q^{n-1}.
CliqueWitness hyperplane_clique(const SubspaceGraph& g);

struct ColoringWitness {
  std::vector<std::uint32_t> colors;  ///< Vertex -> hyperplane vertex index.
  std::uint32_t color_count = 0;
  bool proper = false;
};

/// Colors every vertex by the lowest-index hyperplane containing it; the
/// containment homomorphism makes this proper, with exactly one color per
/// hyperplane. Together with hyperplane_clique this pins omega = chi.
ColoringWitness hyperplane_coloring(const SubspaceGraph& g);

struct DominatingWitness {
  std::vector<std::uint32_t> vertices;
  bool dominating = false;
  bool total = false;
  bool connected = false;
  bool clique = false;
  /// No proper subset dominates. Guaranteed for n >= 3; false at n = 2
  /// where a single vertex of the complete graph dominates.
  bool minimal = false;
};

/// The n coordinate hyperplanes <e_1..e_{i-1}, e_{i+1}..e_n>.
DominatingWitness standard_dominating_set(const SubspaceGraph& g);

struct IndependentWitness {
  std::vector<std::uint32_t> vertices;
  bool independent = false;
  bool maximal = false;
};

/// For odd n = 2m + 1: every vertex of dimension <= m. Throws ParityError
/// for even n.
IndependentWitness independent_set_odd(const SubspaceGraph& g);

/// For even n = 2m: every vertex of dimension <= m - 1 plus the dimension-m
/// vertices containing the anchor vector. Throws ParityError for odd n and
/// ZeroAnchor for the zero vector.
IndependentWitness independent_set_even(const SubspaceGraph& g, const std::vector<Scalar>& anchor);

struct TriangleWitness {
  std::array<std::uint32_t, 3> vertices;  ///< First entry is the input vertex.
  bool verified = false;
};

/// A triangle through any vertex: complete w's basis, then cross the two
/// sides (alpha_i + beta_i with the longer side's tail).
TriangleWitness triangle_through(const SubspaceGraph& g, std::uint32_t v);

struct CommonNeighborWitness {
  std::uint32_t vertex = 0;
  /// 1: the subspaces meet nontrivially (complement of the intersection);
  /// 2: trivial intersection (the alpha_i + beta_i construction).
  std::uint32_t construction_case = 0;
  bool verified = false;
};

/// A vertex adjacent to both of two non-adjacent vertices, per the
/// diameter-2 argument. Throws AlreadyAdjacent when u ~ v.
CommonNeighborWitness common_neighbor(const SubspaceGraph& g, std::uint32_t u, std::uint32_t v);

struct FiveCycleWitness {
  std::array<std::uint32_t, 5> vertices;
  /// Adjacency of every unordered pair (i, j), i < j, in index order
  /// (0,1),(0,2),(0,3),(0,4),(1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
  std::array<bool, 10> pair_adjacent{};
  bool cycle_edges_present = false;  ///< The five consecutive pairs.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chords;  ///< Non-consecutive adjacent pairs.
};

/// The published five-subspace construction for n >= 4. Reports the full
/// adjacency pattern among the five vertices; it does NOT assert the cycle
/// is induced (the pattern in fact contains a chord; the hole search
/// establishes imperfection independently). Throws DimensionTooSmall.
FiveCycleWitness five_cycle_construction(const SubspaceGraph& g);

}  // namespace witness
}  // namespace subsum

#endif
