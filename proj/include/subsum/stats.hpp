// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_STATS_HPP
#define SUBSUM_STATS_HPP

#include <map>

#include "subsum/subspace_graph.hpp"

namespace subsum {

/// Every invariant the library computes for one graph, with UNKNOWN values
/// (budget exhausted) left disengaged.
struct GraphStats {
  std::uint32_t n = 0, p = 0, r = 0, q = 0;
  std::vector<std::uint32_t> modulus;
  std::uint64_t order = 0;
  std::uint64_t edges = 0;
  std::uint32_t min_degree = 0, max_degree = 0;
  std::map<std::uint32_t, std::uint32_t> degree_by_dim;  ///< dim -> common degree
  bool connected = false;
  std::optional<std::uint32_t> diameter;  ///< nullopt = infinite
  std::optional<std::uint32_t> girth;     ///< nullopt = acyclic
  bool eulerian = false;
  std::optional<std::uint32_t> edge_connectivity;
  std::optional<std::uint32_t> clique_number;
  std::optional<std::uint32_t> chromatic_number;
  std::optional<std::uint32_t> independence_number;
  std::optional<std::uint32_t> gamma, gamma_total, gamma_connected, gamma_clique;
  std::optional<bool> perfect;
  std::optional<bool> hamiltonian;
};

GraphStats compute_stats(const SubspaceGraph& g, Budget budget = {});

std::string stats_to_json(const GraphStats& s);
std::string stats_to_text(const GraphStats& s);

/// All closed-form predictions for (n, q) as a table / versioned JSON;
/// purely formula-driven, no graph is built.
std::string predictions_to_json(std::uint32_t n, std::uint32_t q);
std::string predictions_to_text(std::uint32_t n, std::uint32_t q);

}  // namespace subsum

#endif
