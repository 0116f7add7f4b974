// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SUBSUM_SOLVERS_HPP
#define SUBSUM_SOLVERS_HPP

#include <array>
#include <optional>

#include "subsum/graph.hpp"

namespace subsum {

/// Search budgets are deterministic node caps, never wall-clock, so results
/// (including UNKNOWN outcomes) reproduce exactly across runs and machines.
struct Budget {
  std::uint64_t node_cap = UINT64_MAX;
  static Budget unlimited() { return Budget{}; }
};

/// Fixed calibration for translating a millisecond budget from the CLI into
/// a node cap.
inline constexpr std::uint64_t kSearchNodesPerMs = 2000;

inline Budget budget_from_ms(std::uint64_t ms) {
  if (ms == 0) return Budget::unlimited();
  std::uint64_t cap = ms > UINT64_MAX / kSearchNodesPerMs ? UINT64_MAX : ms * kSearchNodesPerMs;
  return Budget{cap};
}

struct CliqueResult {
  std::vector<std::uint32_t> vertices;  ///< Best clique found (ascending).
  bool exact = true;                    ///< False when the budget ran out.
  std::uint64_t nodes = 0;
};

/// Exact maximum clique: branch and bound with a greedy-colouring upper
/// bound, candidates expanded in deterministic order (lowest index first).
CliqueResult max_clique(const AdjacencyGraph& g, Budget budget = {});

/// Maximum independent set = maximum clique of the complement.
CliqueResult max_independent_set(const AdjacencyGraph& g, Budget budget = {});

struct ColoringResult {
  std::uint32_t count = 0;              ///< Chromatic number when exact.
  std::vector<std::uint32_t> colors;    ///< Proper coloring with `count` colors.
  bool exact = true;
  bool certified_by_hint = false;       ///< True when hint + clique pinned it without search.
  std::uint32_t lower_bound = 0;
};

/// Exact chromatic number. When a proper hint coloring with as many colors
/// as the clique lower bound is supplied, equality is certified without
/// search; otherwise a DSATUR greedy bound plus backtracking k-colorability
/// search (maximum clique pre-colored) pins the exact value.
ColoringResult chromatic_number(const AdjacencyGraph& g,
                                const std::vector<std::uint32_t>* hint = nullptr,
                                Budget budget = {});

struct DominationVariant {
  std::optional<std::uint32_t> value;   ///< nullopt: no such set exists (or UNKNOWN).
  std::vector<std::uint32_t> witness;
  bool exact = true;
  std::uint32_t searched_below = 0;     ///< All sizes <= this were exhausted.
};

struct DominationResult {
  DominationVariant gamma, gamma_total, gamma_connected, gamma_clique;
  std::uint64_t nodes = 0;
};

/// Exact domination / total / connected / clique domination numbers by
/// increasing-size exhaustive subset search. `upper_witness`, when given,
/// must satisfy all four variants (e.g. the coordinate-hyperplane set) and
/// caps the search: only sizes below it are enumerated.
DominationResult domination_numbers(const AdjacencyGraph& g,
                                    const std::vector<std::uint32_t>* upper_witness = nullptr,
                                    Budget budget = {});

struct HoleSearchResult {
  std::optional<std::vector<std::uint32_t>> hole;  ///< Induced odd cycle, length >= min_len.
  bool complete = true;                            ///< Search ran to exhaustion.
  std::uint64_t nodes = 0;
};

/// First induced odd cycle of length >= min_len in deterministic DFS order
/// over vertex-ordered induced paths, or none.
HoleSearchResult find_induced_odd_hole(const AdjacencyGraph& g, std::uint32_t min_len = 5,
                                       Budget budget = {});

struct PerfectResult {
  std::optional<bool> perfect;  ///< nullopt when a search hit its budget.
  HoleSearchResult in_graph, in_complement;
};

/// Perfect iff neither the graph nor its complement contains an induced odd
/// hole of length >= 5 (strong perfect graph characterization).
PerfectResult is_perfect(const AdjacencyGraph& g, Budget budget = {});

struct HamiltonianResult {
  std::optional<bool> hamiltonian;     ///< nullopt: budget exhausted (UNKNOWN).
  std::vector<std::uint32_t> cycle;    ///< Witness cycle when hamiltonian.
  std::uint64_t nodes = 0;
};

/// Exact backtracking Hamiltonian-cycle search with degree and connectivity
/// pruning.
HamiltonianResult hamiltonian_cycle(const AdjacencyGraph& g, Budget budget = {});

}  // namespace subsum

#endif
