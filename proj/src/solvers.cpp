// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum/solvers.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace subsum {

namespace {

// Word-packed vertex set helpers shared by the searches.
struct BitSet {
  std::vector<std::uint64_t> w;
  explicit BitSet(std::size_t words = 0) : w(words, 0) {}
  void set(std::uint32_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::uint32_t i) { w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::uint32_t i) const { return (w[i / 64] >> (i % 64)) & 1u; }
  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto x : w) c += static_cast<std::uint32_t>(std::popcount(x));
    return c;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::uint64_t bits = w[k];
      while (bits) {
        f(static_cast<std::uint32_t>(k * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }
};

BitSet full_set(std::uint32_t order, std::size_t words) {
  BitSet s(words);
  for (std::uint32_t i = 0; i < order; ++i) s.set(i);
  return s;
}

BitSet intersect_row(const BitSet& s, const AdjacencyGraph& g, std::uint32_t v) {
  BitSet out(s.w.size());
  const std::uint64_t* r = g.row(v);
  for (std::size_t k = 0; k < s.w.size(); ++k) out.w[k] = s.w[k] & r[k];
  return out;
}

// ---------------------------------------------------------------------------
// Maximum clique: Tomita-style branch and bound. Candidates are greedily
// colored in ascending index order; expansion follows descending color so the
// bound tightens fast. Deterministic throughout.

struct CliqueSearch {
  const AdjacencyGraph& g;
  std::uint64_t node_cap;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> current;

  explicit CliqueSearch(const AdjacencyGraph& graph, std::uint64_t cap) : g(graph), node_cap(cap) {}

  void expand(const BitSet& candidates) {
    if (exhausted) return;
    if (++nodes > node_cap) {
      exhausted = true;
      return;
    }
    std::vector<std::uint32_t> order;
    candidates.for_each([&](std::uint32_t v) { order.push_back(v); });
    if (order.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // Greedy coloring for the pruning bound.
    std::vector<std::uint32_t> color(order.size(), 0);
    std::vector<bool> used(order.size() + 2, false);
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::fill(used.begin(), used.end(), false);
      for (std::size_t j = 0; j < i; ++j)
        if (g.adjacent(order[i], order[j])) used[color[j]] = true;
      std::uint32_t c = 1;
      while (used[c]) ++c;
      color[i] = c;
    }
    // Expand in descending color, then descending index.
    std::vector<std::size_t> idx(order.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    BitSet remaining = candidates;
    for (std::size_t pos = idx.size(); pos-- > 0;) {
      std::uint32_t v = order[idx[pos]];
      if (current.size() + color[idx[pos]] <= best.size()) return;  // bound
      current.push_back(v);
      BitSet next = intersect_row(remaining, g, v);
      expand(next);
      current.pop_back();
      remaining.reset(v);
      if (exhausted) return;
    }
  }
};

}  // namespace

CliqueResult max_clique(const AdjacencyGraph& g, Budget budget) {
  CliqueSearch search(g, budget.node_cap);
  BitSet all = full_set(g.order(), g.words());
  search.expand(all);
  std::sort(search.best.begin(), search.best.end());
  return CliqueResult{std::move(search.best), !search.exhausted, search.nodes};
}

CliqueResult max_independent_set(const AdjacencyGraph& g, Budget budget) {
  return max_clique(g.complement(), budget);
}

// ---------------------------------------------------------------------------
// Chromatic number.

namespace {

std::uint32_t color_count(const std::vector<std::uint32_t>& colors) {
  std::uint32_t mx = 0;
  for (auto c : colors) mx = std::max(mx, c + 1);
  return mx;
}

// Hints may use arbitrary labels (e.g. hyperplane vertex indices), so count
// distinct values rather than max + 1.
std::uint32_t distinct_color_count(const std::vector<std::uint32_t>& colors) {
  std::vector<std::uint32_t> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return static_cast<std::uint32_t>(sorted.size());
}

bool coloring_is_proper(const AdjacencyGraph& g, const std::vector<std::uint32_t>& colors) {
  if (colors.size() != g.order()) return false;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    for (std::uint32_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j) && colors[i] == colors[j]) return false;
  return true;
}

// DSATUR greedy: highest saturation, then highest degree, then lowest index.
std::vector<std::uint32_t> dsatur_greedy(const AdjacencyGraph& g) {
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> colors(n, UINT32_MAX);
  std::vector<std::uint32_t> degrees = g.degree_sequence();
  for (std::uint32_t step = 0; step < n; ++step) {
    std::uint32_t pick = UINT32_MAX, pick_sat = 0, pick_deg = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (colors[v] != UINT32_MAX) continue;
      std::vector<bool> seen(n + 1, false);
      std::uint32_t sat = 0;
      for (std::uint32_t u : g.neighbors(v))
        if (colors[u] != UINT32_MAX && !seen[colors[u]]) {
          seen[colors[u]] = true;
          ++sat;
        }
      if (pick == UINT32_MAX || sat > pick_sat || (sat == pick_sat && degrees[v] > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = degrees[v];
      }
    }
    std::vector<bool> used(n + 1, false);
    for (std::uint32_t u : g.neighbors(pick))
      if (colors[u] != UINT32_MAX) used[colors[u]] = true;
    std::uint32_t c = 0;
    while (used[c]) ++c;
    colors[pick] = c;
  }
  return colors;
}

// Backtracking k-colorability with the clique pre-colored and DSATUR vertex
// selection. Returns nullopt on budget exhaustion.
struct KColorSearch {
  const AdjacencyGraph& g;
  std::uint32_t k;
  std::uint64_t node_cap;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::uint32_t> colors;
  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<std::uint32_t> degrees;

  KColorSearch(const AdjacencyGraph& graph, std::uint32_t kk, std::uint64_t cap)
      : g(graph), k(kk), node_cap(cap), colors(graph.order(), UINT32_MAX),
        degrees(graph.degree_sequence()) {
    adj.reserve(g.order());
    for (std::uint32_t v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
  }

  bool feasible(std::uint32_t v, std::uint32_t c) const {
    for (std::uint32_t u : adj[v])
      if (colors[u] == c) return false;
    return true;
  }

  bool solve(std::uint32_t colored, std::uint32_t max_used) {
    if (exhausted) return false;
    if (++nodes > node_cap) {
      exhausted = true;
      return false;
    }
    if (colored == g.order()) return true;
    // DSATUR pick.
    std::uint32_t pick = UINT32_MAX, pick_sat = 0, pick_deg = 0;
    std::vector<bool> seen(k + 1, false);
    for (std::uint32_t v = 0; v < g.order(); ++v) {
      if (colors[v] != UINT32_MAX) continue;
      std::fill(seen.begin(), seen.end(), false);
      std::uint32_t sat = 0;
      for (std::uint32_t u : adj[v])
        if (colors[u] != UINT32_MAX && !seen[colors[u]]) {
          seen[colors[u]] = true;
          ++sat;
        }
      if (sat == k) return false;  // dead vertex
      if (pick == UINT32_MAX || sat > pick_sat || (sat == pick_sat && degrees[v] > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = degrees[v];
      }
    }
    // Symmetry break: at most one previously unused color.
    std::uint32_t limit = std::min(k, max_used + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (!feasible(pick, c)) continue;
      colors[pick] = c;
      if (solve(colored + 1, std::max(max_used, c + 1))) return true;
      colors[pick] = UINT32_MAX;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

ColoringResult chromatic_number(const AdjacencyGraph& g, const std::vector<std::uint32_t>* hint,
                                Budget budget) {
  ColoringResult out;
  if (g.order() == 0) return out;

  CliqueResult clique = max_clique(g, budget);
  std::uint32_t lb = static_cast<std::uint32_t>(clique.vertices.size());
  out.lower_bound = lb;

  if (hint && coloring_is_proper(g, *hint)) {
    std::uint32_t hint_count = distinct_color_count(*hint);
    if (clique.exact && hint_count == lb) {
      out.count = hint_count;
      out.colors = *hint;
      out.certified_by_hint = true;
      return out;
    }
  }

  std::vector<std::uint32_t> greedy = dsatur_greedy(g);
  std::uint32_t ub = color_count(greedy);
  if (hint && coloring_is_proper(g, *hint) && distinct_color_count(*hint) < ub) {
    greedy = *hint;
    ub = distinct_color_count(*hint);
  }
  if (!clique.exact) {
    out.exact = false;
    out.count = ub;
    out.colors = greedy;
    return out;
  }
  if (ub == lb) {
    out.count = ub;
    out.colors = greedy;
    return out;
  }
  for (std::uint32_t k = lb; k < ub; ++k) {
    KColorSearch search(g, k, budget.node_cap);
    for (std::size_t i = 0; i < clique.vertices.size(); ++i)
      search.colors[clique.vertices[i]] = static_cast<std::uint32_t>(i);
    bool ok = search.solve(static_cast<std::uint32_t>(clique.vertices.size()),
                           static_cast<std::uint32_t>(clique.vertices.size()));
    if (search.exhausted) {
      out.exact = false;
      out.count = ub;
      out.colors = greedy;
      return out;
    }
    if (ok) {
      out.count = k;
      out.colors = search.colors;
      return out;
    }
  }
  out.count = ub;
  out.colors = greedy;
  return out;
}

// ---------------------------------------------------------------------------
// Domination variants.

namespace {

bool dominates(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  BitSet covered(g.words());
  for (auto v : set) {
    covered.set(v);
    const std::uint64_t* r = g.row(v);
    for (std::size_t k = 0; k < g.words(); ++k) covered.w[k] |= r[k];
  }
  return covered.count() == g.order();
}

bool totally_dominates(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  BitSet covered(g.words());
  for (auto v : set) {
    const std::uint64_t* r = g.row(v);
    for (std::size_t k = 0; k < g.words(); ++k) covered.w[k] |= r[k];
  }
  return covered.count() == g.order();
}

bool induces_connected(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  if (set.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (auto v : set) in[v] = true;
  std::vector<bool> seen(g.order(), false);
  std::queue<std::uint32_t> q;
  q.push(set[0]);
  seen[set[0]] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto v : g.neighbors(u))
      if (in[v] && !seen[v]) {
        seen[v] = true;
        ++reached;
        q.push(v);
      }
  }
  return reached == set.size();
}

bool induces_clique(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.adjacent(set[i], set[j])) return false;
  return true;
}

enum class Variant { Plain, Total, Connected, Clique };

bool satisfies(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set, Variant v) {
  switch (v) {
    case Variant::Plain: return dominates(g, set);
    case Variant::Total: return totally_dominates(g, set);
    case Variant::Connected: return dominates(g, set) && induces_connected(g, set);
    case Variant::Clique: return dominates(g, set) && induces_clique(g, set);
  }
  return false;
}

// Smallest set of exactly the given size satisfying the variant, in
// lexicographic subset order; nullopt if none (or budget ran out, flagged).
std::optional<std::vector<std::uint32_t>> search_size(const AdjacencyGraph& g, std::uint32_t size,
                                                      Variant variant, std::uint64_t& nodes,
                                                      std::uint64_t node_cap, bool& exhausted) {
  const std::uint32_t n = g.order();
  if (size > n) return std::nullopt;
  std::vector<std::uint32_t> comb(size);
  for (std::uint32_t i = 0; i < size; ++i) comb[i] = i;
  while (true) {
    if (++nodes > node_cap) {
      exhausted = true;
      return std::nullopt;
    }
    if (satisfies(g, comb, variant)) return comb;
    std::int64_t i = static_cast<std::int64_t>(size) - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + static_cast<std::uint32_t>(i))
      --i;
    if (i < 0) return std::nullopt;
    ++comb[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j)
      comb[j] = comb[j - 1] + 1;
  }
}

DominationVariant solve_variant(const AdjacencyGraph& g, Variant variant,
                                const std::vector<std::uint32_t>* upper_witness,
                                std::uint64_t& nodes, std::uint64_t node_cap) {
  DominationVariant out;
  std::uint32_t cap = g.order();
  if (upper_witness) cap = static_cast<std::uint32_t>(upper_witness->size());
  bool exhausted = false;
  for (std::uint32_t size = 1; size < cap || (!upper_witness && size == cap); ++size) {
    auto found = search_size(g, size, variant, nodes, node_cap, exhausted);
    if (exhausted) {
      out.exact = false;
      out.searched_below = size > 0 ? size - 1 : 0;
      return out;
    }
    if (found) {
      out.value = size;
      out.witness = *found;
      out.searched_below = size;
      return out;
    }
    out.searched_below = size;
  }
  if (upper_witness) {
    out.value = cap;
    out.witness = *upper_witness;
  }
  return out;
}

}  // namespace

DominationResult domination_numbers(const AdjacencyGraph& g,
                                    const std::vector<std::uint32_t>* upper_witness,
                                    Budget budget) {
  DominationResult out;
  std::uint64_t nodes = 0;
  out.gamma = solve_variant(g, Variant::Plain, upper_witness, nodes, budget.node_cap);
  out.gamma_total = solve_variant(g, Variant::Total, upper_witness, nodes, budget.node_cap);
  out.gamma_connected = solve_variant(g, Variant::Connected, upper_witness, nodes, budget.node_cap);
  out.gamma_clique = solve_variant(g, Variant::Clique, upper_witness, nodes, budget.node_cap);
  out.nodes = nodes;
  return out;
}

// ---------------------------------------------------------------------------
// Induced odd holes.

namespace {

struct HoleSearch {
  const AdjacencyGraph& g;
  std::uint32_t min_len;
  std::uint64_t node_cap;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::optional<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> path;

  HoleSearch(const AdjacencyGraph& graph, std::uint32_t ml, std::uint64_t cap)
      : g(graph), min_len(ml), node_cap(cap) {}

  // Extends an induced path whose minimum vertex is path[0]. `allowed` holds
  // vertices > path[0], not on the path, and non-adjacent to every interior
  // path vertex (path[1..m-1]).
  void dfs(const BitSet& allowed) {
    if (found || exhausted) return;
    if (++nodes > node_cap) {
      exhausted = true;
      return;
    }
    const std::uint32_t tail = path.back();
    const std::uint32_t head = path.front();
    BitSet candidates = intersect_row(allowed, g, tail);
    candidates.for_each([&](std::uint32_t w) {
      if (found || exhausted) return;
      const std::uint32_t cycle_len = static_cast<std::uint32_t>(path.size()) + 1;
      if (g.adjacent(w, head)) {
        // Closing edge: the only chord-free completion. Reflection is broken
        // by requiring the second vertex below the closing one.
        if (cycle_len >= min_len && cycle_len % 2 == 1 && path[1] < w) {
          auto cycle = path;
          cycle.push_back(w);
          found = std::move(cycle);
        }
        return;  // cannot extend past w: edge to head would be a chord
      }
      BitSet next(allowed.w.size());
      // New interior vertex: future candidates must avoid N(tail)
      // (tail becomes interior) minus... candidates already avoid interior;
      // remove neighbors of w later; here just drop w and neighbors of tail
      // from allowed for the recursive step.
      for (std::size_t k = 0; k < allowed.w.size(); ++k)
        next.w[k] = allowed.w[k] & ~g.row(tail)[k];
      next.reset(w);
      path.push_back(w);
      dfs(next);
      path.pop_back();
    });
  }

  void run() {
    const std::uint32_t n = g.order();
    for (std::uint32_t s = 0; s < n && !found && !exhausted; ++s) {
      for (std::uint32_t v1 : g.neighbors(s)) {
        if (v1 <= s) continue;
        if (found || exhausted) break;
        path.assign({s, v1});
        BitSet allowed(g.words());
        for (std::uint32_t u = s + 1; u < n; ++u)
          if (u != v1) allowed.set(u);
        // Interior so far is just v1 once we extend; candidates for the next
        // step must be non-adjacent to nothing yet (v1 is the tail). dfs()
        // removes the tail's neighborhood as the path grows.
        dfs(allowed);
      }
    }
  }
};

}  // namespace

HoleSearchResult find_induced_odd_hole(const AdjacencyGraph& g, std::uint32_t min_len,
                                       Budget budget) {
  HoleSearch search(g, min_len, budget.node_cap);
  search.run();
  return HoleSearchResult{std::move(search.found), !search.exhausted, search.nodes};
}

PerfectResult is_perfect(const AdjacencyGraph& g, Budget budget) {
  PerfectResult out;
  out.in_graph = find_induced_odd_hole(g, 5, budget);
  if (out.in_graph.hole) {
    out.perfect = false;
    return out;
  }
  if (!out.in_graph.complete) return out;  // UNKNOWN
  out.in_complement = find_induced_odd_hole(g.complement(), 5, budget);
  if (out.in_complement.hole)
    out.perfect = false;
  else if (out.in_complement.complete)
    out.perfect = true;
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonian cycle.

namespace {

struct HamSearch {
  const AdjacencyGraph& g;
  std::uint64_t node_cap;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::uint32_t> path;
  BitSet visited;
  std::optional<std::vector<std::uint32_t>> cycle;
  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<std::uint64_t> scratch_un, scratch_seen, scratch_frontier, scratch_next;

  HamSearch(const AdjacencyGraph& graph, std::uint64_t cap)
      : g(graph), node_cap(cap), visited(graph.words()),
        scratch_un(graph.words()), scratch_seen(graph.words()),
        scratch_frontier(graph.words()), scratch_next(graph.words()) {
    adj.reserve(g.order());
    for (std::uint32_t v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
  }

  // Every unvisited vertex still needs two usable cycle slots (an unvisited
  // neighbor, the endpoint or the start), the start needs a slot for the
  // closing edge, and the unvisited region must stay reachable from the
  // endpoint.
  bool prune(std::uint32_t endpoint) {
    const std::size_t W = g.words();
    const std::uint32_t n = g.order();
    std::uint32_t unvisited = n - static_cast<std::uint32_t>(path.size());
    if (unvisited == 0) return false;

    std::uint64_t* un = scratch_un.data();
    for (std::size_t k = 0; k < W; ++k) un[k] = ~visited.w[k];
    if (n % 64) un[W - 1] &= (std::uint64_t{1} << (n % 64)) - 1;

    const std::uint32_t front = path.front();
    std::uint32_t start_links = 0;
    for (std::size_t k = 0; k < W; ++k)
      start_links += static_cast<std::uint32_t>(std::popcount(g.row(front)[k] & un[k]));
    if (start_links == 0) return true;

    for (std::size_t k = 0; k < W; ++k) {
      std::uint64_t bits = un[k];
      while (bits) {
        std::uint32_t v = static_cast<std::uint32_t>(k * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        std::uint32_t avail = 0;
        const std::uint64_t* r = g.row(v);
        for (std::size_t m = 0; m < W; ++m)
          avail += static_cast<std::uint32_t>(std::popcount(r[m] & un[m]));
        if (g.adjacent(v, endpoint)) ++avail;
        if (front != endpoint && g.adjacent(v, front)) ++avail;
        if (avail < 2) return true;
      }
    }

    // Connectivity: frontier expansion from the endpoint over unvisited.
    std::uint64_t* seen = scratch_seen.data();
    std::uint64_t* frontier = scratch_frontier.data();
    std::uint64_t* next = scratch_next.data();
    std::fill(seen, seen + W, 0);
    std::fill(frontier, frontier + W, 0);
    frontier[endpoint / 64] |= std::uint64_t{1} << (endpoint % 64);
    seen[endpoint / 64] |= std::uint64_t{1} << (endpoint % 64);
    while (true) {
      std::fill(next, next + W, 0);
      bool any = false;
      for (std::size_t k = 0; k < W; ++k) {
        std::uint64_t bits = frontier[k];
        while (bits) {
          std::uint32_t u = static_cast<std::uint32_t>(k * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          const std::uint64_t* r = g.row(u);
          for (std::size_t m = 0; m < W; ++m) next[m] |= r[m];
        }
      }
      for (std::size_t k = 0; k < W; ++k) {
        next[k] &= un[k] & ~seen[k];
        if (next[k]) any = true;
        seen[k] |= next[k];
      }
      if (!any) break;
      std::swap(frontier, next);
    }
    std::uint32_t reached = 0;
    for (std::size_t k = 0; k < W; ++k)
      reached += static_cast<std::uint32_t>(std::popcount(seen[k] & un[k]));
    return reached < unvisited;
  }

  bool dfs(std::uint32_t endpoint) {
    if (exhausted) return false;
    if (++nodes > node_cap) {
      exhausted = true;
      return false;
    }
    if (path.size() == g.order()) {
      if (g.adjacent(endpoint, path.front()) && path[1] < path.back()) {
        cycle = path;
        return true;
      }
      return false;
    }
    if (prune(endpoint)) return false;
    for (std::uint32_t v : adj[endpoint]) {
      if (visited.test(v)) continue;
      visited.set(v);
      path.push_back(v);
      if (dfs(v)) return true;
      path.pop_back();
      visited.reset(v);
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

HamiltonianResult hamiltonian_cycle(const AdjacencyGraph& g, Budget budget) {
  HamiltonianResult out;
  if (g.order() < 3) {
    out.hamiltonian = false;
    return out;
  }
  if (!is_connected(g)) {
    out.hamiltonian = false;
    return out;
  }
  for (std::uint32_t v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) {
      out.hamiltonian = false;
      return out;
    }
  HamSearch search(g, budget.node_cap);
  search.path.push_back(0);
  search.visited.set(0);
  bool ok = search.dfs(0);
  out.nodes = search.nodes;
  if (search.exhausted) return out;  // UNKNOWN
  out.hamiltonian = ok;
  if (ok) out.cycle = *search.cycle;
  return out;
}

}  // namespace subsum
