// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum/witness.hpp"

#include <algorithm>

namespace subsum {
namespace witness {

namespace {

bool set_is_clique(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.adjacent(set[i], set[j])) return false;
  return true;
}

bool clique_is_maximal(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  std::vector<bool> in(g.order(), false);
  for (auto v : set) in[v] = true;
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    bool all = true;
    for (auto u : set)
      if (!g.adjacent(v, u)) {
        all = false;
        break;
      }
    if (all) return false;
  }
  return true;
}

bool set_is_independent(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.adjacent(set[i], set[j])) return false;
  return true;
}

bool independent_is_maximal(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  std::vector<bool> in(g.order(), false);
  for (auto v : set) in[v] = true;
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    bool none = true;
    for (auto u : set)
      if (g.adjacent(v, u)) {
        none = false;
        break;
      }
    if (none) return false;
  }
  return true;
}

bool set_dominates(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  std::vector<bool> covered(g.order(), false);
  for (auto v : set) {
    covered[v] = true;
    for (auto u : g.neighbors(v)) covered[u] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool set_totally_dominates(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  std::vector<bool> covered(g.order(), false);
  for (auto v : set)
    for (auto u : g.neighbors(v)) covered[u] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool set_induces_connected(const AdjacencyGraph& g, const std::vector<std::uint32_t>& set) {
  if (set.empty()) return false;
  std::vector<bool> in(g.order(), false), seen(g.order(), false);
  for (auto v : set) in[v] = true;
  std::vector<std::uint32_t> stack{set[0]};
  seen[set[0]] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto v : g.neighbors(u))
      if (in[v] && !seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == set.size();
}

[[noreturn]] void check_failed(const char* what) {
  throw Error(Errc::Internal, std::string("witness verification failed: ") + what);
}

Subspace row_span(const Field& f, std::uint32_t n,
                  const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(f, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::uint32_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  return Subspace::from_generators(m);
}

}  // namespace

CliqueWitness hyperplane_clique(const SubspaceGraph& g) {
  CliqueWitness out;
  out.vertices = g.vertices_of_dim(g.n() - 1);
  out.pairwise_adjacent = set_is_clique(g.adjacency(), out.vertices);
  out.maximal = clique_is_maximal(g.adjacency(), out.vertices);
  if (!out.pairwise_adjacent) check_failed("hyperplane set is not a clique");
  if (!out.maximal) check_failed("hyperplane clique is not maximal");
  return out;
}

ColoringWitness hyperplane_coloring(const SubspaceGraph& g) {
  ColoringWitness out;
  const auto hyperplanes = g.vertices_of_dim(g.n() - 1);
  out.colors.assign(g.order(), UINT32_MAX);
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    for (std::uint32_t h : hyperplanes) {
      if (g.vertex(h).contains(g.vertex(v))) {
        out.colors[v] = h;
        break;
      }
    }
    if (out.colors[v] == UINT32_MAX) check_failed("vertex not contained in any hyperplane");
  }
  std::vector<std::uint32_t> used = out.colors;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  out.color_count = static_cast<std::uint32_t>(used.size());
  out.proper = true;
  const auto& adj = g.adjacency();
  for (std::uint32_t i = 0; i < g.order() && out.proper; ++i)
    for (std::uint32_t j = i + 1; j < g.order(); ++j)
      if (adj.adjacent(i, j) && out.colors[i] == out.colors[j]) {
        out.proper = false;
        break;
      }
  if (!out.proper) check_failed("hyperplane coloring is not proper");
  if (out.color_count != hyperplanes.size())
    check_failed("hyperplane coloring does not use every hyperplane");
  return out;
}

DominatingWitness standard_dominating_set(const SubspaceGraph& g) {
  DominatingWitness out;
  const std::uint32_t n = g.n();
  const Field& f = g.field();
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::vector<Scalar>> rows;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Scalar> e(n, 0);
      e[j] = 1;
      rows.push_back(std::move(e));
    }
    out.vertices.push_back(g.index_of(row_span(f, n, rows)));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  const auto& adj = g.adjacency();
  out.dominating = set_dominates(adj, out.vertices);
  out.total = set_totally_dominates(adj, out.vertices);
  out.connected = set_induces_connected(adj, out.vertices);
  out.clique = set_is_clique(adj, out.vertices);
  if (!out.dominating) check_failed("coordinate hyperplanes do not dominate");
  if (!out.total) check_failed("coordinate hyperplanes are not a total dominating set");
  if (!out.connected) check_failed("coordinate hyperplanes are not connected");
  if (!out.clique) check_failed("coordinate hyperplanes are not a clique");
  // Minimality: dropping W_i must leave some vertex undominated. Holds for
  // n >= 3 (the line <e_i> ends up inside every remaining W_j); at n = 2 the
  // survivor still dominates the complete graph.
  out.minimal = true;
  for (std::size_t drop = 0; drop < out.vertices.size() && out.minimal; ++drop) {
    std::vector<std::uint32_t> rest;
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
      if (i != drop) rest.push_back(out.vertices[i]);
    if (set_dominates(adj, rest)) out.minimal = false;
  }
  return out;
}

IndependentWitness independent_set_odd(const SubspaceGraph& g) {
  if (g.n() % 2 == 0)
    throw Error(Errc::ParityError, "odd-dimension construction needs odd n");
  const std::uint32_t m = g.n() / 2;
  IndependentWitness out;
  for (std::uint32_t v = 0; v < g.order(); ++v)
    if (g.dim_of(v) <= m) out.vertices.push_back(v);
  out.independent = set_is_independent(g.adjacency(), out.vertices);
  out.maximal = independent_is_maximal(g.adjacency(), out.vertices);
  if (!out.independent) check_failed("low-dimension family is not independent");
  if (!out.maximal) check_failed("low-dimension family is not maximal");
  return out;
}

IndependentWitness independent_set_even(const SubspaceGraph& g,
                                        const std::vector<Scalar>& anchor) {
  if (g.n() % 2 != 0)
    throw Error(Errc::ParityError, "even-dimension construction needs even n");
  if (anchor.size() != g.n())
    throw Error(Errc::AmbientMismatch, "anchor length != n");
  if (std::all_of(anchor.begin(), anchor.end(), [](Scalar c) { return c == 0; }))
    throw Error(Errc::ZeroAnchor, "anchor must be a nonzero vector");
  const std::uint32_t m = g.n() / 2;
  IndependentWitness out;
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    std::uint32_t d = g.dim_of(v);
    if (d <= m - 1)
      out.vertices.push_back(v);
    else if (d == m && g.vertex(v).contains(anchor))
      out.vertices.push_back(v);
  }
  out.independent = set_is_independent(g.adjacency(), out.vertices);
  out.maximal = independent_is_maximal(g.adjacency(), out.vertices);
  if (!out.independent) check_failed("anchored family is not independent");
  if (!out.maximal) check_failed("anchored family is not maximal");
  return out;
}

TriangleWitness triangle_through(const SubspaceGraph& g, std::uint32_t v) {
  const Subspace& w = g.vertex(v);
  const Field& f = g.field();
  const std::uint32_t n = g.n();
  Matrix completion = extend_to_basis(w);
  const std::size_t k = w.dim(), l = completion.rows();

  // Sides alpha (basis of w) and beta (completion); cross the first
  // min(k, l) pairs and keep the longer side's tail.
  std::vector<std::vector<Scalar>> w3_rows;
  const std::size_t m = std::min(k, l);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Scalar> row(n);
    for (std::uint32_t j = 0; j < n; ++j)
      row[j] = f.add(w.basis().at(i, j), completion.at(i, j));
    w3_rows.push_back(std::move(row));
  }
  if (l >= k) {
    for (std::size_t i = m; i < l; ++i) w3_rows.push_back(completion.row(i));
  } else {
    for (std::size_t i = m; i < k; ++i) w3_rows.push_back(w.basis().row(i));
  }

  Subspace w2 = Subspace::from_generators(completion);
  Subspace w3 = row_span(f, n, w3_rows);

  TriangleWitness out;
  out.vertices = {v, g.index_of(w2), g.index_of(w3)};
  const auto& adj = g.adjacency();
  out.verified = adj.adjacent(out.vertices[0], out.vertices[1]) &&
                 adj.adjacent(out.vertices[1], out.vertices[2]) &&
                 adj.adjacent(out.vertices[0], out.vertices[2]);
  if (!out.verified) check_failed("triangle construction is not a triangle");
  return out;
}

CommonNeighborWitness common_neighbor(const SubspaceGraph& g, std::uint32_t u, std::uint32_t v) {
  if (u == v) throw Error(Errc::InvalidArgument, "vertices must be distinct");
  if (g.adjacency().adjacent(u, v))
    throw Error(Errc::AlreadyAdjacent, "vertices are already adjacent");
  const Subspace& w1 = g.vertex(u);
  const Subspace& w2 = g.vertex(v);
  const Field& f = g.field();
  const std::uint32_t n = g.n();

  CommonNeighborWitness out;
  Subspace inter = subspace_intersection(w1, w2);
  if (!inter.is_zero()) {
    // The complement of the intersection meets both summands in full.
    out.construction_case = 1;
    Matrix completion = extend_to_basis(inter);
    out.vertex = g.index_of(Subspace::from_generators(completion));
  } else {
    out.construction_case = 2;
    // Order the sides so the shorter basis is crossed into the longer.
    const Subspace& a = w1.dim() <= w2.dim() ? w1 : w2;
    const Subspace& b = w1.dim() <= w2.dim() ? w2 : w1;
    const std::size_t k1 = a.dim(), k2 = b.dim();
    Subspace joint = subspace_sum(a, b);
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < k1; ++i) {
      std::vector<Scalar> row(n);
      for (std::uint32_t j = 0; j < n; ++j)
        row[j] = f.add(a.basis().at(i, j), b.basis().at(i, j));
      rows.push_back(std::move(row));
    }
    for (std::size_t i = k1; i < k2; ++i) rows.push_back(b.basis().row(i));
    if (!joint.is_full()) {
      Matrix gammas = extend_to_basis(joint);
      for (std::size_t i = 0; i < gammas.rows(); ++i) rows.push_back(gammas.row(i));
    }
    out.vertex = g.index_of(row_span(f, n, rows));
  }
  out.verified = g.adjacency().adjacent(out.vertex, u) && g.adjacency().adjacent(out.vertex, v);
  if (!out.verified) check_failed("common neighbor construction failed adjacency check");
  return out;
}

FiveCycleWitness five_cycle_construction(const SubspaceGraph& g) {
  const std::uint32_t n = g.n();
  if (n < 4) throw Error(Errc::DimensionTooSmall, "five-cycle construction needs n >= 4");
  const Field& f = g.field();

  auto unit = [&](std::uint32_t j) {
    std::vector<Scalar> e(n, 0);
    e[j] = 1;
    return e;
  };
  auto unit_sum = [&](std::uint32_t a, std::uint32_t b) {
    std::vector<Scalar> e(n, 0);
    e[a] = 1;
    e[b] = 1;
    return e;
  };
  std::vector<std::vector<Scalar>> tail;  // T: e_5 .. e_n
  for (std::uint32_t j = 4; j < n; ++j) tail.push_back(unit(j));

  auto span_with_tail = [&](std::vector<std::vector<Scalar>> rows) {
    rows.insert(rows.end(), tail.begin(), tail.end());
    return row_span(f, n, rows);
  };

  std::array<Subspace, 5> subs = {
      span_with_tail({unit(0), unit(1)}),
      span_with_tail({unit(2), unit(3)}),
      span_with_tail({unit_sum(0, 2), unit(1)}),
      span_with_tail({unit(0), unit(3)}),
      span_with_tail({unit_sum(0, 2), unit_sum(1, 3)}),
  };
  FiveCycleWitness out;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (subs[i] == subs[j]) check_failed("five-cycle vertices are not distinct");
  for (std::size_t i = 0; i < 5; ++i) out.vertices[i] = g.index_of(subs[i]);

  const auto& adj = g.adjacency();
  std::size_t slot = 0;
  out.cycle_edges_present = true;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j, ++slot) {
      bool a = adj.adjacent(out.vertices[i], out.vertices[j]);
      out.pair_adjacent[slot] = a;
      bool consecutive = (j == i + 1) || (i == 0 && j == 4);
      if (consecutive && !a) out.cycle_edges_present = false;
      if (!consecutive && a)
        out.chords.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  return out;
}

}  // namespace witness
}  // namespace subsum
