// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "subsum/formulas.hpp"
#include "subsum/witness.hpp"

using namespace subsum;

namespace {

SubspaceGraph build(std::uint32_t n, std::uint32_t q) {
  return SubspaceGraph::build(Field::from_order(q), n);
}

}  // namespace

TEST_CASE("hyperplane clique sizes") {
  auto g32 = build(3, 2);
  auto w = witness::hyperplane_clique(g32);
  CHECK(w.vertices.size() == 7);
  CHECK(w.pairwise_adjacent);
  CHECK(w.maximal);
  for (auto v : w.vertices) CHECK(g32.dim_of(v) == 2);

  CHECK(witness::hyperplane_clique(build(2, 2)).vertices.size() == 3);
  CHECK(witness::hyperplane_clique(build(3, 3)).vertices.size() == 13);
  CHECK(witness::hyperplane_clique(build(4, 2)).vertices.size() == 15);
}

TEST_CASE("hyperplane coloring is proper with one color per hyperplane") {
  for (auto [n, q] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {2, 3}, {3, 3}, {4, 2}}) {
    auto g = build(n, q);
    auto w = witness::hyperplane_coloring(g);
    CHECK(w.proper);
    CHECK(BigInt(w.color_count) == formulas::clique_chromatic(n, q));
    // Hyperplane vertices are colored by themselves.
    for (auto h : g.vertices_of_dim(n - 1)) CHECK(w.colors[h] == h);
    // Sandwich: witness clique size equals witness color count.
    CHECK(witness::hyperplane_clique(g).vertices.size() == w.color_count);
  }
}

TEST_CASE("standard dominating set properties across the grid") {
  for (auto [n, q] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {4, 2}, {3, 3}}) {
    auto g = build(n, q);
    auto w = witness::standard_dominating_set(g);
    CHECK(w.vertices.size() == n);
    CHECK(w.dominating);
    CHECK(w.total);
    CHECK(w.connected);
    CHECK(w.clique);
    CHECK(w.minimal);  // n >= 3: dropping any member orphans a coordinate line
  }
  // n = 2: still a dominating clique of size 2 but NOT minimal (complete
  // graph; one vertex suffices).
  auto k3 = build(2, 2);
  auto w2 = witness::standard_dominating_set(k3);
  CHECK(w2.vertices.size() == 2);
  CHECK(w2.dominating);
  CHECK(!w2.minimal);
}

TEST_CASE("odd-dimension independent set") {
  auto g32 = build(3, 2);
  auto w = witness::independent_set_odd(g32);
  CHECK(w.vertices.size() == 7);
  CHECK(w.independent);
  CHECK(w.maximal);
  for (auto v : w.vertices) CHECK(g32.dim_of(v) == 1);

  CHECK(witness::independent_set_odd(build(3, 3)).vertices.size() == 13);

  // n = 5: all dims <= 2, count 31 + 155.
  auto g52 = build(5, 2);
  CHECK(witness::independent_set_odd(g52).vertices.size() == 186);

  CHECK_THROWS_AS(witness::independent_set_odd(build(4, 2)), Error);
}

TEST_CASE("even-dimension independent set with anchor") {
  auto g42 = build(4, 2);
  std::vector<Scalar> e1{1, 0, 0, 0};
  auto w = witness::independent_set_even(g42, e1);
  CHECK(w.vertices.size() == 22);  // 15 lines + 7 anchored planes
  CHECK(w.independent);
  CHECK(w.maximal);

  // Any nonzero anchor works.
  std::vector<Scalar> v{1, 1, 0, 1};
  auto w2 = witness::independent_set_even(g42, v);
  CHECK(w2.vertices.size() == 22);
  CHECK(w2.independent);
  CHECK(w2.maximal);

  // n = 2: the singleton <anchor>.
  auto k3 = build(2, 2);
  auto w3 = witness::independent_set_even(k3, {1, 0});
  CHECK(w3.vertices.size() == 1);
  CHECK(w3.maximal);

  // (4,3): [4 1]_3 + [3 1]_3 = 40 + 13 anchored planes.
  auto g43 = build(4, 3);
  auto w4 = witness::independent_set_even(g43, {1, 0, 0, 0});
  CHECK(w4.vertices.size() == 53);
  CHECK(w4.independent);
  CHECK(w4.maximal);

  CHECK_THROWS_AS(witness::independent_set_even(g42, {0, 0, 0, 0}), Error);
  CHECK_THROWS_AS(witness::independent_set_even(build(3, 2), {1, 0, 0}), Error);
}

TEST_CASE("triangle through a vertex follows the basis-completion construction") {
  auto g32 = build(3, 2);
  Field f2 = Field::make(2, 1);
  std::uint32_t e1 = g32.index_of(Subspace::span_of(f2, {1, 0, 0}));
  auto t = witness::triangle_through(g32, e1);
  CHECK(t.verified);
  CHECK(t.vertices[0] == e1);
  // Expected per the construction: <e2,e3> and <e1+e2, e3>.
  Matrix m23(f2, 2, 3);
  m23.set(0, 1, 1);
  m23.set(1, 2, 1);
  CHECK(t.vertices[1] == g32.index_of(Subspace::from_generators(m23)));
  Matrix mx(f2, 2, 3);
  mx.set(0, 0, 1);
  mx.set(0, 1, 1);
  mx.set(1, 2, 1);
  CHECK(t.vertices[2] == g32.index_of(Subspace::from_generators(mx)));

  // K3 case: <e1>, <e2>, <e1+e2>.
  auto k3 = build(2, 2);
  std::uint32_t v0 = k3.index_of(Subspace::span_of(f2, {1, 0}));
  auto t2 = witness::triangle_through(k3, v0);
  CHECK(t2.verified);
  CHECK(t2.vertices[1] == k3.index_of(Subspace::span_of(f2, {0, 1})));
  CHECK(t2.vertices[2] == k3.index_of(Subspace::span_of(f2, {1, 1})));

  // Output always contains the input vertex; every vertex gets a triangle.
  for (auto [n, q] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {4, 2}, {3, 3}, {2, 3}}) {
    auto g = build(n, q);
    for (std::uint32_t v = 0; v < g.order(); ++v) {
      auto tr = witness::triangle_through(g, v);
      CHECK(tr.verified);
      CHECK(tr.vertices[0] == v);
    }
  }
}

TEST_CASE("common neighbor: both construction cases") {
  auto g32 = build(3, 2);
  Field f2 = Field::make(2, 1);

  // Case 1: <e1> and <e1,e2> intersect nontrivially.
  Matrix p12(f2, 2, 3);
  p12.set(0, 0, 1);
  p12.set(1, 1, 1);
  std::uint32_t u = g32.index_of(Subspace::span_of(f2, {1, 0, 0}));
  std::uint32_t v = g32.index_of(Subspace::from_generators(p12));
  auto w1 = witness::common_neighbor(g32, u, v);
  CHECK(w1.verified);
  CHECK(w1.construction_case == 1);
  CHECK(g32.adjacency().adjacent(w1.vertex, u));
  CHECK(g32.adjacency().adjacent(w1.vertex, v));
  // Consequence: distance 2.
  CHECK(distance(g32.adjacency(), u, v) == 2);

  // Case 2: <e1> and <e2> meet trivially; expected witness <e1+e2, e3>.
  std::uint32_t a = g32.index_of(Subspace::span_of(f2, {1, 0, 0}));
  std::uint32_t b = g32.index_of(Subspace::span_of(f2, {0, 1, 0}));
  auto w2 = witness::common_neighbor(g32, a, b);
  CHECK(w2.verified);
  CHECK(w2.construction_case == 2);
  Matrix mx(f2, 2, 3);
  mx.set(0, 0, 1);
  mx.set(0, 1, 1);
  mx.set(1, 2, 1);
  CHECK(w2.vertex == g32.index_of(Subspace::from_generators(mx)));

  // Already adjacent pairs are rejected.
  auto planes = g32.vertices_of_dim(2);
  CHECK_THROWS_AS(witness::common_neighbor(g32, planes[0], planes[1]), Error);

  // Every non-adjacent pair on the grid gets a verified witness.
  for (auto [n, q] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {3, 3}, {4, 2}}) {
    auto g = build(n, q);
    std::uint64_t failures = 0;
    for (std::uint32_t i = 0; i < g.order(); ++i)
      for (std::uint32_t j = i + 1; j < g.order(); ++j) {
        if (g.adjacency().adjacent(i, j)) continue;
        auto w = witness::common_neighbor(g, i, j);
        if (!w.verified) ++failures;
      }
    CHECK(failures == 0);
  }
}

TEST_CASE("the published five-subspace pattern: a 5-cycle with exactly one chord") {
  auto g42 = build(4, 2);
  auto w = witness::five_cycle_construction(g42);
  CHECK(w.cycle_edges_present);
  // The printed witness has the single chord {W2, W5} (0-indexed 1-4): over
  // any field e1 and e2 are recoverable from the crossed generators.
  REQUIRE(w.chords.size() == 1);
  CHECK(w.chords[0] == std::pair<std::uint32_t, std::uint32_t>{1, 4});

  // Same over GF(3) and at n = 5 (|T| = 1).
  auto g43 = build(4, 3);
  auto w3 = witness::five_cycle_construction(g43);
  CHECK(w3.cycle_edges_present);
  REQUIRE(w3.chords.size() == 1);
  CHECK(w3.chords[0] == std::pair<std::uint32_t, std::uint32_t>{1, 4});

  auto g52 = build(5, 2);
  auto w5 = witness::five_cycle_construction(g52);
  CHECK(w5.cycle_edges_present);
  REQUIRE(w5.chords.size() == 1);
  CHECK(w5.chords[0] == std::pair<std::uint32_t, std::uint32_t>{1, 4});

  // Vertices pairwise distinct by construction.
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(w.vertices[i] != w.vertices[j]);

  CHECK_THROWS_AS(witness::five_cycle_construction(build(3, 2)), Error);
}
