// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library C API surface end to end: status codes,
// opaque handles, string ownership, and the subcommand payloads.

#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "subsum.h"

using ojson = nlohmann::ordered_json;

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { subsum_string_free(s); }
  std::string get() const { return s ? s : ""; }
};

struct Graph {
  subsum_graph* g = nullptr;
  ~Graph() { subsum_graph_free(g); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(subsum_version()) == "0.1.0");
  CHECK(std::string(subsum_status_name(SUBSUM_OK)) == "OK");
  CHECK(std::string(subsum_status_name(SUBSUM_ERR_NOT_PRIME)) == "NotPrime");
  CHECK(std::string(subsum_status_name(SUBSUM_ERR_DIMENSION_TOO_SMALL)) == "DimensionTooSmall");
}

TEST_CASE("count") {
  Str s;
  REQUIRE(subsum_count(2, 3, -1, &s.s) == SUBSUM_OK);
  CHECK(s.get() == "14");
  Str t;
  REQUIRE(subsum_count(2, 4, 2, &t.s) == SUBSUM_OK);
  CHECK(t.get() == "35");
  Str u;
  REQUIRE(subsum_count(3, 3, -1, &u.s) == SUBSUM_OK);
  CHECK(u.get() == "26");
}

TEST_CASE("count error paths set the status and last_error") {
  Str s;
  CHECK(subsum_count(6, 3, -1, &s.s) == SUBSUM_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(subsum_last_error()) > 0);
  CHECK(subsum_count(2, 1, -1, &s.s) == SUBSUM_ERR_DIMENSION_TOO_SMALL);
  CHECK(subsum_count(2, 3, 7, &s.s) == SUBSUM_ERR_RANGE);
}

TEST_CASE("graph build, order, edges, free") {
  Graph g;
  REQUIRE(subsum_graph_build(2, 3, 1, 0, &g.g) == SUBSUM_OK);
  std::uint64_t order = 0, edges = 0;
  REQUIRE(subsum_graph_order(g.g, &order) == SUBSUM_OK);
  REQUIRE(subsum_graph_edges(g.g, &edges) == SUBSUM_OK);
  CHECK(order == 14);
  CHECK(edges == 49);

  subsum_graph* bad = nullptr;
  CHECK(subsum_graph_build(2, 1, 1, 0, &bad) == SUBSUM_ERR_DIMENSION_TOO_SMALL);
  CHECK(bad == nullptr);
  CHECK(subsum_graph_build(2, 12, 1, 0, &bad) == SUBSUM_ERR_TOO_LARGE);
  CHECK(subsum_graph_order(nullptr, &order) == SUBSUM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("stats JSON carries the expected invariants") {
  Graph g;
  REQUIRE(subsum_graph_build(2, 3, 1, 0, &g.g) == SUBSUM_OK);
  Str s;
  REQUIRE(subsum_graph_stats(g.g, 2000, 1, &s.s) == SUBSUM_OK);
  ojson j = ojson::parse(s.get());
  CHECK(j["version"] == "1");
  CHECK(j["order"] == 14);
  CHECK(j["edges"] == 49);
  CHECK(j["min_degree"] == 4);
  CHECK(j["max_degree"] == 10);
  CHECK(j["diameter"] == 2);
  CHECK(j["girth"] == 3);
  CHECK(j["eulerian"] == true);
  CHECK(j["edge_connectivity"] == 4);
  CHECK(j["clique_number"] == 7);
  CHECK(j["chromatic_number"] == 7);
  CHECK(j["independence_number"] == 7);
  CHECK(j["domination"]["gamma"] == 3);
  CHECK(j["domination"]["clique"] == 3);
  CHECK(j["perfect"] == true);
  CHECK(j["hamiltonian"] == true);

  Str text;
  REQUIRE(subsum_graph_stats(g.g, 2000, 0, &text.s) == SUBSUM_OK);
  CHECK(text.get().find("order") != std::string::npos);
  CHECK(text.get().find("14") != std::string::npos);
}

TEST_CASE("export formats") {
  Graph g;
  REQUIRE(subsum_graph_build(2, 3, 1, 0, &g.g) == SUBSUM_OK);

  Str dot;
  REQUIRE(subsum_graph_export(g.g, "dot", &dot.s) == SUBSUM_OK);
  CHECK(dot.get().find("graph subsum {") == 0);
  CHECK(dot.get().find("\"100\"") != std::string::npos);

  Str json;
  REQUIRE(subsum_graph_export(g.g, "json", &json.s) == SUBSUM_OK);
  ojson j = ojson::parse(json.get());
  CHECK(j["order"] == 14);
  CHECK(j["edge_count"] == 49);
  CHECK(j["field"]["p"] == 2);
  CHECK(j["vertices"].size() == 14);
  CHECK(j["edges"].size() == 49);

  Str csv;
  REQUIRE(subsum_graph_export(g.g, "csv", &csv.s) == SUBSUM_OK);
  CHECK(csv.get().rfind("index,dim,basis,degree\n", 0) == 0);

  Str bad;
  CHECK(subsum_graph_export(g.g, "xml", &bad.s) == SUBSUM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("predictions") {
  Str s;
  REQUIRE(subsum_predict(2, 3, 1, &s.s) == SUBSUM_OK);
  ojson j = ojson::parse(s.get());
  CHECK(j["n"] == 3);
  bool saw_order = false;
  for (const auto& p : j["predictions"])
    if (p["name"] == "order") {
      saw_order = true;
      CHECK(p["value"] == "14");
    }
  CHECK(saw_order);
}

TEST_CASE("witness kinds through the C API") {
  Graph g;
  REQUIRE(subsum_graph_build(2, 3, 1, 0, &g.g) == SUBSUM_OK);

  Str clique;
  REQUIRE(subsum_witness(g.g, "clique", nullptr, -1, -1, -1, 1, &clique.s) == SUBSUM_OK);
  ojson cj = ojson::parse(clique.get());
  CHECK(cj["size"] == 7);
  CHECK(cj["verified"]["pairwise_adjacent"] == true);
  CHECK(cj["verified"]["maximal"] == true);

  Str coloring;
  REQUIRE(subsum_witness(g.g, "coloring", nullptr, -1, -1, -1, 1, &coloring.s) == SUBSUM_OK);
  CHECK(ojson::parse(coloring.get())["color_count"] == 7);

  Str dom;
  REQUIRE(subsum_witness(g.g, "domination", nullptr, -1, -1, -1, 1, &dom.s) == SUBSUM_OK);
  ojson dj = ojson::parse(dom.get());
  CHECK(dj["vertices"].size() == 3);
  CHECK(dj["verified"]["dominating"] == true);
  CHECK(dj["verified"]["minimal"] == true);

  Str indep;
  REQUIRE(subsum_witness(g.g, "indep-odd", nullptr, -1, -1, -1, 1, &indep.s) == SUBSUM_OK);
  CHECK(ojson::parse(indep.get())["size"] == 7);

  Str tri;
  REQUIRE(subsum_witness(g.g, "triangle", nullptr, 0, -1, -1, 1, &tri.s) == SUBSUM_OK);
  CHECK(ojson::parse(tri.get())["verified"] == true);

  Str cn;
  REQUIRE(subsum_witness(g.g, "common-neighbor", nullptr, -1, -1, -1, 1, &cn.s) == SUBSUM_OK);
  CHECK(ojson::parse(cn.get())["verified"] == true);

  // Parity and range errors surface as typed statuses.
  Str bad;
  CHECK(subsum_witness(g.g, "indep-even", nullptr, -1, -1, -1, 1, &bad.s) == SUBSUM_ERR_PARITY);
  CHECK(subsum_witness(g.g, "c5", nullptr, -1, -1, -1, 1, &bad.s) ==
        SUBSUM_ERR_DIMENSION_TOO_SMALL);
  CHECK(subsum_witness(g.g, "nonsense", nullptr, -1, -1, -1, 1, &bad.s) ==
        SUBSUM_ERR_INVALID_ARGUMENT);
  CHECK(subsum_witness(g.g, "triangle", nullptr, 99, -1, -1, 1, &bad.s) ==
        SUBSUM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("indep-even via anchor string on (4,2)") {
  Graph g;
  REQUIRE(subsum_graph_build(2, 4, 1, 0, &g.g) == SUBSUM_OK);
  Str a;
  REQUIRE(subsum_witness(g.g, "indep-even", "1000", -1, -1, -1, 1, &a.s) == SUBSUM_OK);
  CHECK(ojson::parse(a.get())["size"] == 22);
  Str b;
  REQUIRE(subsum_witness(g.g, "indep-even", "1,0,0,0", -1, -1, -1, 1, &b.s) == SUBSUM_OK);
  CHECK(ojson::parse(b.get())["size"] == 22);
  Str bad;
  CHECK(subsum_witness(g.g, "indep-even", "0000", -1, -1, -1, 1, &bad.s) ==
        SUBSUM_ERR_ZERO_ANCHOR);
  CHECK(subsum_witness(g.g, "indep-even", "10", -1, -1, -1, 1, &bad.s) ==
        SUBSUM_ERR_INVALID_ARGUMENT);

  Str c5;
  REQUIRE(subsum_witness(g.g, "c5", nullptr, -1, -1, -1, 1, &c5.s) == SUBSUM_OK);
  ojson cj = ojson::parse(c5.get());
  CHECK(cj["cycle_edges_present"] == true);
  CHECK(cj["chords"] == ojson::array({ojson::array({1, 4})}));
}

TEST_CASE("verify through the C API: exit codes and determinism") {
  Str text1, json1, json2;
  int code1 = -1, code2 = -1;
  REQUIRE(subsum_verify("2,2;3,2", 2000, 1, 0, 0, &text1.s, &json1.s, &code1) == SUBSUM_OK);
  CHECK(code1 == 0);  // expected discrepancies are tolerated
  CHECK(text1.get().find("case n=2 q=2") != std::string::npos);

  REQUIRE(subsum_verify("2,2;3,2", 2000, 1, 1, 0, nullptr, &json2.s, &code2) == SUBSUM_OK);
  CHECK(code2 == 2);  // strict surfaces the published-formula discrepancies
  CHECK(json1.get() == json2.get());

  ojson j = ojson::parse(json1.get());
  CHECK(j["version"] == "1");
  CHECK(j["grid"].size() == 2);

  Str bad;
  CHECK(subsum_verify("nonsense", 2000, 1, 0, 0, &bad.s, nullptr, nullptr) ==
        SUBSUM_ERR_INVALID_ARGUMENT);
}
