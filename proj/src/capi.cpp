// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "subsum/stats.hpp"
#include "subsum/verify.hpp"
#include "subsum/witness.hpp"

using ojson = nlohmann::ordered_json;

struct subsum_graph {
  subsum::SubspaceGraph impl;
};

namespace {

thread_local std::string g_last_error;

subsum_status status_of(subsum::Errc c) {
  using subsum::Errc;
  switch (c) {
    case Errc::InvalidArgument: return SUBSUM_ERR_INVALID_ARGUMENT;
    case Errc::NotPrime: return SUBSUM_ERR_NOT_PRIME;
    case Errc::DegreeOutOfRange: return SUBSUM_ERR_DEGREE_OUT_OF_RANGE;
    case Errc::OrderTooLarge: return SUBSUM_ERR_ORDER_TOO_LARGE;
    case Errc::DivisionByZero: return SUBSUM_ERR_DIVISION_BY_ZERO;
    case Errc::AmbientMismatch: return SUBSUM_ERR_AMBIENT_MISMATCH;
    case Errc::AlreadyFull: return SUBSUM_ERR_ALREADY_FULL;
    case Errc::RangeError: return SUBSUM_ERR_RANGE;
    case Errc::TooLarge: return SUBSUM_ERR_TOO_LARGE;
    case Errc::DimensionTooSmall: return SUBSUM_ERR_DIMENSION_TOO_SMALL;
    case Errc::Disconnected: return SUBSUM_ERR_DISCONNECTED;
    case Errc::SearchBudgetExceeded: return SUBSUM_ERR_SEARCH_BUDGET_EXCEEDED;
    case Errc::ParityError: return SUBSUM_ERR_PARITY;
    case Errc::ZeroAnchor: return SUBSUM_ERR_ZERO_ANCHOR;
    case Errc::AlreadyAdjacent: return SUBSUM_ERR_ALREADY_ADJACENT;
    case Errc::NonIntegerTerm: return SUBSUM_ERR_NON_INTEGER_TERM;
    case Errc::Internal: return SUBSUM_ERR_INTERNAL;
  }
  return SUBSUM_ERR_INTERNAL;
}

template <typename F>
subsum_status guarded(F&& f) {
  try {
    return f();
  } catch (const subsum::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SUBSUM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SUBSUM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

subsum_status hand_out(const std::string& s, char** out) {
  if (!out) {
    g_last_error = "output pointer is null";
    return SUBSUM_ERR_INVALID_ARGUMENT;
  }
  *out = dup_string(s);
  if (!*out) {
    g_last_error = "allocation failed";
    return SUBSUM_ERR_INTERNAL;
  }
  return SUBSUM_OK;
}

std::vector<subsum::Scalar> parse_vector(const std::string& text, std::uint32_t n,
                                         std::uint32_t q) {
  std::vector<subsum::Scalar> v;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
      v.push_back(static_cast<subsum::Scalar>(std::stoul(part)));
  } else {
    for (char c : text) {
      if (c >= '0' && c <= '9')
        v.push_back(static_cast<subsum::Scalar>(c - '0'));
      else
        throw subsum::Error(subsum::Errc::InvalidArgument,
                            std::string("bad vector digit '") + c + "'");
    }
  }
  if (v.size() != n)
    throw subsum::Error(subsum::Errc::InvalidArgument,
                        "vector needs " + std::to_string(n) + " coordinates");
  for (auto c : v)
    if (c >= q)
      throw subsum::Error(subsum::Errc::InvalidArgument,
                          "coordinate " + std::to_string(c) + " outside GF(" + std::to_string(q) +
                              ")");
  return v;
}

ojson labels_of(const subsum::SubspaceGraph& g, const std::vector<std::uint32_t>& verts) {
  ojson out = ojson::array();
  for (auto v : verts) out.push_back(g.vertex(v).label());
  return out;
}

std::string render(const ojson& j, int as_json, const std::string& text) {
  return as_json ? j.dump(2) + "\n" : text;
}

}  // namespace

extern "C" {

const char* subsum_version(void) { return "0.1.0"; }

const char* subsum_status_name(subsum_status status) {
  switch (status) {
    case SUBSUM_OK: return "OK";
    case SUBSUM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SUBSUM_ERR_NOT_PRIME: return "NotPrime";
    case SUBSUM_ERR_DEGREE_OUT_OF_RANGE: return "DegreeOutOfRange";
    case SUBSUM_ERR_ORDER_TOO_LARGE: return "OrderTooLarge";
    case SUBSUM_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case SUBSUM_ERR_AMBIENT_MISMATCH: return "AmbientMismatch";
    case SUBSUM_ERR_ALREADY_FULL: return "AlreadyFull";
    case SUBSUM_ERR_RANGE: return "RangeError";
    case SUBSUM_ERR_TOO_LARGE: return "TooLarge";
    case SUBSUM_ERR_DIMENSION_TOO_SMALL: return "DimensionTooSmall";
    case SUBSUM_ERR_DISCONNECTED: return "Disconnected";
    case SUBSUM_ERR_SEARCH_BUDGET_EXCEEDED: return "SearchBudgetExceeded";
    case SUBSUM_ERR_PARITY: return "ParityError";
    case SUBSUM_ERR_ZERO_ANCHOR: return "ZeroAnchor";
    case SUBSUM_ERR_ALREADY_ADJACENT: return "AlreadyAdjacent";
    case SUBSUM_ERR_NON_INTEGER_TERM: return "NonIntegerTerm";
    case SUBSUM_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* subsum_last_error(void) { return g_last_error.c_str(); }

void subsum_string_free(char* s) { std::free(s); }

subsum_status subsum_count(uint32_t q, uint32_t n, int32_t k, char** out_decimal) {
  return guarded([&]() {
    subsum::Field f = subsum::Field::from_order(q);  // validates the prime power
    subsum::BigInt value;
    if (k >= 0) {
      value = subsum::gaussian_binomial(n, static_cast<std::uint32_t>(k), f.q());
    } else {
      if (n < 2)
        throw subsum::Error(subsum::Errc::DimensionTooSmall, "graph needs n >= 2");
      value = subsum::galois_number(n, f.q()) - 2;
    }
    return hand_out(value.str(), out_decimal);
  });
}

subsum_status subsum_predict(uint32_t q, uint32_t n, int as_json, char** out) {
  return guarded([&]() {
    subsum::Field f = subsum::Field::from_order(q);
    std::string text = as_json ? subsum::predictions_to_json(n, f.q())
                               : subsum::predictions_to_text(n, f.q());
    return hand_out(text, out);
  });
}

subsum_status subsum_graph_build(uint32_t q, uint32_t n, uint32_t threads, uint64_t max_order,
                                 subsum_graph** out_graph) {
  return guarded([&]() {
    if (!out_graph) {
      g_last_error = "output pointer is null";
      return SUBSUM_ERR_INVALID_ARGUMENT;
    }
    subsum::Field f = subsum::Field::from_order(q);
    subsum::BuildOptions opts;
    opts.threads = threads;
    if (max_order) opts.max_order = max_order;
    auto graph = subsum::SubspaceGraph::build(f, n, opts);
    *out_graph = new subsum_graph{std::move(graph)};
    return SUBSUM_OK;
  });
}

void subsum_graph_free(subsum_graph* g) { delete g; }

subsum_status subsum_graph_order(const subsum_graph* g, uint64_t* out) {
  return guarded([&]() {
    if (!g || !out) {
      g_last_error = "null argument";
      return SUBSUM_ERR_INVALID_ARGUMENT;
    }
    *out = g->impl.order();
    return SUBSUM_OK;
  });
}

subsum_status subsum_graph_edges(const subsum_graph* g, uint64_t* out) {
  return guarded([&]() {
    if (!g || !out) {
      g_last_error = "null argument";
      return SUBSUM_ERR_INVALID_ARGUMENT;
    }
    *out = g->impl.adjacency().edge_count();
    return SUBSUM_OK;
  });
}

subsum_status subsum_graph_stats(const subsum_graph* g, uint64_t budget_ms, int as_json,
                                 char** out) {
  return guarded([&]() {
    if (!g) {
      g_last_error = "null graph";
      return SUBSUM_ERR_INVALID_ARGUMENT;
    }
    subsum::GraphStats s = subsum::compute_stats(g->impl, subsum::budget_from_ms(budget_ms));
    return hand_out(as_json ? subsum::stats_to_json(s) : subsum::stats_to_text(s), out);
  });
}

subsum_status subsum_graph_export(const subsum_graph* g, const char* format, char** out) {
  return guarded([&]() {
    if (!g || !format) {
      g_last_error = "null argument";
      return SUBSUM_ERR_INVALID_ARGUMENT;
    }
    std::string fmt = format;
    if (fmt == "dot") return hand_out(subsum::to_dot(g->impl), out);
    if (fmt == "json") return hand_out(subsum::to_adjacency_json(g->impl) + "\n", out);
    if (fmt == "csv") return hand_out(subsum::to_degree_csv(g->impl), out);
    throw subsum::Error(subsum::Errc::InvalidArgument, "unknown format '" + fmt + "'");
  });
}

subsum_status subsum_witness(const subsum_graph* g, const char* kind, const char* anchor,
                             int64_t vertex, int64_t pair_u, int64_t pair_v, int as_json,
                             char** out) {
  return guarded([&]() {
    if (!g || !kind) {
      g_last_error = "null argument";
      return SUBSUM_ERR_INVALID_ARGUMENT;
    }
    const subsum::SubspaceGraph& graph = g->impl;
    const std::string what = kind;
    namespace w = subsum::witness;
    std::ostringstream text;
    ojson j;
    j["version"] = "1";
    j["kind"] = what;
    j["n"] = graph.n();
    j["q"] = graph.field().q();

    if (what == "clique") {
      auto res = w::hyperplane_clique(graph);
      j["vertices"] = res.vertices;
      j["labels"] = labels_of(graph, res.vertices);
      j["size"] = res.vertices.size();
      j["verified"] = ojson{{"pairwise_adjacent", res.pairwise_adjacent},
                            {"maximal", res.maximal}};
      text << "hyperplane clique: " << res.vertices.size()
           << " vertices; pairwise adjacent: " << (res.pairwise_adjacent ? "yes" : "no")
           << "; maximal: " << (res.maximal ? "yes" : "no") << "\n";
    } else if (what == "coloring") {
      auto res = w::hyperplane_coloring(graph);
      j["colors"] = res.colors;
      j["color_count"] = res.color_count;
      j["verified"] = ojson{{"proper", res.proper}};
      text << "hyperplane coloring: " << res.color_count
           << " colors; proper: " << (res.proper ? "yes" : "no") << "\n";
    } else if (what == "domination") {
      auto res = w::standard_dominating_set(graph);
      j["vertices"] = res.vertices;
      j["labels"] = labels_of(graph, res.vertices);
      j["verified"] = ojson{{"dominating", res.dominating},
                            {"total", res.total},
                            {"connected", res.connected},
                            {"clique", res.clique},
                            {"minimal", res.minimal}};
      text << "coordinate-hyperplane dominating set: " << res.vertices.size()
           << " vertices; dominating: " << (res.dominating ? "yes" : "no")
           << "; total: " << (res.total ? "yes" : "no")
           << "; connected: " << (res.connected ? "yes" : "no")
           << "; clique: " << (res.clique ? "yes" : "no")
           << "; minimal: " << (res.minimal ? "yes" : "no") << "\n";
    } else if (what == "indep-odd") {
      auto res = w::independent_set_odd(graph);
      j["vertices"] = res.vertices;
      j["size"] = res.vertices.size();
      j["verified"] = ojson{{"independent", res.independent}, {"maximal", res.maximal}};
      text << "low-dimension independent set: " << res.vertices.size()
           << " vertices; independent: " << (res.independent ? "yes" : "no")
           << "; maximal: " << (res.maximal ? "yes" : "no") << "\n";
    } else if (what == "indep-even") {
      std::vector<subsum::Scalar> a;
      if (anchor && *anchor) {
        a = parse_vector(anchor, graph.n(), graph.field().q());
      } else {
        a.assign(graph.n(), 0);
        a[0] = 1;
      }
      auto res = w::independent_set_even(graph, a);
      j["anchor"] = a;
      j["vertices"] = res.vertices;
      j["size"] = res.vertices.size();
      j["verified"] = ojson{{"independent", res.independent}, {"maximal", res.maximal}};
      text << "anchored independent set: " << res.vertices.size()
           << " vertices; independent: " << (res.independent ? "yes" : "no")
           << "; maximal: " << (res.maximal ? "yes" : "no") << "\n";
    } else if (what == "triangle") {
      std::uint32_t v = vertex >= 0 ? static_cast<std::uint32_t>(vertex) : 0;
      if (v >= graph.order())
        throw subsum::Error(subsum::Errc::InvalidArgument, "vertex index out of range");
      auto res = w::triangle_through(graph, v);
      std::vector<std::uint32_t> verts(res.vertices.begin(), res.vertices.end());
      j["vertices"] = verts;
      j["labels"] = labels_of(graph, verts);
      j["verified"] = res.verified;
      text << "triangle through " << graph.vertex(v).label() << ": {"
           << graph.vertex(res.vertices[0]).label() << ", "
           << graph.vertex(res.vertices[1]).label() << ", "
           << graph.vertex(res.vertices[2]).label() << "}; verified: "
           << (res.verified ? "yes" : "no") << "\n";
    } else if (what == "common-neighbor") {
      std::uint32_t u = 0, v = 0;
      if (pair_u >= 0 && pair_v >= 0) {
        u = static_cast<std::uint32_t>(pair_u);
        v = static_cast<std::uint32_t>(pair_v);
        if (u >= graph.order() || v >= graph.order())
          throw subsum::Error(subsum::Errc::InvalidArgument, "vertex index out of range");
      } else {
        bool found = false;
        for (std::uint32_t uu = 0; uu < graph.order() && !found; ++uu)
          for (std::uint32_t vv = uu + 1; vv < graph.order() && !found; ++vv)
            if (!graph.adjacency().adjacent(uu, vv)) {
              u = uu;
              v = vv;
              found = true;
            }
        if (!found)
          throw subsum::Error(subsum::Errc::InvalidArgument,
                              "graph is complete; no non-adjacent pair exists");
      }
      auto res = w::common_neighbor(graph, u, v);
      j["pair"] = ojson::array({u, v});
      j["vertex"] = res.vertex;
      j["label"] = graph.vertex(res.vertex).label();
      j["construction_case"] = res.construction_case;
      j["verified"] = res.verified;
      text << "common neighbor of " << graph.vertex(u).label() << " and "
           << graph.vertex(v).label() << ": " << graph.vertex(res.vertex).label() << " (case "
           << res.construction_case << "); verified: " << (res.verified ? "yes" : "no") << "\n";
    } else if (what == "c5") {
      auto res = w::five_cycle_construction(graph);
      std::vector<std::uint32_t> verts(res.vertices.begin(), res.vertices.end());
      j["vertices"] = verts;
      j["labels"] = labels_of(graph, verts);
      j["cycle_edges_present"] = res.cycle_edges_present;
      ojson chords = ojson::array();
      for (auto& [a, b] : res.chords) chords.push_back(ojson::array({a, b}));
      j["chords"] = chords;
      ojson pairs = ojson::array();
      std::size_t slot = 0;
      for (std::uint32_t i = 0; i < 5; ++i)
        for (std::uint32_t jdx = i + 1; jdx < 5; ++jdx, ++slot)
          pairs.push_back(ojson{{"pair", ojson::array({i, jdx})},
                                {"adjacent", res.pair_adjacent[slot]}});
      j["pairs"] = pairs;
      text << "five-subspace construction: cycle edges "
           << (res.cycle_edges_present ? "present" : "missing") << "; chords:";
      if (res.chords.empty()) text << " none";
      for (auto& [a, b] : res.chords) text << " (" << a << "," << b << ")";
      text << "\n";
    } else {
      throw subsum::Error(subsum::Errc::InvalidArgument, "unknown witness kind '" + what + "'");
    }
    return hand_out(render(j, as_json, text.str()), out);
  });
}

subsum_status subsum_verify(const char* grid, uint64_t budget_ms, uint32_t threads, int strict,
                            int with_timings, char** out_text, char** out_json, int* exit_code) {
  return guarded([&]() {
    auto cases = subsum::parse_grid(grid ? grid : "default");
    subsum::VerifyOptions opts;
    opts.budget = subsum::budget_from_ms(budget_ms);
    opts.threads = threads ? threads : 1;
    subsum::VerificationReport report = subsum::verify_grid(cases, opts);
    if (exit_code) *exit_code = subsum::report_exit_code(report, strict != 0, {});
    if (out_text) {
      subsum_status s = hand_out(subsum::report_to_text(report), out_text);
      if (s != SUBSUM_OK) return s;
    }
    if (out_json) {
      subsum_status s = hand_out(subsum::report_to_json(report, with_timings != 0), out_json);
      if (s != SUBSUM_OK) return s;
    }
    return SUBSUM_OK;
  });
}

}  // extern "C"
