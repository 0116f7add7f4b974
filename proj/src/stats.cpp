// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0

#include "subsum/stats.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "subsum/formulas.hpp"
#include "subsum/witness.hpp"

namespace subsum {

using ojson = nlohmann::ordered_json;

GraphStats compute_stats(const SubspaceGraph& g, Budget budget) {
  GraphStats s;
  s.n = g.n();
  s.p = g.field().p();
  s.r = g.field().r();
  s.q = g.field().q();
  s.modulus = g.field().modulus();
  const AdjacencyGraph& adj = g.adjacency();
  s.order = adj.order();
  s.edges = adj.edge_count();
  auto degrees = adj.degree_sequence();
  s.min_degree = *std::min_element(degrees.begin(), degrees.end());
  s.max_degree = *std::max_element(degrees.begin(), degrees.end());
  for (std::uint32_t k = 1; k < g.n(); ++k) {
    auto verts = g.vertices_of_dim(k);
    if (!verts.empty()) s.degree_by_dim[k] = degrees[verts.front()];
  }
  s.connected = is_connected(adj);
  s.diameter = diameter(adj);
  s.girth = girth(adj);
  s.eulerian = is_eulerian(adj);
  if (s.connected) s.edge_connectivity = edge_connectivity(adj);

  CliqueResult clique = max_clique(adj, budget);
  if (clique.exact) s.clique_number = static_cast<std::uint32_t>(clique.vertices.size());
  ColoringResult coloring = chromatic_number(adj, nullptr, budget);
  if (coloring.exact) s.chromatic_number = coloring.count;
  CliqueResult mis = max_independent_set(adj, budget);
  if (mis.exact) s.independence_number = static_cast<std::uint32_t>(mis.vertices.size());

  auto dom_witness = witness::standard_dominating_set(g);
  DominationResult dom = domination_numbers(adj, &dom_witness.vertices, budget);
  if (dom.gamma.exact) s.gamma = dom.gamma.value;
  if (dom.gamma_total.exact) s.gamma_total = dom.gamma_total.value;
  if (dom.gamma_connected.exact) s.gamma_connected = dom.gamma_connected.value;
  if (dom.gamma_clique.exact) s.gamma_clique = dom.gamma_clique.value;

  PerfectResult perfect = is_perfect(adj, budget);
  s.perfect = perfect.perfect;
  HamiltonianResult ham = hamiltonian_cycle(adj, budget);
  s.hamiltonian = ham.hamiltonian;
  return s;
}

namespace {

template <typename T>
ojson opt_json(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

std::string opt_text(const std::optional<std::uint32_t>& v, const char* missing = "unknown") {
  return v ? std::to_string(*v) : std::string(missing);
}

std::string opt_text(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "unknown";
}

}  // namespace

std::string stats_to_json(const GraphStats& s) {
  ojson j;
  j["version"] = "1";
  j["field"] = ojson{{"p", s.p}, {"r", s.r}, {"q", s.q}, {"modulus", s.modulus}};
  j["n"] = s.n;
  j["order"] = s.order;
  j["edges"] = s.edges;
  j["min_degree"] = s.min_degree;
  j["max_degree"] = s.max_degree;
  ojson by_dim;
  for (auto& [k, d] : s.degree_by_dim) by_dim[std::to_string(k)] = d;
  j["degree_by_dim"] = by_dim;
  j["connected"] = s.connected;
  j["diameter"] = opt_json(s.diameter);
  j["diameter_finite"] = s.diameter.has_value();
  j["girth"] = opt_json(s.girth);
  j["girth_finite"] = s.girth.has_value();
  j["eulerian"] = s.eulerian;
  j["edge_connectivity"] = opt_json(s.edge_connectivity);
  j["clique_number"] = opt_json(s.clique_number);
  j["chromatic_number"] = opt_json(s.chromatic_number);
  j["independence_number"] = opt_json(s.independence_number);
  j["domination"] = ojson{{"gamma", opt_json(s.gamma)},
                          {"total", opt_json(s.gamma_total)},
                          {"connected", opt_json(s.gamma_connected)},
                          {"clique", opt_json(s.gamma_clique)}};
  j["perfect"] = opt_json(s.perfect);
  j["hamiltonian"] = opt_json(s.hamiltonian);
  return j.dump(2) + "\n";
}

std::string stats_to_text(const GraphStats& s) {
  std::ostringstream out;
  auto line = [&](const char* name, const std::string& value) {
    out << name;
    for (std::size_t i = std::string(name).size(); i < 22; ++i) out << ' ';
    out << value << "\n";
  };
  line("field", "GF(" + std::to_string(s.q) + ")" +
                    (s.r > 1 ? " = GF(" + std::to_string(s.p) + "^" + std::to_string(s.r) + ")"
                             : ""));
  line("n", std::to_string(s.n));
  line("order", std::to_string(s.order));
  line("edges", std::to_string(s.edges));
  line("min degree", std::to_string(s.min_degree));
  line("max degree", std::to_string(s.max_degree));
  line("connected", s.connected ? "true" : "false");
  line("diameter", opt_text(s.diameter, "infinite"));
  line("girth", opt_text(s.girth, "infinite"));
  line("eulerian", s.eulerian ? "true" : "false");
  line("edge connectivity", opt_text(s.edge_connectivity, "-"));
  line("clique number", opt_text(s.clique_number));
  line("chromatic number", opt_text(s.chromatic_number));
  line("independence number", opt_text(s.independence_number));
  line("gamma", opt_text(s.gamma));
  line("gamma_total", opt_text(s.gamma_total));
  line("gamma_connected", opt_text(s.gamma_connected));
  line("gamma_clique", opt_text(s.gamma_clique));
  line("perfect", opt_text(s.perfect));
  line("hamiltonian", opt_text(s.hamiltonian));
  return out.str();
}

namespace {

struct PredictionRow {
  std::string name;
  ojson value;
  std::string detail;
};

std::vector<PredictionRow> prediction_rows(std::uint32_t n, std::uint32_t q) {
  std::vector<PredictionRow> rows;
  rows.push_back({"order", formulas::order(n, q).str(), "G(n,q) - 2"});
  rows.push_back({"complete", formulas::complete(n), "complete iff n = 2"});
  rows.push_back({"diameter", formulas::diameter(n), "1 if n = 2 else 2"});
  rows.push_back({"girth", 3, "triangulated"});
  rows.push_back({"min_degree", formulas::min_degree(n, q).str(), "q^(n-1)"});
  rows.push_back({"edge_connectivity", formulas::edge_connectivity(n, q).str(),
                  "equals min degree (diameter 2)"});
  rows.push_back({"clique_number", formulas::clique_chromatic(n, q).str(),
                  "hyperplane count 1+q+...+q^(n-1)"});
  rows.push_back({"chromatic_number", formulas::clique_chromatic(n, q).str(),
                  "equals clique number"});
  rows.push_back({"domination_number", formulas::domination(n),
                  n == 2 ? "published bound; fails at n = 2 (complete graph)" : "n"});
  rows.push_back({"eulerian", formulas::eulerian(q), "iff q even"});
  rows.push_back({"perfect", formulas::perfect(n),
                  n == 2 ? "published dichotomy; n = 2 is complete, hence perfect"
                         : "iff n = 3"});
  for (std::uint32_t k = 1; k < n; ++k) {
    auto eval = formulas::degree_as_published(n, k, q);
    ojson terms = ojson::array();
    for (auto& t : eval.terms)
      terms.push_back(ojson{{"r", t.r}, {"value", t.value.str()}, {"integral", t.integral}});
    rows.push_back({"degree_published[k=" + std::to_string(k) + "]",
                    eval.value ? ojson(eval.value->str()) : ojson(nullptr),
                    terms.dump()});
    rows.push_back({"degree_repaired[k=" + std::to_string(k) + "]",
                    formulas::degree_repaired(n, k, q).str(),
                    "ordered generating tuples per target subspace"});
  }
  auto mx = formulas::max_degree_as_published(n, q);
  rows.push_back({"max_degree_published", mx.value ? ojson(mx.value->str()) : ojson(nullptr),
                  "published hyperplane-degree sum"});
  return rows;
}

}  // namespace

std::string predictions_to_json(std::uint32_t n, std::uint32_t q) {
  ojson j;
  j["version"] = "1";
  j["n"] = n;
  j["q"] = q;
  ojson preds = ojson::array();
  for (auto& row : prediction_rows(n, q))
    preds.push_back(ojson{{"name", row.name}, {"value", row.value}, {"detail", row.detail}});
  j["predictions"] = preds;
  return j.dump(2) + "\n";
}

std::string predictions_to_text(std::uint32_t n, std::uint32_t q) {
  std::ostringstream out;
  out << "closed-form predictions for n=" << n << ", q=" << q << "\n";
  for (auto& row : prediction_rows(n, q)) {
    out << "  " << row.name;
    for (std::size_t i = row.name.size(); i < 28; ++i) out << ' ';
    std::string v = row.value.is_string() ? row.value.get<std::string>() : row.value.dump();
    out << v;
    for (std::size_t i = v.size(); i < 12; ++i) out << ' ';
    out << row.detail << "\n";
  }
  return out.str();
}

}  // namespace subsum
