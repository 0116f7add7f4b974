// Copyright (c) 2026 the subsum authors
// SPDX-License-Identifier: Apache-2.0
//
// subsum: exact invariants, closed-form predictions and a verification
// harness for subspace sum graphs of F_q^n. Thin shell over the libsubsum
// C API; all output formatting happens behind the API so other bindings see
// exactly what the CLI sees.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "subsum.h"

namespace {

constexpr int kUsageError = 64;

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { subsum_string_free(s); }
};

struct GraphGuard {
  subsum_graph* g = nullptr;
  ~GraphGuard() { subsum_graph_free(g); }
};

[[noreturn]] void die(subsum_status status) {
  std::cerr << "error: " << subsum_status_name(status) << ": " << subsum_last_error() << "\n";
  std::exit(1);
}

void check(subsum_status status) {
  if (status != SUBSUM_OK) die(status);
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: InvalidArgument: cannot open " << out_path << " for writing\n";
    std::exit(1);
  }
  f << payload;
}

std::uint64_t default_budget_ms() {
  if (const char* env = std::getenv("SUBSUM_BUDGET_MS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 5000;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subsum: exact analysis of subspace sum graphs over finite fields"};
  app.require_subcommand(1);
  app.footer(
      "Budgets are deterministic: --budget-ms maps to a fixed search-node cap\n"
      "(2000 nodes/ms), so identical invocations produce identical bytes.\n"
      "SUBSUM_BUDGET_MS sets the default budget; 0 means unlimited.");

  std::uint32_t n = 0, q = 0, threads = 0;
  std::uint64_t budget_ms = default_budget_ms();
  std::string out_path, format = "table";

  auto add_nq = [&](CLI::App* cmd, bool need_k = false) {
    cmd->add_option("--n", n, "ambient dimension")->required();
    cmd->add_option("--q", q, "field order (prime power)")->required();
    (void)need_k;
  };

  // count
  auto* count = app.add_subcommand("count", "subspace counts (exact decimal)");
  std::int32_t count_k = -1;
  add_nq(count);
  count->add_option("--k", count_k, "dimension to count (default: all graph vertices)");

  // build
  auto* build = app.add_subcommand("build", "build the graph and print a summary");
  add_nq(build);
  build->add_option("--threads", threads, "worker threads (0 = auto)");
  build->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));

  // stats
  auto* stats = app.add_subcommand("stats", "every invariant of one graph (exact, budgeted)");
  add_nq(stats);
  stats->add_option("--threads", threads, "worker threads (0 = auto)");
  stats->add_option("--budget-ms", budget_ms, "per-solver budget (deterministic node cap)");
  stats->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));

  // predict
  auto* predict = app.add_subcommand("predict", "closed-form predictions (no graph build)");
  add_nq(predict);
  predict->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));

  // witness
  auto* witness = app.add_subcommand("witness", "constructive witnesses, verified on the graph");
  std::string theorem, anchor;
  std::int64_t witness_vertex = -1;
  std::vector<std::int64_t> witness_pair;
  add_nq(witness);
  witness->add_option("--theorem", theorem,
                      "clique|coloring|domination|indep-odd|indep-even|triangle|"
                      "common-neighbor|c5")
      ->required()
      ->check(CLI::IsMember({"clique", "coloring", "domination", "indep-odd", "indep-even",
                             "triangle", "common-neighbor", "c5"}));
  witness->add_option("--anchor", anchor, "anchor vector for indep-even, e.g. 1000 or 1,0,0,0");
  witness->add_option("--vertex", witness_vertex, "vertex index for triangle (default 0)");
  witness->add_option("--pair", witness_pair, "vertex pair for common-neighbor (default: first non-adjacent)")
      ->expected(2);
  witness->add_option("--threads", threads, "worker threads (0 = auto)");
  witness->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "audit every closed form against brute force");
  std::string grid = "default";
  std::string json_path;
  bool strict = false, timings = false;
  verify->add_option("--grid", grid, "\"default\" or n,q;n,q;... pairs");
  verify->add_option("--budget-ms", budget_ms, "per-claim budget (deterministic node cap)");
  verify->add_option("--json", json_path, "write the JSON report to this path");
  verify->add_option("--threads", threads, "cases run in parallel (0 = auto)");
  verify->add_flag("--strict", strict, "exit 2 when any discrepancy is present");
  verify->add_flag("--timings", timings, "include per-claim ms in the JSON (nondeterministic)");

  // export
  auto* exp = app.add_subcommand("export", "write the graph as dot, json or csv");
  add_nq(exp);
  exp->add_option("--format", format, "dot|json|csv")
      ->required()
      ->check(CLI::IsMember({"dot", "json", "csv"}));
  exp->add_option("--out", out_path, "output path (default: stdout)");
  exp->add_option("--threads", threads, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  const bool as_json = format == "json";

  if (count->parsed()) {
    StringGuard s;
    check(subsum_count(q, n, count_k, &s.s));
    std::cout << s.s << "\n";
    return 0;
  }

  if (predict->parsed()) {
    StringGuard s;
    check(subsum_predict(q, n, as_json, &s.s));
    std::cout << s.s;
    return 0;
  }

  if (build->parsed()) {
    GraphGuard g;
    check(subsum_graph_build(q, n, threads, 0, &g.g));
    std::uint64_t order = 0, edges = 0;
    check(subsum_graph_order(g.g, &order));
    check(subsum_graph_edges(g.g, &edges));
    if (as_json)
      std::cout << "{\"version\":\"1\",\"n\":" << n << ",\"q\":" << q << ",\"order\":" << order
                << ",\"edges\":" << edges << "}\n";
    else
      std::cout << "order " << order << ", edges " << edges << "\n";
    return 0;
  }

  if (stats->parsed()) {
    GraphGuard g;
    check(subsum_graph_build(q, n, threads, 0, &g.g));
    StringGuard s;
    check(subsum_graph_stats(g.g, budget_ms, as_json, &s.s));
    std::cout << s.s;
    return 0;
  }

  if (witness->parsed()) {
    GraphGuard g;
    check(subsum_graph_build(q, n, threads, 0, &g.g));
    StringGuard s;
    std::int64_t pu = witness_pair.size() == 2 ? witness_pair[0] : -1;
    std::int64_t pv = witness_pair.size() == 2 ? witness_pair[1] : -1;
    check(subsum_witness(g.g, theorem.c_str(), anchor.empty() ? nullptr : anchor.c_str(),
                         witness_vertex, pu, pv, as_json, &s.s));
    std::cout << s.s;
    return 0;
  }

  if (verify->parsed()) {
    StringGuard text_out, json_out;
    int exit_code = 0;
    check(subsum_verify(grid.c_str(), budget_ms, threads, strict, timings, &text_out.s,
                        json_path.empty() ? nullptr : &json_out.s, &exit_code));
    if (!json_path.empty()) emit(json_out.s, json_path);
    std::cout << text_out.s;
    return exit_code;
  }

  if (exp->parsed()) {
    GraphGuard g;
    check(subsum_graph_build(q, n, threads, 0, &g.g));
    StringGuard s;
    check(subsum_graph_export(g.g, format.c_str(), &s.s));
    emit(s.s, out_path);
    return 0;
  }

  return kUsageError;
}
