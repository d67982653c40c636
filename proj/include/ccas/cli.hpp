#pragma once

// Command-line front end: `count`, `densest`, `oracle`, `bench`.
//
// Every invocation writes one JSON document (or a key: value listing with
// --format text) to `out`; diagnostics go to `err`. Exit codes:
//   0 success, 2 usage, 3 input (unreadable or malformed), 4 overflow,
//   5 oracle size refusal, 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ccas/ccas.hpp"

namespace ccas::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kInput = 3,
  kOverflow = 4,
  kOracleSize = 5,
};

enum class Format { json, text };

struct CliConfig {
  std::string command;
  std::string input;
  std::uint32_t k = 3;
  std::size_t iterations = 100;
  Variant variant = Variant::simultaneous;
  PathOrdering ordering = PathOrdering::depth;
  std::uint64_t seed = 0;
  Format format = Format::json;
  std::string dump_sct;  // count only; empty = no dump
};

using Json = nlohmann::ordered_json;

/// Counts above 2^64 - 1 are written as decimal strings.
inline Json count_json(Count value) {
  if (fits_u64(value)) return Json(static_cast<std::uint64_t>(value));
  return Json(to_string(value));
}

/// Checkpoints 1, 2, 5, 10, 20, 50, ... below T, then T itself.
inline std::vector<std::size_t> bench_checkpoints(std::size_t iterations) {
  std::vector<std::size_t> out;
  if (iterations == 0) return {0};
  for (std::size_t decade = 1;; decade *= 10) {
    for (std::size_t m : {1, 2, 5}) {
      std::size_t t = m * decade;
      if (t >= iterations) {
        out.push_back(iterations);
        return out;
      }
      out.push_back(t);
    }
  }
}

inline Json count_report(const Graph& g, const CliConfig& cfg) {
  CoreInfo info = core_decomposition(g);
  InducedSubgraph core = core_restriction(g, info, cfg.k - 1);
  Sct sct = build_sct(core.graph, cfg.k);
  CliqueCounts local = local_counts(sct);
  if (!cfg.dump_sct.empty()) {
    std::ofstream dump(cfg.dump_sct);
    if (!dump) throw std::runtime_error("cannot write '" + cfg.dump_sct + "'");
    write_sct_dump(dump, sct, core.graph);
  }
  std::vector<Count> per_vertex(g.num_vertices(), 0);
  for (std::size_t i = 0; i < core.to_parent.size(); ++i) {
    per_vertex[core.to_parent[i]] = local.per_vertex[i];
  }
  Json report;
  report["k"] = cfg.k;
  report["total"] = count_json(local.total);
  Json per = Json::object();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    per[std::to_string(g.external_id(v))] = count_json(per_vertex[v]);
  }
  report["per_vertex"] = std::move(per);
  report["delta"] = count_json(max_local(local));
  report["core_reduced_n"] = core.graph.num_vertices();
  return report;
}

inline Json densest_report(const Graph& g, const CliConfig& cfg) {
  IterationConfig it{cfg.iterations, cfg.variant, cfg.ordering, cfg.seed};
  RunResult result = run(g, cfg.k, it);
  CdsResult cds = extract_cds(g, result.weights, cfg.k);
  Json report;
  report["k"] = cfg.k;
  report["T"] = cfg.iterations;
  report["variant"] = variant_name(cfg.variant);
  report["ordering"] = ordering_name(cfg.ordering);
  report["seed"] = cfg.seed;
  report["density"] = cds.density;
  report["clique_count"] = count_json(cds.clique_count);
  report["vertices"] = cds.vertices;
  report["max_weight"] = result.weights.max();
  report["weight_sum"] = result.weights.sum();
  report["delta"] = count_json(result.stats.delta);
  report["bound_report"] = result.stats.bound_report;
  report["per_iteration_ms"] = result.stats.iteration_ms;
  return report;
}

inline Json oracle_report(const Graph& g, const CliConfig& cfg) {
  CdsResult cds = exact_cds_bruteforce(g, cfg.k);
  Json report;
  report["k"] = cfg.k;
  report["density"] = cds.density;
  report["clique_count"] = count_json(cds.clique_count);
  report["vertices"] = cds.vertices;
  report["delta"] = count_json(max_local(count_cliques(g, cfg.k)));
  report["source"] = source_name(cds.source);
  return report;
}

inline Json bench_report(const Graph& g, const CliConfig& cfg) {
  const std::vector<std::size_t> checkpoints = bench_checkpoints(cfg.iterations);
  FrankWolfe engine(g, cfg.k, Variant::basic, PathOrdering::build, cfg.seed);
  Json runs = Json::array();
  for (Variant variant : {Variant::basic, Variant::simultaneous}) {
    for (PathOrdering ordering :
         {PathOrdering::build, PathOrdering::random, PathOrdering::depth,
          PathOrdering::degeneracy}) {
      engine.reset(variant, ordering, cfg.seed);
      Json trace = Json::array();
      std::size_t t = 0;
      for (std::size_t checkpoint : checkpoints) {
        for (; t < checkpoint; ++t) engine.step();
        WeightVector w = engine.weights();
        CdsResult cds = extract_cds(g, w, cfg.k);
        Json point;
        point["t"] = checkpoint;
        point["density"] = cds.density;
        point["max_weight"] = w.max();
        trace.push_back(std::move(point));
      }
      Json entry;
      entry["variant"] = variant_name(variant);
      entry["ordering"] = ordering_name(ordering);
      entry["seed"] = cfg.seed;
      entry["trace"] = std::move(trace);
      runs.push_back(std::move(entry));
    }
  }
  return runs;
}

inline void write_text(std::ostream& out, const Json& doc,
                       const std::string& prefix = "") {
  if (doc.is_object()) {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (it->is_structured()) {
        write_text(out, *it, key);
      } else {
        out << key << ": " << it->dump() << '\n';
      }
    }
  } else if (doc.is_array() && !doc.empty() && doc.front().is_structured()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      write_text(out, doc[i], prefix + "[" + std::to_string(i) + "]");
    }
  } else {
    out << prefix << ": " << doc.dump() << '\n';
  }
}

inline void add_common_options(CLI::App& cmd, CliConfig& cfg) {
  cmd.add_option("--input", cfg.input, "Edge-list file")->required();
  cmd.add_option("--k", cfg.k, "Clique size")->check(CLI::Range(2u, 64u));
  cmd.add_option("--iters", cfg.iterations, "Iteration budget T");
  const std::map<std::string, Variant> variants{
      {"basic", Variant::basic}, {"ccas", Variant::simultaneous}};
  cmd.add_option("--variant", cfg.variant, "basic|ccas")
      ->transform(CLI::CheckedTransformer(variants));
  const std::map<std::string, PathOrdering> orderings{
      {"build", PathOrdering::build},
      {"random", PathOrdering::random},
      {"depth", PathOrdering::depth},
      {"degeneracy", PathOrdering::degeneracy}};
  cmd.add_option("--order", cfg.ordering, "build|random|depth|degeneracy")
      ->transform(CLI::CheckedTransformer(orderings));
  cmd.add_option("--seed", cfg.seed, "Seed for the random ordering");
  const std::map<std::string, Format> formats{{"json", Format::json},
                                              {"text", Format::text}};
  cmd.add_option("--format", cfg.format, "json|text")
      ->transform(CLI::CheckedTransformer(formats));
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"k-clique counting and k-clique densest subgraph approximation"};
  app.require_subcommand(1);
  auto* count = app.add_subcommand("count", "Exact per-vertex k-clique counts");
  auto* densest = app.add_subcommand("densest", "Approximate k-clique densest subgraph");
  auto* oracle = app.add_subcommand("oracle", "Exact densest subgraph by exhaustive search");
  auto* bench = app.add_subcommand("bench", "Density traces for every variant and ordering");
  for (auto* cmd : {count, densest, oracle, bench}) add_common_options(*cmd, cfg);
  count->add_option("--dump-sct", cfg.dump_sct, "Write the clique tree as text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Graph g = load_edge_list(cfg.input);
    Json report;
    if (cfg.command == "count") {
      report = count_report(g, cfg);
    } else if (cfg.command == "densest") {
      report = densest_report(g, cfg);
    } else if (cfg.command == "oracle") {
      report = oracle_report(g, cfg);
    } else {
      report = bench_report(g, cfg);
    }
    if (cfg.format == Format::json) {
      out << report.dump(2) << '\n';
    } else {
      write_text(out, report);
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << cfg.input << ": " << e.what() << '\n';
    return kInput;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const OracleSizeError& e) {
    err << "error: " << e.what() << '\n';
    return kOracleSize;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace ccas::cli
