#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gembench/config.hpp"
#include "gembench/corpus.hpp"
#include "gembench/embeddings.hpp"
#include "gembench/error.hpp"
#include "gembench/graph_io.hpp"
#include "gembench/harness.hpp"
#include "gembench/manifest.hpp"
#include "gembench/report.hpp"
#include "gembench/rng.hpp"

namespace fs = std::filesystem;
using namespace gembench;

namespace {

constexpr int exit_failed_method = 2;

int cmd_generate(const fs::path& plan_path, const fs::path& out, std::uint64_t seed, std::size_t workers) {
  const auto plan = plan_path.empty() ? CorpusPlan::appendix_default() : load_corpus_plan(plan_path);
  const auto corpus = build_synthetic_corpus(plan, seed, workers);
  const auto manifest = write_corpus(corpus, out);
  std::ofstream(out / "plan.json") << corpus_plan_to_json(plan) << "\n";
  fmt::print("wrote {} graphs to {}\n", manifest.graphs.size(), out.string());
  return 0;
}

int cmd_ingest(const fs::path& dir, const fs::path& manifest_path, const IngestOptions& options) {
  const auto manifest = ingest_corpus(dir, manifest_path, options);
  const auto out = options.out_dir.empty() ? dir : options.out_dir;
  for (const auto& e : manifest.graphs) {
    fmt::print("{:<40} {:<14} n={:<6} m={:<7} avg_degree={:.3f}{}\n", e.name, e.domain.name(), e.stats->n, e.stats->m,
               e.stats->avg_degree, e.sampled_from ? fmt::format(" (sampled from {})", *e.sampled_from) : "");
  }
  fmt::print("wrote {}\n", (out / "ingested.json").string());
  return 0;
}

int cmd_run(const fs::path& config_path, const fs::path& out, std::size_t workers, bool quiet) {
  auto config = load_config(config_path);
  apply_env_overrides(config);
  workers = workers_from_env(workers);
  const auto corpus = resolve_corpus(config, workers);
  if (!quiet) fmt::print(stderr, "corpus: {} graphs, {} methods, {} dimensions\n", corpus.size(), config.methods.size(), config.dimensions.size());
  ProgressFn progress;
  if (!quiet) {
    progress = [](std::size_t done, std::size_t total) { fmt::print(stderr, "\r{}/{} tasks", done, total); };
  }
  const auto result = run_experiment(config, corpus, workers, progress);
  if (!quiet) fmt::print(stderr, "\n");
  write_run_outputs(out, config, corpus, result);
  fmt::print("{} records, {} failed tasks; results in {}\n", result.records.size(), result.failures.size(), out.string());

  const auto failed = fully_failed_methods(config, result);
  if (!failed.empty()) {
    fmt::print(stderr, "aborting: every task failed for:\n");
    for (const auto& m : failed) {
      const auto it = std::find_if(result.failures.begin(), result.failures.end(),
                                   [&](const TaskFailure& f) { return f.method == m; });
      fmt::print(stderr, "  {}: {}\n", m, it != result.failures.end() ? it->error : "no tasks ran");
    }
    return exit_failed_method;
  }
  return 0;
}

int cmd_report(const fs::path& dir, const fs::path& out) {
  const auto records = read_results_csv(dir / "results.csv");
  std::size_t failures = 0;
  if (fs::exists(dir / "failures.csv")) failures = read_failures_csv(dir / "failures.csv").size();
  const auto text = gfs_report_text(records, failures);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out) << text;
  }
  return 0;
}

int cmd_plot(const fs::path& dir, const std::string& metric_name, const fs::path& out) {
  const auto records = read_results_csv(dir / "results.csv");
  PlotOptions options;
  if (fs::exists(dir / "config.json")) {
    const auto config = load_config(dir / "config.json");
    options.size_bins = config.size_bins;
    options.degree_bins = config.degree_bins;
    options.density_range = config.density_range;
  }
  const auto metric = metric_name == "map" ? eval::Metric::map : eval::Metric::p_at_k;
  const auto target = out.empty() ? dir / "plots" / metric_name : out;
  const auto files = write_plot_series(plot_series(records, metric, options), target);
  fmt::print("wrote {} series to {}\n", files.size(), target.string());
  return 0;
}

int cmd_embed(const fs::path& graph_path, const std::string& method, std::size_t dim, std::uint64_t seed,
              const fs::path& out) {
  const auto graph = load_edge_list(graph_path);
  const ExperimentConfig defaults;
  embed::EmbeddingResult e;
  switch (*embed::parse_method(method)) {
    case embed::Method::laplacian_eigenmaps: e = embed::ComponentEigenmaps(graph, dim).embed(dim); break;
    case embed::Method::graph_factorization: e = embed::embed_graph_factorization(graph, dim, defaults.gf, seed); break;
    case embed::Method::hope: e = embed::embed_hope(graph, dim, defaults.hope); break;
    case embed::Method::sdne: e = embed::embed_sdne(graph, dim, defaults.sdne, seed); break;
  }
  embed::save_embedding(e, out);
  fmt::print("wrote {} x {} embedding to {}\n", e.y.rows(), e.y.cols(), out.string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph embedding link-prediction benchmark"};
  app.require_subcommand(1);

  fs::path plan, out, dir, manifest, config, graph;
  std::uint64_t seed = 42;
  std::size_t workers = 1;
  std::size_t max_nodes = 0;
  std::size_t dim = 16;
  std::string metric = "map";
  std::string method = "hope";
  bool quiet = false;

  auto* gen = app.add_subcommand("generate", "Build the synthetic corpus and write edge lists plus a manifest");
  gen->add_option("--plan", plan, "Corpus plan (JSON); the built-in domain table when omitted");
  gen->add_option("--out", out, "Output directory")->required();
  gen->add_option("--seed", seed, "Master seed");
  gen->add_option("--workers", workers, "Worker threads (0 = all cores)");

  auto* ingest = app.add_subcommand("ingest", "Validate a manifest of edge lists and compute graph statistics");
  ingest->add_option("--dir", dir, "Directory holding the edge lists")->required();
  ingest->add_option("--manifest", manifest, "Manifest listing path, name and domain per graph")->required();
  ingest->add_option("--max-nodes", max_nodes, "Reduce larger graphs by random-walk induced sampling");
  ingest->add_option("--seed", seed, "Sampling seed");
  ingest->add_option("--out", out, "Where to write ingested.json (default: --dir)");

  auto* run = app.add_subcommand("run", "Run the experiment grid");
  run->add_option("--config", config, "Experiment config (JSON)")->required();
  run->add_option("--out", out, "Run directory")->required();
  run->add_option("--workers", workers, "Worker threads (0 = all cores); GEMBENCH_WORKERS overrides");
  run->add_flag("--quiet", quiet, "No progress output");

  auto* report = app.add_subcommand("report", "Recompute the GFS report from a run's results table");
  report->add_option("--records", dir, "Run directory")->required();
  report->add_option("--out", out, "Write the report here instead of stdout");

  auto* plot = app.add_subcommand("plot-data", "Emit per-panel series of a metric against dimension");
  plot->add_option("--records", dir, "Run directory")->required();
  plot->add_option("--metric", metric, "map or p_at_k")->check(CLI::IsMember({"map", "p_at_k"}));
  plot->add_option("--out", out, "Output directory (default: <records>/plots/<metric>)");

  auto* emb = app.add_subcommand("embed", "Embed one edge list and write the coordinate matrix");
  emb->add_option("--graph", graph, "Edge list")->required();
  emb->add_option("--method", method, "lap_eigen, gf, hope or sdne")
      ->check(CLI::IsMember({"lap_eigen", "gf", "hope", "sdne"}));
  emb->add_option("--dim", dim, "Embedding dimension");
  emb->add_option("--seed", seed, "Seed");
  emb->add_option("--out", out, "Output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_generate(plan, out, seed, workers);
    if (*ingest) {
      IngestOptions options;
      if (max_nodes > 0) options.max_nodes = max_nodes;
      options.seed = seed;
      options.out_dir = out;
      return cmd_ingest(dir, manifest, options);
    }
    if (*run) return cmd_run(config, out, workers, quiet);
    if (*report) return cmd_report(dir, out);
    if (*plot) return cmd_plot(dir, metric, out);
    if (*emb) return cmd_embed(graph, method, dim, seed, out);
  } catch (const ParseError& e) {
    fmt::print(stderr, "parse error: {}\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
