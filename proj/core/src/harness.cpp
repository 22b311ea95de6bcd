#include "gembench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <optional>

#include <fmt/format.h>

#include "gembench/embeddings.hpp"
#include "gembench/error.hpp"
#include "gembench/heuristics.hpp"
#include "gembench/manifest.hpp"
#include "gembench/parallel.hpp"
#include "gembench/report.hpp"
#include "gembench/rng.hpp"
#include "gembench/split.hpp"
#include "serialization.hpp"

namespace gembench {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct TrialData {
  std::optional<EdgeSplit> split;
  eval::RandomBaseline baseline;
  std::uint64_t seed = 0;
  std::string error;
};

struct MethodOutcome {
  std::vector<RunRecord> records;
  std::vector<TaskFailure> failures;
};

}  // namespace

std::vector<GraphInput> resolve_corpus(const ExperimentConfig& config, std::size_t workers) {
  std::vector<GraphInput> corpus;
  if (config.manifest) {
    const auto manifest = load_manifest(*config.manifest);
    const auto base = config.manifest->parent_path();
    for (const auto& e : manifest.graphs) corpus.push_back({e.name, e.domain, load_manifest_graph(e, base)});
  } else {
    const CorpusPlan plan = config.plan ? *config.plan : CorpusPlan::appendix_default();
    for (auto& e : build_synthetic_corpus(plan, config.corpus_seed.value_or(config.seed), workers)) {
      corpus.push_back({std::move(e.name), e.domain, std::move(e.graph)});
    }
  }
  if (corpus.empty()) throw ValidationError("corpus is empty");
  return corpus;
}

std::uint64_t trial_seed(std::uint64_t master, const std::string& graph, std::size_t trial) {
  return stable_hash(master, hash_string(graph), trial);
}

std::uint64_t task_seed(std::uint64_t master, const std::string& graph, const std::string& method,
                        std::size_t dimension, std::size_t trial) {
  return stable_hash(master, hash_string(graph), hash_string(method), dimension, trial);
}

ExperimentResult run_experiment(const ExperimentConfig& config, const std::vector<GraphInput>& corpus,
                                std::size_t workers, const ProgressFn& progress) {
  validate(config);
  const std::size_t num_graphs = corpus.size();
  const std::size_t num_trials = config.trials;
  const std::size_t num_methods = config.methods.size();
  const std::size_t max_dim = *std::max_element(config.dimensions.begin(), config.dimensions.end());
  std::vector<std::size_t> dims = config.dimensions;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  std::vector<GraphStats> stats(num_graphs);
  std::vector<TrialData> trials(num_graphs * num_trials);
  parallel_for(trials.size(), workers, [&](std::size_t i) {
    const std::size_t g = i / num_trials;
    const std::size_t t = i % num_trials;
    if (t == 0) stats[g] = compute_stats(corpus[g].graph);
    auto& td = trials[i];
    td.seed = trial_seed(config.seed, corpus[g].name, t);
    try {
      td.split = split_edges(corpus[g].graph, config.hide_fraction, td.seed, config.preserve_connectivity);
      td.baseline = eval::random_baseline(*td.split, config.k, config.baseline_trials,
                                          stable_hash(td.seed, hash_string("random-baseline")), config.map_mode);
    } catch (const std::exception& e) {
      td.split.reset();
      td.error = e.what();
    }
  });

  const std::size_t total = num_graphs * num_trials * num_methods;
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  std::vector<MethodOutcome> outcomes(total);
  parallel_for(total, workers, [&](std::size_t i) {
    const std::size_t g = i / (num_trials * num_methods);
    const std::size_t t = (i / num_methods) % num_trials;
    const std::size_t mi = i % num_methods;
    const auto& method = config.methods[mi];
    const auto& td = trials[g * num_trials + t];
    const auto& input = corpus[g];
    auto& out = outcomes[i];
    auto fail = [&](std::size_t dim, const std::string& what) {
      out.failures.push_back({input.name, method, dim, t, what});
    };

    auto finish = [&] {
      const auto finished = ++done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(finished, total);
      }
    };
    if (!td.split) {
      fail(0, "split failed: " + td.error);
      finish();
      return;
    }
    const EdgeSplit& split = *td.split;

    RunRecord base;
    base.graph = input.name;
    base.domain = input.domain.name();
    base.n = stats[g].n;
    base.m = stats[g].m;
    base.density = stats[g].density;
    base.avg_degree = stats[g].avg_degree;
    base.method = method;
    base.trial = t;
    base.trial_seed = td.seed;
    base.hide_fraction = config.hide_fraction;
    base.hidden_edges = split.hidden.size();
    base.candidates = split.num_candidates();
    base.map_mode = eval::map_mode_name(config.map_mode);
    base.random_map = td.baseline.map;
    base.random_p_at_k = td.baseline.p_at_k;
    base.k = config.k;
    base.params = method_params_string(config, method);

    auto record = [&](std::size_t dim, const eval::LinkMetrics& m, double secs) {
      RunRecord r = base;
      r.dimension = dim;
      r.task_seed = task_seed(config.seed, input.name, method, dim, t);
      r.map = m.map;
      r.map_alt = m.map_alt;
      r.p_at_k = m.p_at_k;
      r.seconds = secs;
      out.records.push_back(std::move(r));
    };
    auto evaluate = [&](const embed::EmbeddingResult& e) {
      const auto it = config.decoders.find(method);
      const embed::EmbeddingScorer scorer(e, it != config.decoders.end() ? it->second : e.decoder);
      return eval::evaluate(scorer, split, config.k, config.map_mode);
    };

    if (const auto kind = parse_heuristic(method)) {
      try {
        const auto start = Clock::now();
        const HeuristicScorer scorer(*kind, split.train, stable_hash(td.seed, hash_string("random")));
        const auto m = eval::evaluate(scorer, split, config.k, config.map_mode);
        const double secs = seconds_since(start);
        for (auto d : dims) record(d, m, secs);
      } catch (const std::exception& e) {
        fail(0, e.what());
      }
      finish();
      return;
    }

    const auto kind = *embed::parse_method(method);
    std::optional<embed::ComponentEigenmaps> eigenmaps;
    std::optional<embed::HopeFactorization> hope;
    double shared_secs = 0.0;
    try {
      const auto start = Clock::now();
      if (kind == embed::Method::laplacian_eigenmaps) eigenmaps.emplace(split.train, max_dim);
      if (kind == embed::Method::hope) hope = embed::hope_factorize(split.train, config.hope, max_dim);
      shared_secs = seconds_since(start);
    } catch (const std::exception& e) {
      fail(0, e.what());
      finish();
      return;
    }
    for (auto d : dims) {
      try {
        const auto start = Clock::now();
        const auto seed = task_seed(config.seed, input.name, method, d, t);
        embed::EmbeddingResult e;
        switch (kind) {
          case embed::Method::laplacian_eigenmaps: e = eigenmaps->embed(d); break;
          case embed::Method::hope: e = embed::hope_from_factorization(*hope, d); break;
          case embed::Method::graph_factorization: e = embed::embed_graph_factorization(split.train, d, config.gf, seed); break;
          case embed::Method::sdne: e = embed::embed_sdne(split.train, d, config.sdne, seed); break;
        }
        const auto m = evaluate(e);
        record(d, m, seconds_since(start) + shared_secs);
      } catch (const std::exception& e) {
        fail(d, e.what());
      }
    }
    finish();
  });

  ExperimentResult result;
  for (auto& o : outcomes) {
    for (auto& r : o.records) result.records.push_back(std::move(r));
    for (auto& f : o.failures) result.failures.push_back(std::move(f));
  }
  // Outcomes are ordered (graph, trial, method); re-key to (graph, method, dimension, trial).
  auto position = [&](const std::vector<std::string>& v, const std::string& s) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), s) - v.begin());
  };
  std::vector<std::string> names;
  for (const auto& c : corpus) names.push_back(c.name);
  auto key = [&](const std::string& graph, const std::string& method, std::size_t dim, std::size_t trial) {
    return std::tuple(position(names, graph), position(config.methods, method), dim, trial);
  };
  std::stable_sort(result.records.begin(), result.records.end(), [&](const RunRecord& a, const RunRecord& b) {
    return key(a.graph, a.method, a.dimension, a.trial) < key(b.graph, b.method, b.dimension, b.trial);
  });
  std::stable_sort(result.failures.begin(), result.failures.end(), [&](const TaskFailure& a, const TaskFailure& b) {
    return key(a.graph, a.method, a.dimension, a.trial) < key(b.graph, b.method, b.dimension, b.trial);
  });
  return result;
}

std::vector<std::string> fully_failed_methods(const ExperimentConfig& config, const ExperimentResult& result) {
  std::vector<std::string> failed;
  for (const auto& m : config.methods) {
    const bool any = std::any_of(result.records.begin(), result.records.end(),
                                 [&](const RunRecord& r) { return r.method == m; });
    if (!any) failed.push_back(m);
  }
  return failed;
}

void write_run_outputs(const std::filesystem::path& out_dir, const ExperimentConfig& config,
                       const std::vector<GraphInput>& corpus, const ExperimentResult& result) {
  std::filesystem::create_directories(out_dir);
  auto open = [&](const char* name) {
    std::ofstream out(out_dir / name);
    if (!out) throw IoError("cannot write " + (out_dir / name).string());
    return out;
  };
  {
    auto out = open("config.json");
    out << config_to_json(config);
  }
  {
    Json graphs = Json::array();
    for (const auto& c : corpus) {
      const auto s = compute_stats(c.graph);
      const bool in_range = s.avg_degree >= config.density_range[0] && s.avg_degree <= config.density_range[1];
      graphs.push_back({{"name", c.name},
                        {"domain", c.domain.name()},
                        {"n", s.n},
                        {"m", s.m},
                        {"density", s.density},
                        {"avg_degree", s.avg_degree},
                        {"avg_clustering", s.avg_clustering},
                        {"diameter_lcc", s.diameter_lcc},
                        {"num_components", s.num_components},
                        {"in_density_range", in_range}});
    }
    auto out = open("corpus.json");
    out << Json{{"density_range", config.density_range}, {"graphs", graphs}}.dump(2) << "\n";
  }
  {
    auto out = open("results.csv");
    write_results_csv(result.records, out);
  }
  {
    auto out = open("timings.csv");
    out << "graph,method,dimension,trial,seconds\n";
    for (const auto& r : result.records) {
      out << fmt::format("{},{},{},{},{:.6f}\n", csv_field(r.graph), r.method, r.dimension, r.trial, r.seconds);
    }
  }
  {
    auto out = open("failures.csv");
    write_failures_csv(result.failures, out);
  }
  if (!result.records.empty()) {
    auto out = open("gfs_report.txt");
    out << gfs_report_text(result.records, result.failures.size());
  }
}

}  // namespace gembench
