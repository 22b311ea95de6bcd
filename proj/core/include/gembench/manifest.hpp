#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gembench/corpus.hpp"
#include "gembench/generators.hpp"
#include "gembench/graph.hpp"

namespace gembench {

/// One graph of a corpus directory. `path` is relative to the manifest's directory unless
/// absolute.
struct ManifestEntry {
  std::string name;
  std::filesystem::path path;
  DomainLabel domain;
  std::optional<gen::GeneratorSpec> generator;
  std::optional<GraphStats> stats;
  /// Node count before ISRW sampling, when the graph was sampled on ingest.
  std::optional<std::size_t> sampled_from;
};

/// JSON document {"graphs": [{"path", "name", "domain", "generator"?, "stats"?}, ...]}.
struct Manifest {
  std::vector<ManifestEntry> graphs;
};

Manifest parse_manifest(const std::string& json_text);
Manifest load_manifest(const std::filesystem::path& path);
std::string manifest_to_json(const Manifest& manifest);
void save_manifest(const Manifest& manifest, const std::filesystem::path& path);

/// Loads one entry's graph, resolving a relative path against base_dir.
Graph load_manifest_graph(const ManifestEntry& entry, const std::filesystem::path& base_dir);

/// Writes one edge list per entry under out_dir/graphs plus out_dir/manifest.json.
Manifest write_corpus(const std::vector<CorpusEntry>& corpus, const std::filesystem::path& out_dir);

struct IngestOptions {
  /// Graphs above this size are reduced by ISRW sampling.
  std::optional<std::size_t> max_nodes;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;  ///< defaults to the data directory
};

/// Validates every manifest entry against the files in data_dir, computes structural
/// statistics, optionally samples large graphs, and writes out_dir/ingested.json.
/// Returns the enriched manifest.
Manifest ingest_corpus(const std::filesystem::path& data_dir, const std::filesystem::path& manifest_path,
                       const IngestOptions& options);

}  // namespace gembench
