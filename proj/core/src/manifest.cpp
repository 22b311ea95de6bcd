#include "gembench/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gembench/error.hpp"
#include "gembench/graph_io.hpp"
#include "gembench/rng.hpp"
#include "serialization.hpp"

namespace gembench {
namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

Json stats_to_json(const GraphStats& s) {
  return {{"n", s.n},
          {"m", s.m},
          {"density", s.density},
          {"avg_degree", s.avg_degree},
          {"diameter_lcc", s.diameter_lcc},
          {"avg_clustering", s.avg_clustering},
          {"num_components", s.num_components}};
}

GraphStats stats_from_json(const Json& j) {
  GraphStats s;
  s.n = j.at("n");
  s.m = j.at("m");
  read_optional(j, "density", s.density);
  read_optional(j, "avg_degree", s.avg_degree);
  read_optional(j, "diameter_lcc", s.diameter_lcc);
  read_optional(j, "avg_clustering", s.avg_clustering);
  read_optional(j, "num_components", s.num_components);
  return s;
}

}  // namespace

Manifest parse_manifest(const std::string& json_text) {
  const Json j = parse_json_text(json_text, "manifest");
  Manifest m;
  try {
    std::set<std::string> names;
    for (const auto& g : j.at("graphs")) {
      ManifestEntry e;
      e.path = g.at("path").get<std::string>();
      e.name = g.value("name", e.path.stem().string());
      e.domain = DomainLabel::parse(g.value("domain", std::string("other")));
      if (g.contains("generator")) e.generator = g.at("generator").get<gen::GeneratorSpec>();
      if (g.contains("stats")) e.stats = stats_from_json(g.at("stats"));
      if (g.contains("sampled_from")) e.sampled_from = g.at("sampled_from").get<std::size_t>();
      if (e.name.empty()) throw ValidationError("manifest entry with empty name");
      if (!names.insert(e.name).second) throw ValidationError("duplicate graph name '" + e.name + "' in manifest");
      m.graphs.push_back(std::move(e));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) { return parse_manifest(read_text(path)); }

std::string manifest_to_json(const Manifest& manifest) {
  Json graphs = Json::array();
  for (const auto& e : manifest.graphs) {
    Json g = {{"name", e.name}, {"path", e.path.generic_string()}, {"domain", e.domain.name()}};
    if (e.generator) g["generator"] = *e.generator;
    if (e.stats) g["stats"] = stats_to_json(*e.stats);
    if (e.sampled_from) g["sampled_from"] = *e.sampled_from;
    graphs.push_back(std::move(g));
  }
  return Json{{"graphs", graphs}}.dump(2) + "\n";
}

void save_manifest(const Manifest& manifest, const std::filesystem::path& path) {
  write_text(path, manifest_to_json(manifest));
}

Graph load_manifest_graph(const ManifestEntry& entry, const std::filesystem::path& base_dir) {
  const auto path = entry.path.is_absolute() ? entry.path : base_dir / entry.path;
  std::optional<std::size_t> hint;
  if (entry.stats) hint = entry.stats->n;
  return load_edge_list(path, hint);
}

Manifest write_corpus(const std::vector<CorpusEntry>& corpus, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir / "graphs");
  Manifest m;
  for (const auto& c : corpus) {
    ManifestEntry e;
    e.name = c.name;
    e.path = std::filesystem::path("graphs") / (c.name + ".edges");
    e.domain = c.domain;
    e.generator = c.spec;
    e.stats = compute_stats(c.graph);
    save_edge_list(c.graph, out_dir / e.path);
    m.graphs.push_back(std::move(e));
  }
  save_manifest(m, out_dir / "manifest.json");
  return m;
}

Manifest ingest_corpus(const std::filesystem::path& data_dir, const std::filesystem::path& manifest_path,
                       const IngestOptions& options) {
  auto manifest = load_manifest(manifest_path);
  const auto out_dir = options.out_dir.empty() ? data_dir : options.out_dir;
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < manifest.graphs.size(); ++i) {
    auto& e = manifest.graphs[i];
    Graph g = load_manifest_graph(e, data_dir);
    if (g.num_nodes() == 0) throw ValidationError("graph '" + e.name + "' is empty");
    if (options.max_nodes && g.num_nodes() > *options.max_nodes) {
      e.sampled_from = g.num_nodes();
      g = gen::isrw_sample(g, *options.max_nodes, stable_hash(options.seed, hash_string(e.name)));
      e.path = std::filesystem::path("sampled") / (e.name + ".edges");
      std::filesystem::create_directories(out_dir / "sampled");
      save_edge_list(g, out_dir / e.path);
    } else if (!e.path.is_absolute()) {
      e.path = std::filesystem::proximate(data_dir / e.path, out_dir);
    }
    e.stats = compute_stats(g);
  }
  save_manifest(manifest, out_dir / "ingested.json");
  return manifest;
}

}  // namespace gembench
