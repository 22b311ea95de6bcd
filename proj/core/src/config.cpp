#include "gembench/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "gembench/error.hpp"
#include "gembench/heuristics.hpp"
#include "serialization.hpp"

namespace gembench {
namespace {

std::uint64_t parse_u64(const std::string& text, const char* what) {
  char* end = nullptr;
  errno = 0;
  const auto v = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || errno != 0 || text.front() == '-') {
    throw ValidationError(fmt::format("{} must be a non-negative integer, got '{}'", what, text));
  }
  return v;
}

bool is_power_of_two(std::size_t v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

bool is_embedding_method(const std::string& id) { return embed::parse_method(id).has_value(); }
bool is_heuristic_method(const std::string& id) { return parse_heuristic(id).has_value(); }

void validate(const ExperimentConfig& c) {
  if (c.manifest && c.plan) throw ValidationError("config: give either a manifest or a plan, not both");
  if (c.methods.empty()) throw ValidationError("config: no methods listed");
  std::set<std::string> seen;
  for (const auto& m : c.methods) {
    if (!is_embedding_method(m) && !is_heuristic_method(m)) {
      throw ValidationError(fmt::format("config: unknown method '{}'", m));
    }
    if (!seen.insert(m).second) throw ValidationError(fmt::format("config: method '{}' listed twice", m));
  }
  if (c.dimensions.empty()) throw ValidationError("config: no dimensions listed");
  for (auto d : c.dimensions) {
    if (!is_power_of_two(d)) throw ValidationError(fmt::format("config: dimension {} is not a power of two", d));
  }
  if (!(c.hide_fraction >= 0.0 && c.hide_fraction < 1.0)) throw ValidationError("config: hide_fraction must lie in [0, 1)");
  if (c.trials == 0) throw ValidationError("config: trials must be at least 1");
  if (c.k == 0) throw ValidationError("config: k must be at least 1");
  if (c.baseline_trials == 0) throw ValidationError("config: baseline_trials must be at least 1");
  if (c.density_range[0] > c.density_range[1]) throw ValidationError("config: density_range is reversed");
  for (const auto& [method, decoder] : c.decoders) {
    if (!is_embedding_method(method)) throw ValidationError(fmt::format("config: decoder override for non-embedding method '{}'", method));
    if (decoder == embed::Decoder::reconstruction && method != "sdne") {
      throw ValidationError("config: the reconstruction decoder applies to sdne only");
    }
  }
  embed::validate(c.gf);
  embed::validate(c.hope);
  embed::validate(c.sdne);
}

ExperimentConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir) {
  const Json j = parse_json_text(json_text, "config");
  ExperimentConfig c;
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
  };
  try {
    if (auto it = j.find("corpus"); it != j.end()) {
      const Json& corpus = *it;
      if (corpus.contains("manifest")) c.manifest = resolve(corpus.at("manifest").get<std::string>());
      if (auto p = corpus.find("plan"); p != corpus.end()) {
        if (p->is_string()) {
          c.plan = load_corpus_plan(resolve(p->get<std::string>()));
        } else {
          c.plan = parse_corpus_plan(p->dump());
        }
      }
      if (corpus.contains("seed")) c.corpus_seed = corpus.at("seed").get<std::uint64_t>();
    }
    read_optional(j, "methods", c.methods);
    read_optional(j, "dimensions", c.dimensions);
    read_optional(j, "size_bins", c.size_bins);
    read_optional(j, "degree_bins", c.degree_bins);
    read_optional(j, "density_range", c.density_range);
    read_optional(j, "hide_fraction", c.hide_fraction);
    read_optional(j, "preserve_connectivity", c.preserve_connectivity);
    read_optional(j, "trials", c.trials);
    read_optional(j, "seed", c.seed);
    read_optional(j, "k", c.k);
    read_optional(j, "baseline_trials", c.baseline_trials);
    if (j.contains("map_mode")) c.map_mode = eval::parse_map_mode(j.at("map_mode").get<std::string>());
    if (auto it = j.find("gf"); it != j.end()) {
      read_optional(*it, "learning_rate", c.gf.learning_rate);
      read_optional(*it, "epochs", c.gf.epochs);
      read_optional(*it, "reg_lambda", c.gf.reg_lambda);
      read_optional(*it, "init_scale", c.gf.init_scale);
      read_optional(*it, "lr_halving_period", c.gf.lr_halving_period);
    }
    if (auto it = j.find("hope"); it != j.end()) read_optional(*it, "beta_factor", c.hope.beta_factor);
    if (auto it = j.find("sdne"); it != j.end()) {
      read_optional(*it, "hidden_layers", c.sdne.hidden_layers);
      read_optional(*it, "alpha", c.sdne.alpha);
      read_optional(*it, "beta_penalty", c.sdne.beta_penalty);
      read_optional(*it, "reg_nu", c.sdne.reg_nu);
      read_optional(*it, "learning_rate", c.sdne.learning_rate);
      read_optional(*it, "epochs", c.sdne.epochs);
      read_optional(*it, "batch_size", c.sdne.batch_size);
      read_optional(*it, "full_batch_max_nodes", c.sdne.full_batch_max_nodes);
    }
    if (auto it = j.find("decoders"); it != j.end()) {
      for (const auto& [method, name] : it->items()) {
        const auto d = embed::parse_decoder(name.get<std::string>());
        if (!d) throw ValidationError(fmt::format("config: unknown decoder '{}'", name.get<std::string>()));
        c.decoders[method] = *d;
      }
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

std::string config_to_json(const ExperimentConfig& c) {
  Json j;
  Json corpus = Json::object();
  if (c.manifest) corpus["manifest"] = c.manifest->generic_string();
  if (c.plan) corpus["plan"] = Json::parse(corpus_plan_to_json(*c.plan));
  if (c.corpus_seed) corpus["seed"] = *c.corpus_seed;
  j["corpus"] = corpus;
  j["methods"] = c.methods;
  j["dimensions"] = c.dimensions;
  j["size_bins"] = c.size_bins;
  j["degree_bins"] = c.degree_bins;
  j["density_range"] = c.density_range;
  j["hide_fraction"] = c.hide_fraction;
  j["preserve_connectivity"] = c.preserve_connectivity;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["k"] = c.k;
  j["map_mode"] = eval::map_mode_name(c.map_mode);
  j["baseline_trials"] = c.baseline_trials;
  j["gf"] = {{"learning_rate", c.gf.learning_rate},
             {"epochs", c.gf.epochs},
             {"reg_lambda", c.gf.reg_lambda},
             {"init_scale", c.gf.init_scale},
             {"lr_halving_period", c.gf.lr_halving_period}};
  j["hope"] = {{"beta_factor", c.hope.beta_factor}};
  j["sdne"] = {{"hidden_layers", c.sdne.hidden_layers},
               {"alpha", c.sdne.alpha},
               {"beta_penalty", c.sdne.beta_penalty},
               {"reg_nu", c.sdne.reg_nu},
               {"learning_rate", c.sdne.learning_rate},
               {"epochs", c.sdne.epochs},
               {"batch_size", c.sdne.batch_size},
               {"full_batch_max_nodes", c.sdne.full_batch_max_nodes}};
  Json decoders = Json::object();
  for (const auto& [m, d] : c.decoders) decoders[m] = embed::decoder_name(d);
  j["decoders"] = decoders;
  return j.dump(2) + "\n";
}

void apply_env_overrides(ExperimentConfig& config) {
  if (const char* s = std::getenv("GEMBENCH_SEED"); s && *s) config.seed = parse_u64(s, "GEMBENCH_SEED");
}

std::size_t workers_from_env(std::size_t requested) {
  if (const char* s = std::getenv("GEMBENCH_WORKERS"); s && *s) {
    return static_cast<std::size_t>(parse_u64(s, "GEMBENCH_WORKERS"));
  }
  return requested;
}

std::string method_params_string(const ExperimentConfig& c, const std::string& method) {
  auto decoder = [&](embed::Method m) {
    const auto it = c.decoders.find(method);
    return embed::decoder_name(it != c.decoders.end() ? it->second : embed::default_decoder(m));
  };
  const auto m = embed::parse_method(method);
  if (!m) return "";
  switch (*m) {
    case embed::Method::laplacian_eigenmaps:
      return fmt::format("decoder={}", decoder(*m));
    case embed::Method::graph_factorization:
      return fmt::format("learning_rate={};epochs={};reg_lambda={};init_scale={};lr_halving_period={};decoder={}",
                         c.gf.learning_rate, c.gf.epochs, c.gf.reg_lambda, c.gf.init_scale, c.gf.lr_halving_period,
                         decoder(*m));
    case embed::Method::hope:
      return fmt::format("beta_factor={};decoder={}", c.hope.beta_factor, decoder(*m));
    case embed::Method::sdne:
      return fmt::format(
          "hidden_layers={};alpha={};beta_penalty={};reg_nu={};learning_rate={};epochs={};batch_size={};decoder={}",
          fmt::join(c.sdne.hidden_layers, "x"), c.sdne.alpha, c.sdne.beta_penalty, c.sdne.reg_nu,
          c.sdne.learning_rate, c.sdne.epochs, c.sdne.batch_size, decoder(*m));
  }
  return "";
}

}  // namespace gembench
