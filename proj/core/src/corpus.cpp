#include "gembench/corpus.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gembench/error.hpp"
#include "gembench/parallel.hpp"
#include "gembench/rng.hpp"
#include "serialization.hpp"

namespace gembench {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_number(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return {buf, res.ptr};
}

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n, const std::string& model) {
  if (!is_power_of_two(n) || n < 2) {
    throw ValidationError(model + " needs a power-of-two node count, got " + std::to_string(n));
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

std::size_t target_edges(std::size_t n, double avg_degree) {
  return static_cast<std::size_t>(std::llround(static_cast<double>(n) * avg_degree / 2.0));
}

// Rounds half-way cases up.
std::size_t nearest_integer(double x) { return static_cast<std::size_t>(std::floor(x + 0.5)); }

double realized_degree(const gen::GeneratorSpec& spec) {
  const auto g = gen::generate(spec);
  return 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_nodes());
}

gen::StochasticKronecker scale_initiator(const Initiator& base, std::size_t iterations, double scale) {
  gen::StochasticKronecker k;
  k.iterations = iterations;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) k.initiator[i][j] = std::min(1.0, base[i][j] * scale);
  }
  return k;
}

}  // namespace

CorpusPlan CorpusPlan::appendix_default() {
  CorpusPlan plan;
  plan.domains = {
      {DomainLabel::Kind::social,
       {"stochastic_block_model", "random_geometric", "waxman"},
       {{{0.95, 0.35}, {0.35, 0.75}}}},
      {DomainLabel::Kind::biology,
       {"watts_strogatz", "duplication_divergence", "random_hyperbolic"},
       {{{0.90, 0.55}, {0.55, 0.20}}}},
      {DomainLabel::Kind::internet,
       {"barabasi_albert", "powerlaw_cluster", "rmat"},
       {{{0.95, 0.50}, {0.50, 0.25}}}},
  };
  return plan;
}

gen::GeneratorSpec calibrate_generator(const std::string& generator, const DomainPlan& domain,
                                       const CorpusPlan& plan, std::size_t n, double avg_degree,
                                       std::uint64_t seed) {
  if (n < 2) throw ValidationError("corpus graphs need at least 2 nodes");
  if (!(avg_degree > 0.0) || avg_degree >= static_cast<double>(n - 1)) {
    throw ValidationError("average degree " + format_number(avg_degree) + " unsatisfiable on " +
                          std::to_string(n) + " nodes");
  }
  const std::string where = generator + " (n=" + std::to_string(n) + ", degree=" + format_number(avg_degree) + ")";
  gen::GeneratorSpec spec;
  spec.seed = seed;

  if (generator == "barabasi_albert") {
    spec.model = gen::BarabasiAlbert{n, std::max<std::size_t>(1, nearest_integer(avg_degree / 2.0))};
  } else if (generator == "powerlaw_cluster") {
    spec.model = gen::PowerlawCluster{n, std::max<std::size_t>(1, nearest_integer(avg_degree / 2.0)),
                                      plan.plc_triad_p};
  } else if (generator == "watts_strogatz") {
    const std::size_t k = std::max<std::size_t>(2, 2 * nearest_integer(avg_degree / 2.0));
    if (k >= n) throw ValidationError("degree unsatisfiable for " + where);
    spec.model = gen::WattsStrogatz{n, k, plan.ws_rewire_p};
  } else if (generator == "duplication_divergence") {
    // The realized degree grows with p_retain; bisect on this seed's realization.
    auto degree_at = [&](double p) {
      spec.model = gen::DuplicationDivergence{n, p};
      return realized_degree(spec);
    };
    if (degree_at(1.0) < avg_degree) throw ValidationError("degree unsatisfiable for " + where);
    double lo = 0.05;
    double hi = 1.0;
    double best = hi;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 30; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const double deg = degree_at(mid);
      if (std::abs(deg - avg_degree) < best_gap) {
        best_gap = std::abs(deg - avg_degree);
        best = mid;
      }
      (deg < avg_degree ? lo : hi) = mid;
    }
    spec.model = gen::DuplicationDivergence{n, best};
  } else if (generator == "random_geometric") {
    spec.model = gen::RandomGeometric{n, gen::geometric_radius_for_edges(n, target_edges(n, avg_degree), seed)};
  } else if (generator == "waxman") {
    double beta = plan.waxman_beta;
    double alpha = gen::waxman_alpha_for_edges(n, beta, 1.0, target_edges(n, avg_degree), seed);
    // Widen the interaction length until the required edge probability is attainable.
    for (int widen = 0; alpha > 1.0 && widen < 20; ++widen) {
      beta *= 2.0;
      alpha = gen::waxman_alpha_for_edges(n, beta, 1.0, target_edges(n, avg_degree), seed);
    }
    if (alpha > 1.0) throw ValidationError("degree unsatisfiable for " + where);
    gen::Waxman w;
    w.n = n;
    w.alpha = alpha;
    w.beta = beta;
    spec.model = w;
  } else if (generator == "stochastic_block_model") {
    const std::size_t blocks = std::clamp<std::size_t>(plan.sbm_blocks, 1, n);
    gen::StochasticBlockModel sbm;
    double within = 0.0;
    double total_sq = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t size = n / blocks + (b < n % blocks ? 1 : 0);
      sbm.block_sizes.push_back(size);
      within += static_cast<double>(size) * static_cast<double>(size - 1);
      total_sq += static_cast<double>(size) * static_cast<double>(size);
    }
    const double nn = static_cast<double>(n);
    const double across = nn * nn - total_sq;
    const double ratio = blocks == 1 ? 1.0 : plan.sbm_in_out_ratio;
    // E[avg degree] = (p_in * within + p_out * across) / n with p_in = ratio * p_out.
    sbm.p_out = avg_degree * nn / (ratio * within + across);
    sbm.p_in = ratio * sbm.p_out;
    if (blocks == 1) sbm.p_out = 0.0;
    if (sbm.p_in > 1.0) throw ValidationError("degree unsatisfiable for " + where);
    spec.model = sbm;
  } else if (generator == "rmat") {
    gen::RMat r;
    r.scale = log2_exact(n, "rmat");
    r.edge_count = target_edges(n, avg_degree);
    r.a = plan.rmat_probs[0];
    r.b = plan.rmat_probs[1];
    r.c = plan.rmat_probs[2];
    r.d = plan.rmat_probs[3];
    spec.model = r;
  } else if (generator == "random_hyperbolic") {
    spec.model = gen::RandomHyperbolic{
        n, gen::hyperbolic_radius_for_degree(n, plan.hyperbolic_alpha, avg_degree, seed), plan.hyperbolic_alpha};
  } else if (generator == "stochastic_kronecker") {
    const std::size_t k = log2_exact(n, "stochastic_kronecker");
    const auto& base = domain.kronecker_initiator;
    if (base[0][1] != base[1][0]) throw ValidationError("Kronecker initiator must be symmetric");
    const double max_entry = std::max({base[0][0], base[0][1], base[1][1]});
    if (!(max_entry > 0.0)) throw ValidationError("Kronecker initiator is all zero");
    const double wanted = static_cast<double>(n) * avg_degree / 2.0;
    double hi = 1.0 / max_entry;
    if (gen::kronecker_expected_edges(scale_initiator(base, k, hi)) < wanted) {
      throw ValidationError("degree unsatisfiable for " + where);
    }
    double lo = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (gen::kronecker_expected_edges(scale_initiator(base, k, mid)) < wanted ? lo : hi) = mid;
    }
    spec.model = scale_initiator(base, k, 0.5 * (lo + hi));
  } else {
    throw ValidationError("unknown generator '" + generator + "'");
  }
  gen::validate(spec);
  return spec;
}

std::vector<CorpusEntry> build_synthetic_corpus(const CorpusPlan& plan, std::uint64_t seed,
                                                std::size_t workers) {
  struct Job {
    std::string generator;
    const DomainPlan* domain;
    std::size_t n;
    double degree;
  };
  std::vector<Job> jobs;
  for (const auto& domain : plan.domains) {
    for (auto n : plan.sizes) {
      for (double degree : plan.degrees) {
        for (const auto& g : domain.generators) jobs.push_back({g, &domain, n, degree});
        if (plan.add_kronecker) jobs.push_back({"stochastic_kronecker", &domain, n, degree});
      }
    }
  }
  std::vector<CorpusEntry> corpus(jobs.size());
  parallel_for(jobs.size(), workers, [&](std::size_t i) {
    const auto& job = jobs[i];
    auto& entry = corpus[i];
    entry.domain = job.domain->domain;
    entry.target_n = job.n;
    entry.target_degree = job.degree;
    entry.name = entry.domain.name() + "-" + job.generator + "-n" + std::to_string(job.n) + "-d" +
                 format_number(job.degree);
    entry.spec = calibrate_generator(job.generator, *job.domain, plan, job.n, job.degree, stable_hash(seed, i));
    entry.graph = gen::generate(entry.spec);
  });
  return corpus;
}

// ---------------------------------------------------------------------------
// JSON

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

namespace gen {

void to_json(Json& j, const GeneratorSpec& spec) {
  j = Json::object();
  j["model"] = gen::model_name(spec.model);
  j["seed"] = spec.seed;
  std::visit(Overloaded{
                 [&](const gen::BarabasiAlbert& p) {
                   j["n"] = p.n;
                   j["m"] = p.m;
                 },
                 [&](const gen::PowerlawCluster& p) {
                   j["n"] = p.n;
                   j["m"] = p.m;
                   j["p"] = p.p;
                 },
                 [&](const gen::WattsStrogatz& p) {
                   j["n"] = p.n;
                   j["k"] = p.k;
                   j["p"] = p.p;
                 },
                 [&](const gen::DuplicationDivergence& p) {
                   j["n"] = p.n;
                   j["p_retain"] = p.p_retain;
                 },
                 [&](const gen::RandomGeometric& p) {
                   j["n"] = p.n;
                   j["radius"] = p.radius;
                 },
                 [&](const gen::Waxman& p) {
                   j["n"] = p.n;
                   j["alpha"] = p.alpha;
                   j["beta"] = p.beta;
                   j["domain_size"] = p.domain_size;
                   if (std::isfinite(p.radius)) j["radius"] = p.radius;
                 },
                 [&](const gen::StochasticBlockModel& p) {
                   j["block_sizes"] = p.block_sizes;
                   j["p_in"] = p.p_in;
                   j["p_out"] = p.p_out;
                 },
                 [&](const gen::RMat& p) {
                   j["scale"] = p.scale;
                   j["edge_count"] = p.edge_count;
                   j["a"] = p.a;
                   j["b"] = p.b;
                   j["c"] = p.c;
                   j["d"] = p.d;
                 },
                 [&](const gen::RandomHyperbolic& p) {
                   j["n"] = p.n;
                   j["radius"] = p.radius;
                   j["alpha"] = p.alpha;
                 },
                 [&](const gen::StochasticKronecker& p) {
                   j["initiator"] = p.initiator;
                   j["iterations"] = p.iterations;
                 },
             },
             spec.model);
}

void from_json(const Json& j, GeneratorSpec& spec) {
  const auto model = j.at("model").get<std::string>();
  spec.seed = j.value("seed", std::uint64_t{0});
  if (model == "barabasi_albert") {
    gen::BarabasiAlbert p;
    p.n = j.at("n");
    p.m = j.at("m");
    spec.model = p;
  } else if (model == "powerlaw_cluster") {
    gen::PowerlawCluster p;
    p.n = j.at("n");
    p.m = j.at("m");
    p.p = j.at("p");
    spec.model = p;
  } else if (model == "watts_strogatz") {
    gen::WattsStrogatz p;
    p.n = j.at("n");
    p.k = j.at("k");
    p.p = j.at("p");
    spec.model = p;
  } else if (model == "duplication_divergence") {
    gen::DuplicationDivergence p;
    p.n = j.at("n");
    p.p_retain = j.at("p_retain");
    spec.model = p;
  } else if (model == "random_geometric") {
    gen::RandomGeometric p;
    p.n = j.at("n");
    p.radius = j.at("radius");
    spec.model = p;
  } else if (model == "waxman") {
    gen::Waxman p;
    p.n = j.at("n");
    p.alpha = j.at("alpha");
    p.beta = j.at("beta");
    read_optional(j, "domain_size", p.domain_size);
    read_optional(j, "radius", p.radius);
    spec.model = p;
  } else if (model == "stochastic_block_model") {
    gen::StochasticBlockModel p;
    p.block_sizes = j.at("block_sizes").get<std::vector<std::size_t>>();
    p.p_in = j.at("p_in");
    p.p_out = j.at("p_out");
    spec.model = p;
  } else if (model == "rmat") {
    gen::RMat p;
    p.scale = j.at("scale");
    p.edge_count = j.at("edge_count");
    read_optional(j, "a", p.a);
    read_optional(j, "b", p.b);
    read_optional(j, "c", p.c);
    read_optional(j, "d", p.d);
    spec.model = p;
  } else if (model == "random_hyperbolic") {
    gen::RandomHyperbolic p;
    p.n = j.at("n");
    p.radius = j.at("radius");
    read_optional(j, "alpha", p.alpha);
    spec.model = p;
  } else if (model == "stochastic_kronecker") {
    gen::StochasticKronecker p;
    p.initiator = j.at("initiator").get<Initiator>();
    p.iterations = j.at("iterations");
    spec.model = p;
  } else {
    throw ValidationError("unknown generator model '" + model + "'");
  }
}

}  // namespace gen

std::string generator_spec_to_json(const gen::GeneratorSpec& spec) { return Json(spec).dump(); }

gen::GeneratorSpec generator_spec_from_json(const std::string& json_text) {
  try {
    return parse_json_text(json_text, "generator spec").get<gen::GeneratorSpec>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("generator spec: ") + e.what());
  }
}

CorpusPlan parse_corpus_plan(const std::string& json_text) {
  const Json j = parse_json_text(json_text, "corpus plan");
  CorpusPlan plan;
  try {
    read_optional(j, "sizes", plan.sizes);
    read_optional(j, "degrees", plan.degrees);
    read_optional(j, "add_kronecker", plan.add_kronecker);
    read_optional(j, "sbm_blocks", plan.sbm_blocks);
    read_optional(j, "sbm_in_out_ratio", plan.sbm_in_out_ratio);
    read_optional(j, "plc_triad_p", plan.plc_triad_p);
    read_optional(j, "ws_rewire_p", plan.ws_rewire_p);
    read_optional(j, "waxman_beta", plan.waxman_beta);
    read_optional(j, "hyperbolic_alpha", plan.hyperbolic_alpha);
    read_optional(j, "rmat_probs", plan.rmat_probs);
    const auto defaults = CorpusPlan::appendix_default();
    if (auto it = j.find("domains"); it != j.end()) {
      for (const auto& d : *it) {
        DomainPlan dp;
        dp.domain = DomainLabel::parse(d.at("domain").get<std::string>());
        for (const auto& known : defaults.domains) {
          if (known.domain == dp.domain) dp = known;
        }
        if (d.contains("generators")) dp.generators = d.at("generators").get<std::vector<std::string>>();
        read_optional(d, "kronecker_initiator", dp.kronecker_initiator);
        plan.domains.push_back(std::move(dp));
      }
    } else {
      plan.domains = defaults.domains;
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("corpus plan: ") + e.what());
  }
  if (plan.sizes.empty() || plan.degrees.empty()) throw ValidationError("corpus plan needs sizes and degrees");
  return plan;
}

CorpusPlan load_corpus_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open plan " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus_plan(ss.str());
}

std::string corpus_plan_to_json(const CorpusPlan& plan) {
  Json j;
  j["sizes"] = plan.sizes;
  j["degrees"] = plan.degrees;
  j["add_kronecker"] = plan.add_kronecker;
  j["sbm_blocks"] = plan.sbm_blocks;
  j["sbm_in_out_ratio"] = plan.sbm_in_out_ratio;
  j["plc_triad_p"] = plan.plc_triad_p;
  j["ws_rewire_p"] = plan.ws_rewire_p;
  j["waxman_beta"] = plan.waxman_beta;
  j["hyperbolic_alpha"] = plan.hyperbolic_alpha;
  j["rmat_probs"] = plan.rmat_probs;
  j["domains"] = Json::array();
  for (const auto& d : plan.domains) {
    j["domains"].push_back(
        {{"domain", d.domain.name()}, {"generators", d.generators}, {"kronecker_initiator", d.kronecker_initiator}});
  }
  return j.dump(2);
}

}  // namespace gembench
