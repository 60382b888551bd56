#include "sgpd/experiment.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "sgpd/io.hpp"

namespace sgpd {

void ExperimentConfig::validate() const {
  if (topology_file.has_value() == gen_spec.has_value()) {
    throw ConfigError("exactly one of topology_file / gen_spec must be set");
  }
  if (algorithm != "sgp" && algorithm != "dpsgd") {
    throw ConfigError("algorithm must be 'sgp' or 'dpsgd'");
  }
  if (algorithm == "dpsgd" && use_design) {
    throw ConfigError("dpsgd needs symmetric mixing; designed directed graphs apply to sgp only");
  }
  if (!(eps > 0.0)) throw ConfigError("eps must be positive");
  if (max_iters < 1) throw ConfigError("max_iters must be positive");
  if (k && *k < 0) throw ConfigError("k must be non-negative");
  if (problem.d < 1) throw ConfigError("problem dimension must be positive");
}

namespace {

template <typename T>
void read_opt(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  if (j.contains("topology")) cfg.topology_file = j.at("topology").get<std::string>();
  if (j.contains("gen")) cfg.gen_spec = j.at("gen").get<std::string>();
  read_opt(j, "algorithm", cfg.algorithm);
  read_opt(j, "use_design", cfg.use_design);
  if (j.contains("k") && !j.at("k").is_null()) cfg.k = j.at("k").get<int>();
  read_opt(j, "k_max", cfg.k_max);
  read_opt(j, "skip_step4", cfg.skip_step4);
  if (j.contains("interference")) {
    cfg.interference_file = j.at("interference").get<std::string>();
  }
  if (j.contains("problem")) {
    const auto& p = j.at("problem");
    read_opt(p, "kind", cfg.problem.kind);
    read_opt(p, "d", cfg.problem.d);
    read_opt(p, "noise_sigma", cfg.problem.noise_sigma);
    read_opt(p, "zeta_scale", cfg.problem.zeta_scale);
    read_opt(p, "b_scale", cfg.problem.b_scale);
    read_opt(p, "a_spread", cfg.problem.a_spread);
    read_opt(p, "x0_scale", cfg.problem.x0_scale);
    read_opt(p, "samples", cfg.problem.samples);
  }
  if (j.contains("eta") && !j.at("eta").is_null()) cfg.eta = j.at("eta").get<double>();
  read_opt(j, "eps", cfg.eps);
  read_opt(j, "max_iters", cfg.max_iters);
  if (!j.contains("seed")) throw ConfigError("seed is required (no implicit entropy)");
  cfg.seed = j.at("seed").get<uint64_t>();
  cfg.validate();
  return cfg;
}

nlohmann::json experiment_config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  if (cfg.topology_file) j["topology"] = *cfg.topology_file;
  if (cfg.gen_spec) j["gen"] = *cfg.gen_spec;
  j["algorithm"] = cfg.algorithm;
  j["use_design"] = cfg.use_design;
  if (cfg.k) j["k"] = *cfg.k;
  j["k_max"] = cfg.k_max;
  j["skip_step4"] = cfg.skip_step4;
  if (cfg.interference_file) j["interference"] = *cfg.interference_file;
  j["problem"] = {{"kind", cfg.problem.kind},
                  {"d", cfg.problem.d},
                  {"noise_sigma", cfg.problem.noise_sigma},
                  {"zeta_scale", cfg.problem.zeta_scale},
                  {"b_scale", cfg.problem.b_scale},
                  {"a_spread", cfg.problem.a_spread},
                  {"x0_scale", cfg.problem.x0_scale},
                  {"samples", cfg.problem.samples}};
  if (cfg.eta) j["eta"] = *cfg.eta;
  j["eps"] = cfg.eps;
  j["max_iters"] = cfg.max_iters;
  j["seed"] = cfg.seed;
  return j;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config parse error in '" + path + "': " + e.what());
  }
  return experiment_config_from_json(j);
}

int full_base_tau(const BaseTopology& base, const UndirectedGraph* interference) {
  const UndirectedGraph& interf = interference ? *interference : base.undirected();
  Digraph full = base.full_digraph();
  return greedy_color(build_conflict_graph(full, base, interf)).tau();
}

PreparedExperiment prepare_experiment(const ExperimentConfig& cfg) {
  cfg.validate();

  BaseTopology base = [&] {
    if (cfg.topology_file) return load_topology(*cfg.topology_file);
    return realize(parse_generator_spec(*cfg.gen_spec, cfg.seed));
  }();
  std::string description = cfg.topology_file ? "file:" + *cfg.topology_file : *cfg.gen_spec;

  std::optional<UndirectedGraph> interference;
  if (cfg.interference_file) {
    std::ifstream in(*cfg.interference_file);
    if (!in) throw ConfigError("cannot open interference file '" + *cfg.interference_file + "'");
    interference = parse_edge_list(in);
  }
  const UndirectedGraph* interf_ptr = interference ? &*interference : nullptr;

  Algorithm algo = cfg.algorithm == "sgp" ? Algorithm::sgp : Algorithm::dpsgd;
  std::optional<DesignResult> design;
  if (algo == Algorithm::sgp && cfg.use_design) {
    if (cfg.k) {
      design = design_graph(base, *cfg.k, cfg.skip_step4, interf_ptr);
    } else {
      auto sweep = sweep_k(base, cfg.k_max, cfg.skip_step4, interf_ptr);
      design = std::move(sweep.points[sweep.k_star].result);
    }
  }

  MixingMatrix mixing = [&] {
    if (algo == Algorithm::dpsgd) return metropolis_hastings(base);
    if (design) return uniform_column_stochastic(design->g_a);
    return uniform_column_stochastic(base.full_digraph());
  }();
  int tau = design ? design->tau : full_base_tau(base, interf_ptr);

  auto problems = make_problems(base.node_count(), cfg.problem, cfg.seed);
  Eigen::MatrixXd x0 =
      make_initial_state(base.node_count(), cfg.problem.d, cfg.problem.x0_scale, cfg.seed);
  double eta = cfg.eta
                   ? *cfg.eta
                   : std::sqrt(static_cast<double>(base.node_count()) / cfg.max_iters);

  return PreparedExperiment{std::move(base), algo,     std::move(mixing), tau,
                            std::move(design), std::move(problems), std::move(x0),
                            eta,              std::move(description)};
}

Trace run_experiment(const ExperimentConfig& cfg) {
  PreparedExperiment prep = prepare_experiment(cfg);
  return run_loop(prep.algorithm, prep.mixing, prep.problems, prep.x0, prep.eta, cfg.eps,
                  cfg.max_iters, cfg.seed, prep.tau);
}

}  // namespace sgpd
