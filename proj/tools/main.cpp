// Command-line front end: topology generation, communication graph design,
// scheduling, simulation, K sweeps, and the verification oracle suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sgpd/design.hpp"
#include "sgpd/experiment.hpp"
#include "sgpd/generators.hpp"
#include "sgpd/io.hpp"
#include "sgpd/theory.hpp"
#include "sgpd/verify.hpp"

namespace fs = std::filesystem;
using namespace sgpd;

namespace {

struct TopologyArgs {
  std::string file;
  std::string gen;
  uint64_t seed = 0;

  BaseTopology resolve() const {
    if (!file.empty() && !gen.empty()) {
      throw ConfigError("pass either --topology or --gen, not both");
    }
    if (!file.empty()) return load_topology(file);
    if (!gen.empty()) return realize(parse_generator_spec(gen, seed));
    throw ConfigError("a topology source is required (--topology or --gen)");
  }
  std::string description() const { return !file.empty() ? "file:" + file : gen; }
};

void add_topology_flags(CLI::App* cmd, TopologyArgs& args) {
  cmd->add_option("--topology", args.file, "edge-list topology file");
  cmd->add_option("--gen", args.gen,
                  "generator spec: windmill:M,K | rg:N,RADIUS | gnp:N,P | file:PATH");
  cmd->add_option("--seed", args.seed, "seed for generated topologies");
}

fs::path ensure_out_dir(const std::string& out) {
  fs::path dir(out);
  fs::create_directories(dir);
  return dir;
}

std::optional<UndirectedGraph> load_interference(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open interference file '" + path + "'");
  return parse_edge_list(in);
}

nlohmann::json design_report(const DesignResult& r, const std::string& topo,
                             uint64_t seed) {
  nlohmann::json j = design_to_json(r, topo);
  j["seed"] = seed;
  auto cc = convergence_constants(r.min_mixing_weight, std::max(1, r.diameter), 1);
  j["convergence"] = {{"c", cc.c}, {"log_c", cc.log_c}, {"q", cc.q}};
  return j;
}

int cmd_generate(const TopologyArgs& topo, const std::string& out) {
  BaseTopology base = topo.resolve();
  fs::path dir = ensure_out_dir(out);
  fs::path file = dir / "topology.txt";
  save_edge_list(base.undirected(), file.string());
  std::cout << "wrote " << file.string() << ": " << base.node_count() << " nodes, "
            << base.undirected().edge_count() << " undirected edges\n";
  return 0;
}

int cmd_design(const TopologyArgs& topo, std::optional<int> k, int k_max, bool skip_step4,
               const std::string& interference_path, const std::string& out) {
  BaseTopology base = topo.resolve();
  auto interference = load_interference(interference_path);
  const UndirectedGraph* interf = interference ? &*interference : nullptr;

  DesignResult result = [&] {
    if (k) return design_graph(base, *k, skip_step4, interf);
    auto sweep = sweep_k(base, k_max, skip_step4, interf);
    std::cout << "sweep over K=0.." << sweep.points.back().k << " picked K*="
              << sweep.k_star << "\n";
    return std::move(sweep.points[sweep.k_star].result);
  }();

  fs::path dir = ensure_out_dir(out);
  {
    std::ofstream f(dir / "design.json");
    f << design_report(result, topo.description(), topo.seed).dump(2) << "\n";
  }
  {
    std::ofstream f(dir / "schedule.json");
    f << schedule_to_json(result.schedule).dump(2) << "\n";
  }
  save_mixing_matrix(uniform_column_stochastic(result.g_a), (dir / "mixing.txt").string());

  std::cout << "design: k=" << result.k << " links=" << result.g_a.link_count()
            << " tau=" << result.tau << " diameter=" << result.diameter
            << " max_out=" << result.max_out << " max_in=" << result.max_in
            << " delta=" << result.min_mixing_weight
            << " log_objective=" << result.log_design_objective << "\n";
  std::cout << "wrote " << (dir / "design.json").string() << ", "
            << (dir / "schedule.json").string() << ", " << (dir / "mixing.txt").string()
            << "\n";
  return 0;
}

int cmd_schedule(const TopologyArgs& topo, const std::string& design_path,
                 const std::string& interference_path, const std::string& out) {
  BaseTopology base = topo.resolve();
  auto interference = load_interference(interference_path);
  const UndirectedGraph& interf = interference ? *interference : base.undirected();

  Digraph g_a = base.full_digraph();
  if (!design_path.empty()) {
    std::ifstream in(design_path);
    if (!in) throw ConfigError("cannot open design file '" + design_path + "'");
    nlohmann::json j;
    in >> j;
    g_a = links_from_design_json(j);
  }
  Schedule s = greedy_color(build_conflict_graph(g_a, base, interf));

  fs::path dir = ensure_out_dir(out);
  std::ofstream f(dir / "schedule.json");
  f << schedule_to_json(s).dump(2) << "\n";
  std::cout << "scheduled " << g_a.link_count() << " links into " << s.tau()
            << " slots; wrote " << (dir / "schedule.json").string() << "\n";
  return 0;
}

int cmd_sweep(const TopologyArgs& topo, int k_max, bool skip_step4,
              const std::string& interference_path, const std::string& out) {
  BaseTopology base = topo.resolve();
  auto interference = load_interference(interference_path);
  auto sweep = sweep_k(base, k_max, skip_step4, interference ? &*interference : nullptr);

  fs::path dir = ensure_out_dir(out);
  std::ofstream f(dir / "sweep.csv");
  f << "k,links,tau,diameter,max_out,max_in,delta,log_design_objective\n";
  f << std::setprecision(17);
  for (const auto& p : sweep.points) {
    const auto& r = p.result;
    f << p.k << "," << r.g_a.link_count() << "," << r.tau << "," << r.diameter << ","
      << r.max_out << "," << r.max_in << "," << r.min_mixing_weight << ","
      << r.log_design_objective << "\n";
  }
  std::cout << "K*=" << sweep.k_star << " (log objective "
            << sweep.points[sweep.k_star].result.log_design_objective << "); wrote "
            << (dir / "sweep.csv").string() << "\n";
  return 0;
}

void write_summary(const fs::path& dir, const std::string& name,
                   const PreparedExperiment& prep, const ExperimentConfig& cfg,
                   const Trace& trace) {
  nlohmann::json j;
  j["arm"] = name;
  j["topology"] = prep.topology_description;
  j["algorithm"] = cfg.algorithm;
  j["tau"] = prep.tau;
  j["eta"] = prep.eta;
  j["converged"] = trace.converged;
  j["iterations"] = trace.records.size();
  j["total_slots"] = trace.records.empty() ? 0 : trace.records.back().slots;
  if (!trace.records.empty()) {
    j["final_running_avg"] = trace.records.back().running_avg;
    j["final_loss"] = trace.records.back().loss;
  }
  if (cfg.problem.kind == "quadratic") {
    auto pc = measure_constants(prep.problems, prep.x0, 16, cfg.seed);
    int diam = prep.design ? prep.design->diameter : diameter(prep.mixing.support());
    double delta = min_weight(prep.mixing);
    auto cc = convergence_constants(delta, std::max(1, diam), 1);
    auto bound = iteration_lower_bound(pc, cc, cfg.eps);
    auto slots = predicted_total_slots(bound, prep.tau);
    j["constants"] = {{"L", pc.smoothness},
                      {"sigma2", pc.noise_var},
                      {"zeta2", pc.heterogeneity},
                      {"delta", delta},
                      {"c", cc.c},
                      {"q", cc.q}};
    j["predicted_iterations_log"] = bound.log_t_lower;
    j["predicted_total_slots_log"] = slots.log_total_slots;
  }
  std::ofstream f(dir / ("summary_" + name + ".json"));
  f << j.dump(2) << "\n";
}

int run_arm(const fs::path& dir, const std::string& name, const ExperimentConfig& cfg) {
  PreparedExperiment prep = prepare_experiment(cfg);
  Trace trace = [&] {
    try {
      return run_loop(prep.algorithm, prep.mixing, prep.problems, prep.x0, prep.eta,
                      cfg.eps, cfg.max_iters, cfg.seed, prep.tau);
    } catch (const DivergedError& e) {
      std::cerr << name << ": " << e.what() << " (partial trace kept)\n";
      return e.partial;
    }
  }();
  write_trace_csv(trace, (dir / ("trace_" + name + ".csv")).string());
  write_summary(dir, name, prep, cfg, trace);
  std::cout << name << ": " << trace.records.size() << " iterations, "
            << (trace.records.empty() ? 0 : trace.records.back().slots) << " slots, "
            << (trace.converged ? "converged" : "stopped at max_iters") << "\n";
  return trace.converged ? 0 : 1;
}

int cmd_simulate(ExperimentConfig cfg, bool compare, const std::string& out) {
  fs::path dir = ensure_out_dir(out);
  {
    std::ofstream f(dir / "config.json");
    f << experiment_config_to_json(cfg).dump(2) << "\n";
  }
  if (!compare) {
    std::string name = cfg.algorithm + (cfg.use_design ? "_designed" : "_vanilla");
    return run_arm(dir, name, cfg);
  }
  // Benchmark slate: designed gradient-push against both full-base baselines.
  ExperimentConfig designed = cfg;
  designed.algorithm = "sgp";
  designed.use_design = true;
  ExperimentConfig vanilla_dpsgd = cfg;
  vanilla_dpsgd.algorithm = "dpsgd";
  vanilla_dpsgd.use_design = false;
  ExperimentConfig vanilla_sgp = cfg;
  vanilla_sgp.algorithm = "sgp";
  vanilla_sgp.use_design = false;
  int rc = 0;
  rc |= run_arm(dir, "sgp_designed", designed);
  rc |= run_arm(dir, "dpsgd_vanilla", vanilla_dpsgd);
  rc |= run_arm(dir, "sgp_vanilla", vanilla_sgp);
  return rc;
}

int cmd_verify(const std::string& level, uint64_t seed) {
  bool full = level == "full";
  auto results = run_verification(full, seed);
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    all_ok = all_ok && r.ok;
  }
  std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << " (" << level << ")\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"broadcast communication graph design for decentralized learning"};
  app.require_subcommand(1);

  TopologyArgs topo;
  std::string out = "out";
  std::string interference;
  std::string design_file;
  std::string config_file;
  std::string level = "quick";
  int k_flag = -1;
  int k_max = 16;
  bool skip_step4 = false;
  bool compare = false;
  bool vanilla = false;
  std::string algo = "sgp";
  double eps = 1e-4;
  double eta = 0.0;
  long max_iters = 100000;
  int dim = 10;
  double sigma = 0.0, zeta = 1.0;

  auto* gen = app.add_subcommand("generate", "write a topology edge list");
  add_topology_flags(gen, topo);
  gen->add_option("--out", out, "output directory");

  auto* design = app.add_subcommand("design", "run the full design pipeline");
  add_topology_flags(design, topo);
  design->add_option("--k", k_flag, "extra edges to add (omit to sweep)");
  design->add_option("--k-max", k_max, "sweep upper bound when --k is omitted");
  design->add_flag("--skip-step4", skip_step4, "skip the cost-preserving augmentation");
  design->add_option("--interference", interference, "separate interference edge list");
  design->add_option("--out", out, "output directory");

  auto* sched = app.add_subcommand("schedule", "collision-free schedule for a link set");
  add_topology_flags(sched, topo);
  sched->add_option("--design", design_file, "design.json to schedule (default: full base)");
  sched->add_option("--interference", interference, "separate interference edge list");
  sched->add_option("--out", out, "output directory");

  auto* sweep = app.add_subcommand("sweep-k", "design objective across K values");
  add_topology_flags(sweep, topo);
  sweep->add_option("--k-max", k_max, "largest K to try");
  sweep->add_flag("--skip-step4", skip_step4, "skip the cost-preserving augmentation");
  sweep->add_option("--interference", interference, "separate interference edge list");
  sweep->add_option("--out", out, "output directory");

  auto* sim = app.add_subcommand("simulate", "decentralized training on synthetic problems");
  add_topology_flags(sim, topo);
  sim->add_option("--config", config_file, "experiment config JSON (flags override)");
  sim->add_option("--algo", algo, "sgp | dpsgd");
  sim->add_flag("--vanilla", vanilla, "communicate on the full base topology");
  sim->add_option("--k", k_flag, "design parameter K (omit to sweep)");
  sim->add_flag("--skip-step4", skip_step4, "skip augmentation in the design");
  sim->add_option("--eps", eps, "convergence level");
  sim->add_option("--eta", eta, "learning rate (0: sqrt(n/max_iters))");
  sim->add_option("--max-iters", max_iters, "iteration cap");
  sim->add_option("--d", dim, "problem dimension");
  sim->add_option("--sigma", sigma, "gradient noise scale");
  sim->add_option("--zeta", zeta, "heterogeneity scale");
  sim->add_flag("--compare", compare, "run sgp-designed, dpsgd-vanilla, sgp-vanilla");
  sim->add_option("--interference", interference, "separate interference edge list");
  sim->add_option("--out", out, "output directory");

  auto* verify = app.add_subcommand("verify", "run the oracle suites");
  verify->add_option("--level", level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--seed", topo.seed, "oracle sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(topo, out);
    if (design->parsed()) {
      std::optional<int> k = design->count("--k") ? std::optional<int>(k_flag) : std::nullopt;
      return cmd_design(topo, k, k_max, skip_step4, interference, out);
    }
    if (sched->parsed()) return cmd_schedule(topo, design_file, interference, out);
    if (sweep->parsed()) return cmd_sweep(topo, k_max, skip_step4, interference, out);
    if (sim->parsed()) {
      ExperimentConfig cfg;
      if (!config_file.empty()) cfg = load_experiment_config(config_file);
      if (!topo.file.empty()) {
        cfg.topology_file = topo.file;
        cfg.gen_spec.reset();
      }
      if (!topo.gen.empty()) {
        cfg.gen_spec = topo.gen;
        cfg.topology_file.reset();
      }
      if (sim->count("--algo")) cfg.algorithm = algo;
      if (sim->count("--vanilla")) cfg.use_design = false;
      if (sim->count("--k")) cfg.k = k_flag;
      if (sim->count("--skip-step4")) cfg.skip_step4 = skip_step4;
      if (sim->count("--eps")) cfg.eps = eps;
      if (sim->count("--eta") && eta > 0.0) cfg.eta = eta;
      if (sim->count("--max-iters")) cfg.max_iters = max_iters;
      if (sim->count("--d")) cfg.problem.d = dim;
      if (sim->count("--sigma")) cfg.problem.noise_sigma = sigma;
      if (sim->count("--zeta")) cfg.problem.zeta_scale = zeta;
      if (sim->count("--seed")) cfg.seed = topo.seed;
      if (!interference.empty()) cfg.interference_file = interference;
      if (cfg.algorithm == "dpsgd") cfg.use_design = false;
      cfg.validate();
      return cmd_simulate(cfg, compare, out);
    }
    if (verify->parsed()) return cmd_verify(level, topo.seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
