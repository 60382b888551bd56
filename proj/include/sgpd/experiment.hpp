#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "sgpd/design.hpp"
#include "sgpd/generators.hpp"
#include "sgpd/sim.hpp"

namespace sgpd {

// One simulation run, fully specified: topology source, algorithm, design
// parameters, synthetic problem, learning rate, stopping rule, seed. All
// randomness flows from the explicit seed.
struct ExperimentConfig {
  std::optional<std::string> topology_file;
  std::optional<std::string> gen_spec;   // exactly one source must be set
  std::string algorithm = "sgp";         // sgp | dpsgd
  bool use_design = true;                // false: communicate on the full base
  std::optional<int> k;                  // absent: sweep and take the argmin
  int k_max = 16;
  bool skip_step4 = false;
  std::optional<std::string> interference_file;
  ProblemSpec problem;
  std::optional<double> eta;             // absent: sqrt(n / max_iters)
  double eps = 1e-4;
  long max_iters = 100000;
  uint64_t seed = 0;

  void validate() const;
};

ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
nlohmann::json experiment_config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_experiment_config(const std::string& path);

// Everything resolved from a config short of running it.
struct PreparedExperiment {
  BaseTopology base;
  Algorithm algorithm = Algorithm::sgp;
  MixingMatrix mixing;
  int tau = 1;                       // slots per iteration for slot accounting
  std::optional<DesignResult> design;  // present when a designed graph is used
  std::vector<LocalProblem> problems;
  Eigen::MatrixXd x0;
  double eta = 0.0;
  std::string topology_description;
};

PreparedExperiment prepare_experiment(const ExperimentConfig& cfg);
Trace run_experiment(const ExperimentConfig& cfg);

// Slots per iteration when every base link is activated.
int full_base_tau(const BaseTopology& base, const UndirectedGraph* interference = nullptr);

}  // namespace sgpd
