#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgpd {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // counterexample or summary
};

// Brute-force / property oracles for the design machinery. `full` widens the
// sample counts and instance sizes. Deterministic in seed.
std::vector<CheckResult> run_verification(bool full, uint64_t seed);

// Individual suites, exposed so tests can target them.
CheckResult check_uniform_weight_grid();
CheckResult check_uniform_weight_delta(int trials, uint64_t seed);
CheckResult check_period_splitting(int trials, uint64_t seed);
CheckResult check_conflict_degree_bound(int trials, uint64_t seed);
CheckResult check_chromatic_oracle(int trials, int max_vertices, uint64_t seed);
CheckResult check_orientation_connectivity(int trials, uint64_t seed);
CheckResult check_tree_bound(int trials, uint64_t seed);
CheckResult check_schedule_validity(int trials, uint64_t seed);
CheckResult check_push_sum_mass(int graphs, long iters, uint64_t seed);
CheckResult check_consensus_debias(int graphs, uint64_t seed);
CheckResult check_average_identity(int graphs, uint64_t seed);

}  // namespace sgpd
