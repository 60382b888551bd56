#include "sgpd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "sgpd/design.hpp"
#include "sgpd/generators.hpp"
#include "sgpd/mixing.hpp"
#include "sgpd/rng.hpp"
#include "sgpd/sim.hpp"

namespace sgpd {

namespace {

int rand_int(std::mt19937_64& eng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(eng() % static_cast<uint64_t>(hi - lo + 1));
}

double rand_unit(std::mt19937_64& eng) { return to_unit_double(eng()); }

BaseTopology random_base(std::mt19937_64& eng, int n_lo, int n_hi) {
  int n = rand_int(eng, n_lo, n_hi);
  double p = 0.2 + 0.4 * rand_unit(eng);
  return BaseTopology(random_connected_gnp(n, p, eng()));
}

Digraph random_activated_subgraph(const BaseTopology& base, std::mt19937_64& eng,
                                  double keep) {
  std::vector<Link> links;
  for (const auto& [u, v] : base.undirected().edges()) {
    if (rand_unit(eng) < keep) links.push_back({u, v});
    if (rand_unit(eng) < keep) links.push_back({v, u});
  }
  return Digraph(base.node_count(), std::move(links));
}

// Strongly connected activated graph: orientation of a spanning structure.
Digraph random_strong_digraph(const BaseTopology& base, std::mt19937_64& eng) {
  auto tree = min_degree_spanning_tree(base.undirected());
  int cands = base.undirected().edge_count() - (base.node_count() - 1);
  int k = cands > 0 ? rand_int(eng, 0, std::min(cands, 4)) : 0;
  return orient_edges(add_k_edges(tree, base.undirected(), k));
}

std::string link_str(const Link& l) {
  return "(" + std::to_string(l.from) + "," + std::to_string(l.to) + ")";
}

}  // namespace

CheckResult check_uniform_weight_grid() {
  CheckResult res{"uniform-weight-grid", true, ""};

  // Fixed 3-node activated graph with out-degrees 2, 1, 0.
  Digraph g(3, {{0, 1}, {0, 2}, {1, 0}});
  double uniform_delta = min_weight(uniform_column_stochastic(g));

  // Columns are independent: the best achievable overall minimum weight is
  // the worst column's best minimum. Grid-enumerate each column's positive
  // weights in multiples of 0.05 summing to 1.
  constexpr int kSteps = 20;
  double best_overall = 1.0;
  for (NodeId j = 0; j < 3; ++j) {
    int support = g.out_degree(j) + 1;
    double best_col = 0.0;
    std::vector<int> parts(support, 0);
    // all compositions of kSteps into `support` positive parts
    auto enumerate = [&](auto&& self, int idx, int remaining) -> void {
      if (idx == support - 1) {
        parts[idx] = remaining;
        int mn = *std::min_element(parts.begin(), parts.end());
        best_col = std::max(best_col, mn * 0.05);
        return;
      }
      for (int v = 1; v <= remaining - (support - 1 - idx); ++v) {
        parts[idx] = v;
        self(self, idx + 1, remaining - v);
      }
    };
    enumerate(enumerate, 0, kSteps);
    best_overall = std::min(best_overall, best_col);
  }

  if (best_overall > uniform_delta + 1e-12) {
    res.ok = false;
    std::ostringstream os;
    os << "grid search reached min weight " << best_overall
       << " above the uniform assignment's " << uniform_delta;
    res.detail = os.str();
  } else {
    std::ostringstream os;
    os << "grid best " << best_overall << " <= uniform " << uniform_delta;
    res.detail = os.str();
  }
  return res;
}

CheckResult check_uniform_weight_delta(int trials, uint64_t seed) {
  CheckResult res{"uniform-weight-delta", true, ""};
  std::mt19937_64 eng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = rand_int(eng, 3, 10);
    std::vector<Link> links;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (u != v && rand_unit(eng) < 0.35) links.push_back({u, v});
      }
    }
    Digraph g(n, std::move(links));
    auto w = uniform_column_stochastic(g);
    double expected = 1.0 / (max_degrees(g).first + 1);
    if (min_weight(w) != expected) {
      res.ok = false;
      res.detail = "trial " + std::to_string(t) + ": min weight " +
                   std::to_string(min_weight(w)) + " != " + std::to_string(expected);
      return res;
    }
  }
  res.detail = std::to_string(trials) + " digraphs, exact equality";
  return res;
}

CheckResult check_period_splitting(int trials, uint64_t seed) {
  CheckResult res{"period-splitting", true, ""};
  std::mt19937_64 eng(seed);
  for (int t = 0; t < trials; ++t) {
    BaseTopology base = random_base(eng, 5, 12);
    Digraph g_a = random_strong_digraph(base, eng);
    int period = 2 + t % 3;
    std::vector<std::vector<Link>> split(period);
    for (const Link& l : g_a.links()) split[rand_int(eng, 0, period - 1)].push_back(l);

    double one_shot =
        log_periodic_objective(1, g_a, {g_a.links()}, base);
    double spread = log_periodic_objective(period, g_a, split, base);
    if (spread < one_shot - 1e-9) {
      res.ok = false;
      std::ostringstream os;
      os << "trial " << t << ": period " << period << " log objective " << spread
         << " below one-shot " << one_shot;
      res.detail = os.str();
      return res;
    }
  }
  res.detail = std::to_string(trials) + " random splits, one-shot never worse";
  return res;
}

CheckResult check_conflict_degree_bound(int trials, uint64_t seed) {
  CheckResult res{"conflict-degree-bound", true, ""};
  std::mt19937_64 eng(seed);
  for (int t = 0; t < trials; ++t) {
    BaseTopology base = random_base(eng, 5, 14);
    Digraph g_a = (t % 2 == 0) ? random_activated_subgraph(base, eng, 0.45)
                               : design_graph(base, 0, t % 4 == 1).g_a;
    auto cg = build_conflict_graph(g_a, base);
    long long bound = conflict_degree_bound(g_a, base);
    if (cg.max_degree() > bound) {
      res.ok = false;
      res.detail = "trial " + std::to_string(t) + ": conflict degree " +
                   std::to_string(cg.max_degree()) + " exceeds bound " +
                   std::to_string(bound);
      return res;
    }
    Schedule s = greedy_color(cg);
    if (!g_a.links().empty() && s.tau() > cg.max_degree() + 1) {
      res.ok = false;
      res.detail = "trial " + std::to_string(t) + ": greedy used " +
                   std::to_string(s.tau()) + " slots above max degree + 1";
      return res;
    }
  }
  res.detail = std::to_string(trials) + " activated graphs within the degree bound";
  return res;
}

CheckResult check_chromatic_oracle(int trials, int max_vertices, uint64_t seed) {
  CheckResult res{"chromatic-oracle", true, ""};
  std::mt19937_64 eng(seed);
  int matched = 0;
  for (int t = 0; t < trials; ++t) {
    BaseTopology base = random_base(eng, 5, 8);
    Digraph g_a = random_activated_subgraph(base, eng, 0.35);
    while (g_a.link_count() > max_vertices) {
      auto links = g_a.links();
      links.resize(max_vertices);
      g_a = Digraph(base.node_count(), links);
    }
    auto cg = build_conflict_graph(g_a, base);
    int exact = chromatic_number_exact(cg);
    int greedy = greedy_color(cg).tau();
    int cap = cg.vertices.empty() ? 0 : cg.max_degree() + 1;
    if (exact > greedy || greedy > cap) {
      res.ok = false;
      res.detail = "trial " + std::to_string(t) + ": exact " + std::to_string(exact) +
                   ", greedy " + std::to_string(greedy) + ", cap " + std::to_string(cap);
      return res;
    }
    if (exact == greedy) ++matched;
  }
  double rate = trials > 0 ? static_cast<double>(matched) / trials : 1.0;
  res.ok = rate >= 0.6;
  std::ostringstream os;
  os << "greedy matched the exact chromatic number on " << matched << "/" << trials
     << " conflict graphs";
  res.detail = os.str();
  return res;
}

CheckResult check_orientation_connectivity(int trials, uint64_t seed) {
  CheckResult res{"orientation-connectivity", true, ""};
  std::mt19937_64 eng(seed);
  for (int t = 0; t < trials; ++t) {
    BaseTopology base = random_base(eng, 4, 16);
    Digraph g_a = random_strong_digraph(base, eng);
    if (!is_strongly_connected(g_a)) {
      res.ok = false;
      res.detail = "trial " + std::to_string(t) + ": orientation lost strong connectivity";
      return res;
    }
  }
  res.detail = std::to_string(trials) + " orientations, all strongly connected";
  return res;
}

CheckResult check_tree_bound(int trials, uint64_t seed) {
  CheckResult res{"tree-bound", true, ""};
  std::mt19937_64 eng(seed);
  for (int t = 0; t < trials; ++t) {
    BaseTopology base = random_base(eng, 6, 14);
    auto tree = min_degree_spanning_tree(base.undirected());
    int cands = base.undirected().edge_count() - (base.node_count() - 1);
    auto sweep = sweep_k(base, cands, /*skip_step4=*/true);
    double best = sweep.points[sweep.k_star].result.log_design_objective;
    double bound = log_tree_design_bound(tree);
    if (best > bound + 1e-9) {
      res.ok = false;
      std::ostringstream os;
      os << "trial " << t << ": best log objective " << best << " exceeds tree bound "
         << bound;
      res.detail = os.str();
      return res;
    }
  }
  res.detail = std::to_string(trials) + " topologies within the spanning-tree bound";
  return res;
}

CheckResult check_schedule_validity(int trials, uint64_t seed) {
  CheckResult res{"schedule-validity", true, ""};
  std::mt19937_64 eng(seed);
  for (int t = 0; t < trials; ++t) {
    BaseTopology base = random_base(eng, 5, 14);
    DesignResult d = design_graph(base, 0, t % 2 == 0);
    auto cg = build_conflict_graph(d.g_a, base);
    if (!validate_schedule(d.schedule, cg)) {
      res.ok = false;
      res.detail = "trial " + std::to_string(t) + ": schedule failed validation";
      return res;
    }
    // Independent exhaustive pair check, straight from the conflict rule.
    for (const auto& slot : d.schedule.slots) {
      for (size_t i = 0; i < slot.size(); ++i) {
        for (size_t j = i + 1; j < slot.size(); ++j) {
          if (conflicts(slot[i], slot[j], base.undirected())) {
            res.ok = false;
            res.detail = "trial " + std::to_string(t) + ": conflicting pair " +
                         link_str(slot[i]) + " " + link_str(slot[j]) + " share a slot";
            return res;
          }
        }
      }
    }
  }
  res.detail = std::to_string(trials) + " designed schedules collision-free";
  return res;
}

CheckResult check_push_sum_mass(int graphs, long iters, uint64_t seed) {
  CheckResult res{"push-sum-mass", true, ""};
  std::mt19937_64 eng(seed);
  for (int t = 0; t < graphs; ++t) {
    BaseTopology base = random_base(eng, 5, 12);
    DesignResult d = design_graph(base, 0, false);
    auto w_mat = uniform_column_stochastic(d.g_a);
    int n = base.node_count();
    Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
    for (long it = 0; it < iters; ++it) {
      w = w_mat.matrix() * w;
      double drift = std::abs(w.sum() - n);
      if (drift >= 1e-9) {
        res.ok = false;
        std::ostringstream os;
        os << "graph " << t << " iteration " << it << ": mass drift " << drift;
        res.detail = os.str();
        return res;
      }
    }
  }
  res.detail = std::to_string(graphs) + " graphs x " + std::to_string(iters) +
               " iterations, mass conserved";
  return res;
}

CheckResult check_consensus_debias(int graphs, uint64_t seed) {
  CheckResult res{"consensus-debias", true, ""};
  std::mt19937_64 eng(seed);
  for (int t = 0; t < graphs; ++t) {
    BaseTopology base = random_base(eng, 5, 12);
    DesignResult d = design_graph(base, 0, false);
    auto w_mat = uniform_column_stochastic(d.g_a);
    int n = base.node_count();
    ProblemSpec spec;
    spec.d = 4;
    auto problems = make_problems(n, spec, eng());
    SgpState state{make_initial_state(n, spec.d, 1.0, eng()), Eigen::VectorXd::Ones(n), 0};
    Eigen::VectorXd xbar0 = state.x.colwise().mean();

    // Geometric decay toward the initial average: the error must contract
    // over every 100-round window and reach 1e-8 within the budget. Ring-like
    // designs contract at cos(pi/n) per round, so the budget is generous.
    bool reached = false;
    double window_err = -1.0;
    for (int it = 1; it <= 2000; ++it) {
      state = sgp_step(state, w_mat, problems, 0.0, seed);
      Eigen::MatrixXd z = debias(state);
      double err = 0.0;
      for (int i = 0; i < n; ++i) {
        err = std::max(err, (z.row(i).transpose() - xbar0).norm());
      }
      if (err < 1e-8) {
        reached = true;
        break;
      }
      if (it % 100 == 0) {
        if (window_err >= 0.0 && err >= window_err) {
          res.ok = false;
          res.detail = "graph " + std::to_string(t) + ": consensus error stalled at " +
                       std::to_string(err) + " after " + std::to_string(it) + " rounds";
          return res;
        }
        window_err = err;
      }
    }
    if (!reached) {
      res.ok = false;
      res.detail = "graph " + std::to_string(t) +
                   ": de-biased parameters did not reach the initial average in 2000 rounds";
      return res;
    }
  }
  res.detail = std::to_string(graphs) + " graphs reached consensus on the initial average";
  return res;
}

CheckResult check_average_identity(int graphs, uint64_t seed) {
  CheckResult res{"average-identity", true, ""};
  std::mt19937_64 eng(seed);
  for (int t = 0; t < graphs; ++t) {
    BaseTopology base = random_base(eng, 5, 10);
    DesignResult d = design_graph(base, 0, false);
    auto w_mat = uniform_column_stochastic(d.g_a);
    int n = base.node_count();
    ProblemSpec spec;
    spec.d = 3;
    spec.noise_sigma = 0.1;
    uint64_t run_seed = eng();
    auto problems = make_problems(n, spec, run_seed);
    SgpState state{make_initial_state(n, spec.d, 1.0, run_seed), Eigen::VectorXd::Ones(n), 0};
    double eta = 0.05;

    for (int step = 0; step < 25; ++step) {
      Eigen::MatrixXd z = debias(state);
      Eigen::VectorXd grad_sum = Eigen::VectorXd::Zero(spec.d);
      for (int i = 0; i < n; ++i) {
        grad_sum += sampled_gradient(problems[i], i, z.row(i).transpose(), state.t, run_seed);
      }
      Eigen::VectorXd expected =
          state.x.colwise().mean().transpose() - (eta / n) * grad_sum;
      state = sgp_step(state, w_mat, problems, eta, run_seed);
      Eigen::VectorXd actual = state.x.colwise().mean();
      if ((actual - expected).norm() > 1e-12) {
        res.ok = false;
        std::ostringstream os;
        os << "graph " << t << " step " << step << ": average drifted by "
           << (actual - expected).norm();
        res.detail = os.str();
        return res;
      }
    }
  }
  res.detail = std::to_string(graphs) + " runs, per-step average identity held to 1e-12";
  return res;
}

std::vector<CheckResult> run_verification(bool full, uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(check_uniform_weight_grid());
  out.push_back(check_uniform_weight_delta(full ? 50 : 20, seed + 1));
  out.push_back(check_period_splitting(full ? 200 : 60, seed + 2));
  out.push_back(check_conflict_degree_bound(full ? 200 : 50, seed + 3));
  out.push_back(check_chromatic_oracle(full ? 50 : 20, full ? 14 : 10, seed + 4));
  out.push_back(check_orientation_connectivity(full ? 200 : 60, seed + 5));
  out.push_back(check_tree_bound(full ? 100 : 20, seed + 6));
  out.push_back(check_schedule_validity(full ? 60 : 20, seed + 7));
  out.push_back(check_push_sum_mass(full ? 10 : 4, full ? 10000 : 2000, seed + 8));
  out.push_back(check_consensus_debias(full ? 10 : 4, seed + 9));
  out.push_back(check_average_identity(full ? 10 : 4, seed + 10));
  return out;
}

}  // namespace sgpd
