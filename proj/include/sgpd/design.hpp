#pragma once

#include <vector>

#include "sgpd/graph.hpp"
#include "sgpd/schedule.hpp"
#include "sgpd/spanning.hpp"

namespace sgpd {

struct DigraphStats {
  int diameter = 0;
  int max_out = 0;
  int max_in = 0;
};

// Throws NotStronglyConnectedError; the objectives below are meaningless on
// graphs that do not connect every pair.
DigraphStats digraph_stats(const Digraph& g);

// The (1 + D_out)^(4*diam) factor grows far past double range (diam 30 at
// degree 5 already overflows), so every objective is carried as a natural
// log and compared in log space.
double linear_from_log(double log_value);

// ln[ diam^2 * (1 + max_out)^(4*diam) ] — the iteration-count factor.
double log_iteration_factor(int diam, int max_out);
inline double log_iteration_factor(const DigraphStats& s) {
  return log_iteration_factor(s.diameter, s.max_out);
}

// ln[ (max_out + max_in) * diam^2 * (1 + max_out)^(4*diam) ] — the
// closed-form design objective minimized by the pipeline.
double log_design_objective(const DigraphStats& s);

// ln[ tau * diam^2 * (1 + max_out)^(4*diam) ] — slot count times the
// iteration factor, the quantity the design ultimately drives down.
double log_slot_objective(int tau, const DigraphStats& s);

// Orients a connected undirected graph into a strongly connected digraph:
// inside each bridge-free component, DFS-tree edges point parent-to-child and
// the remaining edges point descendant-to-ancestor; bridges become bidirected
// link pairs. DFS roots are the smallest vertex of each component.
Digraph orient_edges(const SpanningGraph& g);

struct AugmentOutcome {
  Digraph graph;
  Schedule schedule;
  int links_added = 0;
};

// Cost-preserving link augmentation: repeatedly picks the unused base link
// that minimizes the iteration factor, provided it fits an existing slot
// without conflict and keeps the factor within log_budget. Slot count never
// changes. Ties go to the lexicographically smallest link, placed in its
// earliest conflict-free slot.
AugmentOutcome augment_links(const Digraph& g_a, const Schedule& s, const BaseTopology& base,
                             const UndirectedGraph& interference, double log_budget);

struct DesignResult {
  Digraph g_a;
  Schedule schedule;
  int tau = 0;
  int diameter = 0;
  int max_out = 0;
  int max_in = 0;
  double min_mixing_weight = 1.0;  // 1 / (max_out + 1), uniform weights
  double log_design_objective = 0.0;
  double log_slot_objective = 0.0;
  double log_augmentation_budget = 0.0;  // iteration factor before augmentation
  int k = 0;
  bool skip_step4 = false;
};

// The full pipeline: spanning tree, K distance-driven edge additions,
// orientation, collision-free scheduling, then (unless skipped) the
// cost-preserving augmentation. Interference defaults to the base graph.
DesignResult design_graph(const BaseTopology& base, int k, bool skip_step4,
                          const UndirectedGraph* interference = nullptr);

// Objective of spreading g_a's links over a `period`-iteration cycle:
// ln[ (sum of per-subset slot counts) * diam^2 * period
//     * (ceil(max_out/period) + 1)^(4*diam*period) ].
// `split` must partition g_a's link set into `period` groups. Verification
// oracle for the claim that a one-shot activation is never worse.
double log_periodic_objective(int period, const Digraph& g_a,
                              const std::vector<std::vector<Link>>& split,
                              const BaseTopology& base,
                              const UndirectedGraph* interference = nullptr);

// ln[ 2 * D * diam^2 * (1 + D)^(4*diam) ] of a spanning tree (D its maximum
// degree, diam its diameter): the design objective of the bidirected tree,
// hence an upper bound on what the pipeline returns at the best K.
double log_tree_design_bound(const SpanningGraph& tree);

struct SweepPoint {
  int k = 0;
  DesignResult result;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  int k_star = 0;  // argmin of the design objective, smallest K on ties
};

// Runs the pipeline for K = 0..k_max (capped at the number of non-tree base
// edges) and selects the K minimizing the design objective of the final graph.
SweepResult sweep_k(const BaseTopology& base, int k_max, bool skip_step4,
                    const UndirectedGraph* interference = nullptr);

}  // namespace sgpd
