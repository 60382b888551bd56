#include "sgpd/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace sgpd {

DigraphStats digraph_stats(const Digraph& g) {
  DigraphStats s;
  s.diameter = diameter(g);  // throws when not strongly connected
  auto [dout, din] = max_degrees(g);
  s.max_out = dout;
  s.max_in = din;
  return s;
}

double linear_from_log(double log_value) {
  if (log_value > 709.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_value);
}

double log_iteration_factor(int diam, int max_out) {
  if (diam <= 0) return -std::numeric_limits<double>::infinity();
  return 2.0 * std::log(static_cast<double>(diam)) +
         4.0 * diam * std::log(1.0 + max_out);
}

double log_design_objective(const DigraphStats& s) {
  return std::log(static_cast<double>(s.max_out + s.max_in)) +
         log_iteration_factor(s.diameter, s.max_out);
}

double log_slot_objective(int tau, const DigraphStats& s) {
  return std::log(static_cast<double>(tau)) + log_iteration_factor(s.diameter, s.max_out);
}

Digraph orient_edges(const SpanningGraph& sg) {
  UndirectedGraph g = sg.as_graph();
  auto bd = bridge_decomposition(g);  // throws on disconnected input

  std::vector<Link> links;
  links.reserve(2 * g.edge_count());
  for (const auto& comp : bd.components) {
    if (comp.edges.empty()) continue;
    NodeId root = comp.vertices.front();
    auto po = dfs_preorder(comp.edges, root);
    std::set<std::pair<NodeId, NodeId>> tree_edges;
    for (const auto& [p, c] : po.tree_edges) tree_edges.insert(std::minmax(p, c));
    for (const auto& [u, v] : comp.edges) {
      NodeId a = u, b = v;
      if (po.pre.at(a) > po.pre.at(b)) std::swap(a, b);
      if (tree_edges.count(std::minmax(a, b))) {
        links.push_back({a, b});  // down the DFS tree
      } else {
        links.push_back({b, a});  // back toward the ancestor
      }
    }
  }
  for (const auto& [u, v] : bd.bridges) {
    links.push_back({u, v});
    links.push_back({v, u});
  }
  return Digraph(g.node_count(), std::move(links));
}

AugmentOutcome augment_links(const Digraph& g_a, const Schedule& s, const BaseTopology& base,
                             const UndirectedGraph& interference, double log_budget) {
  const int n = g_a.node_count();
  std::vector<std::vector<Link>> slots = s.slots;
  std::set<Link> links(g_a.links().begin(), g_a.links().end());
  std::vector<int> out_deg(n, 0), in_deg(n, 0);
  for (const Link& l : links) {
    ++out_deg[l.from];
    ++in_deg[l.to];
  }

  auto dist = all_pairs_distances(g_a);
  int diam = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (dist[u][v] >= kUnreachable) {
        throw NotStronglyConnectedError("augmentation requires a strongly connected graph");
      }
      diam = std::max(diam, dist[u][v]);
    }
  }
  int max_out = *std::max_element(out_deg.begin(), out_deg.end());

  std::vector<Link> cands;
  for (const auto& [u, v] : base.undirected().edges()) {
    if (!links.count({u, v})) cands.push_back({u, v});
    if (!links.count({v, u})) cands.push_back({v, u});
  }
  std::sort(cands.begin(), cands.end());

  // Per-candidate conflict counts against each slot's residents; maintained
  // incrementally so feasibility stays O(slots) per candidate.
  const int nslots = static_cast<int>(slots.size());
  std::vector<std::vector<int>> conflict_count(cands.size(), std::vector<int>(nslots, 0));
  for (size_t ci = 0; ci < cands.size(); ++ci) {
    for (int si = 0; si < nslots; ++si) {
      for (const Link& r : slots[si]) {
        if (conflicts(cands[ci], r, interference)) ++conflict_count[ci][si];
      }
    }
  }
  std::vector<char> alive(cands.size(), 1);

  AugmentOutcome out;
  while (true) {
    // Pairs realizing the current diameter; a candidate shrinks the diameter
    // only if it shortcuts all of them.
    std::vector<std::pair<int, int>> far_pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && dist[u][v] == diam) far_pairs.emplace_back(u, v);
      }
    }

    int best_ci = -1, best_slot = -1;
    double best_log = std::numeric_limits<double>::infinity();
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      if (!alive[ci]) continue;
      int slot = -1;
      for (int si = 0; si < nslots; ++si) {
        if (conflict_count[ci][si] == 0) {
          slot = si;
          break;
        }
      }
      if (slot < 0) continue;

      const Link& c = cands[ci];
      int new_out = std::max(max_out, out_deg[c.from] + 1);
      bool shrinks = diam > 0;
      for (const auto& [u, v] : far_pairs) {
        if (dist[u][c.from] + 1 + dist[c.to][v] >= diam) {
          shrinks = false;
          break;
        }
      }
      int new_diam = diam;
      if (shrinks) {
        new_diam = 0;
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            int d = std::min(dist[u][v], dist[u][c.from] + 1 + dist[c.to][v]);
            new_diam = std::max(new_diam, d);
          }
        }
      }
      double lg = log_iteration_factor(new_diam, new_out);
      if (lg < best_log) {  // strict: keeps the lexicographically first tie
        best_log = lg;
        best_ci = static_cast<int>(ci);
        best_slot = slot;
      }
    }

    if (best_ci < 0) break;                       // nothing fits any slot
    if (best_log > log_budget + 1e-9) break;      // would degrade the budget

    const Link added = cands[best_ci];
    links.insert(added);
    ++out_deg[added.from];
    ++in_deg[added.to];
    max_out = std::max(max_out, out_deg[added.from]);
    slots[best_slot].push_back(added);
    alive[best_ci] = 0;
    ++out.links_added;

    // Single-edge relaxation keeps the distance matrix exact.
    diam = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        int via = dist[u][added.from] + 1 + dist[added.to][v];
        if (via < dist[u][v]) dist[u][v] = via;
        if (u != v) diam = std::max(diam, dist[u][v]);
      }
    }
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      if (alive[ci] && conflicts(cands[ci], added, interference)) {
        ++conflict_count[ci][best_slot];
      }
    }
  }

  for (auto& slot : slots) std::sort(slot.begin(), slot.end());
  out.graph = Digraph(n, {links.begin(), links.end()});
  out.schedule.slots = std::move(slots);
  return out;
}

DesignResult design_graph(const BaseTopology& base, int k, bool skip_step4,
                          const UndirectedGraph* interference) {
  const UndirectedGraph& interf = interference ? *interference : base.undirected();

  SpanningGraph tree = min_degree_spanning_tree(base.undirected());
  SpanningGraph working = add_k_edges(tree, base.undirected(), k);
  Digraph oriented = orient_edges(working);
  ConflictGraph cg = build_conflict_graph(oriented, base, interf);
  Schedule sched = greedy_color(cg);

  DigraphStats pre_stats = digraph_stats(oriented);
  double budget = log_iteration_factor(pre_stats);

  DesignResult res;
  res.k = k;
  res.skip_step4 = skip_step4;
  res.log_augmentation_budget = budget;
  if (skip_step4) {
    res.g_a = std::move(oriented);
    res.schedule = std::move(sched);
    res.diameter = pre_stats.diameter;
    res.max_out = pre_stats.max_out;
    res.max_in = pre_stats.max_in;
  } else {
    AugmentOutcome aug = augment_links(oriented, sched, base, interf, budget);
    DigraphStats stats = digraph_stats(aug.graph);
    res.g_a = std::move(aug.graph);
    res.schedule = std::move(aug.schedule);
    res.diameter = stats.diameter;
    res.max_out = stats.max_out;
    res.max_in = stats.max_in;
  }
  res.tau = res.schedule.tau();
  res.min_mixing_weight = 1.0 / (res.max_out + 1);
  DigraphStats final_stats{res.diameter, res.max_out, res.max_in};
  res.log_design_objective = log_design_objective(final_stats);
  res.log_slot_objective = log_slot_objective(res.tau, final_stats);
  return res;
}

double log_periodic_objective(int period, const Digraph& g_a,
                              const std::vector<std::vector<Link>>& split,
                              const BaseTopology& base,
                              const UndirectedGraph* interference) {
  if (period < 1) throw Error("period must be positive");
  if (static_cast<int>(split.size()) != period) {
    throw Error("split has " + std::to_string(split.size()) + " groups, expected " +
                std::to_string(period));
  }
  std::vector<Link> merged;
  for (const auto& part : split) merged.insert(merged.end(), part.begin(), part.end());
  std::sort(merged.begin(), merged.end());
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end() ||
      merged != g_a.links()) {
    throw Error("split is not a partition of the activated link set");
  }

  const UndirectedGraph& interf = interference ? *interference : base.undirected();
  long long tau_sum = 0;
  for (const auto& part : split) {
    if (part.empty()) continue;
    Digraph sub(g_a.node_count(), part);
    tau_sum += greedy_color(build_conflict_graph(sub, base, interf)).tau();
  }

  DigraphStats s = digraph_stats(g_a);
  int per_round_degree = (s.max_out + period - 1) / period;
  return std::log(static_cast<double>(tau_sum)) +
         2.0 * std::log(static_cast<double>(s.diameter)) +
         std::log(static_cast<double>(period)) +
         4.0 * static_cast<double>(s.diameter) * period * std::log(1.0 + per_round_degree);
}

double log_tree_design_bound(const SpanningGraph& tree) {
  UndirectedGraph g = tree.as_graph();
  int deg = g.max_degree();
  auto dist = all_pairs_distances(g);
  int diam = 0;
  for (const auto& row : dist) {
    for (int d : row) {
      if (d < kUnreachable) diam = std::max(diam, d);
    }
  }
  if (deg == 0 || diam == 0) return -std::numeric_limits<double>::infinity();
  return std::log(2.0) + std::log(static_cast<double>(deg)) +
         2.0 * std::log(static_cast<double>(diam)) + 4.0 * diam * std::log(1.0 + deg);
}

SweepResult sweep_k(const BaseTopology& base, int k_max, bool skip_step4,
                    const UndirectedGraph* interference) {
  if (k_max < 0) throw Error("negative sweep bound");
  int candidates = base.undirected().edge_count() - (base.node_count() - 1);
  int hi = std::min(k_max, std::max(0, candidates));

  SweepResult sweep;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= hi; ++k) {
    SweepPoint p;
    p.k = k;
    p.result = design_graph(base, k, skip_step4, interference);
    if (p.result.log_design_objective < best) {
      best = p.result.log_design_objective;
      sweep.k_star = k;
    }
    sweep.points.push_back(std::move(p));
  }
  return sweep;
}

}  // namespace sgpd
