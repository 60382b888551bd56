#include "sgpd/spanning.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace sgpd {

namespace {

// Mutable tree scaffold: adjacency sets keep swap bookkeeping simple.
struct TreeState {
  std::vector<std::set<NodeId>> adj;
  std::vector<int> deg;

  explicit TreeState(int n) : adj(n), deg(n, 0) {}

  void add(NodeId u, NodeId v) {
    adj[u].insert(v);
    adj[v].insert(u);
    ++deg[u];
    ++deg[v];
  }
  void remove(NodeId u, NodeId v) {
    adj[u].erase(v);
    adj[v].erase(u);
    --deg[u];
    --deg[v];
  }
  bool has(NodeId u, NodeId v) const { return adj[u].count(v) > 0; }

  // Unique u..v path in the tree.
  std::vector<NodeId> path(NodeId u, NodeId v) const {
    int n = static_cast<int>(adj.size());
    std::vector<NodeId> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<NodeId> q;
    q.push(u);
    seen[u] = 1;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      if (x == v) break;
      for (NodeId y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          q.push(y);
        }
      }
    }
    std::vector<NodeId> p;
    for (NodeId x = v; x != -1; x = parent[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;  // starts at u, ends at v
  }
};

}  // namespace

SpanningGraph min_degree_spanning_tree(const UndirectedGraph& g) {
  if (!g.is_connected()) {
    throw DisconnectedError("spanning tree requires a connected graph");
  }
  int n = g.node_count();
  SpanningGraph result;
  result.n = n;
  result.is_tree = true;
  if (n <= 1) return result;

  TreeState tree(n);
  {
    std::vector<char> seen(n, 0);
    std::queue<NodeId> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      for (NodeId u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          tree.add(v, u);
          q.push(u);
        }
      }
    }
  }

  // Improvement: for a non-tree edge (u,v) and a path-interior vertex w with
  // deg(w) = d >= k-1, swap in (u,v) and drop the path edge at w whenever both
  // endpoints stay below d afterwards. This strictly decreases sum(3^deg).
  long long cap = static_cast<long long>(n) * std::max(1, g.edge_count());
  for (long long iter = 0; iter < cap; ++iter) {
    int k = *std::max_element(tree.deg.begin(), tree.deg.end());
    bool improved = false;
    for (const auto& [u, v] : g.edges()) {
      if (tree.has(u, v)) continue;
      if (tree.deg[u] > k - 2 || tree.deg[v] > k - 2) continue;
      auto path = tree.path(u, v);
      for (size_t i = 1; i + 1 < path.size(); ++i) {
        NodeId w = path[i];
        int d = tree.deg[w];
        if (d >= k - 1 && tree.deg[u] <= d - 2 && tree.deg[v] <= d - 2) {
          tree.remove(path[i - 1], w);
          tree.add(u, v);
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) break;
  }

  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : tree.adj[v]) {
      if (v < u) result.edges.emplace_back(v, u);
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

SpanningGraph add_k_edges(const SpanningGraph& t, const UndirectedGraph& g, int k) {
  if (k < 0) throw Error("negative edge-add count");
  if (t.n != g.node_count()) throw Error("spanning graph does not match base vertex set");
  for (const auto& [u, v] : t.edges) {
    if (!g.has_edge(u, v)) {
      throw Error("spanning graph edge {" + std::to_string(u) + "," + std::to_string(v) +
                  "} is not a base edge");
    }
  }

  std::set<std::pair<NodeId, NodeId>> current(t.edges.begin(), t.edges.end());
  for (int step = 0; step < k; ++step) {
    UndirectedGraph working(t.n, {current.begin(), current.end()});
    auto dist = all_pairs_distances(working);
    int best_d = -1;
    std::pair<NodeId, NodeId> best{-1, -1};
    for (const auto& e : g.edges()) {
      if (current.count(e)) continue;
      int d = dist[e.first][e.second];
      if (d > best_d) {
        best_d = d;
        best = e;
      }
    }
    if (best_d < 0) {
      throw AddsExhaustedError("ran out of candidate edges after " +
                                   std::to_string(step) + " of " + std::to_string(k) +
                                   " additions",
                               step);
    }
    current.insert(best);
  }

  SpanningGraph out;
  out.n = t.n;
  out.edges.assign(current.begin(), current.end());
  out.is_tree = static_cast<int>(out.edges.size()) == t.n - 1;
  return out;
}

}  // namespace sgpd
