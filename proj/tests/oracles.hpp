// Brute-force oracles for the unit and acceptance suites. Everything here is
// deliberately independent of the library's algorithmic paths: plain
// enumeration and first-principles checks only.
#pragma once

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "sgpd/graph.hpp"

namespace oracle {

// Connected-component count of an undirected edge set over n vertices.
inline int component_count(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (const auto& [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

// Directed reachability from every vertex, plain BFS on an edge list.
inline std::vector<std::vector<int>> directed_distances(
    int n, const std::vector<sgpd::Link>& links) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& l : links) adj[l.from].push_back(l.to);
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : adj[v]) {
        if (dist[s][u] < 0) {
          dist[s][u] = dist[s][v] + 1;
          q.push(u);
        }
      }
    }
  }
  return dist;
}

inline bool strongly_connected(int n, const std::vector<sgpd::Link>& links) {
  auto dist = directed_distances(n, links);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (dist[u][v] < 0) return false;
    }
  }
  return true;
}

// Minimum achievable maximum degree over all spanning trees, by enumerating
// all (n-1)-subsets of the edge set. Only for small graphs.
inline int min_spanning_tree_degree(const sgpd::UndirectedGraph& g) {
  int n = g.node_count();
  const auto& edges = g.edges();
  int m = static_cast<int>(edges.size());
  int need = n - 1;
  if (need <= 0) return 0;

  int best = n;  // degree can never reach n
  std::vector<int> pick(need);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::pair<int, int>> chosen;
    for (int idx : pick) chosen.push_back(edges[idx]);
    if (component_count(n, chosen) == 1) {  // n-1 edges + connected => tree
      std::vector<int> deg(n, 0);
      for (const auto& [u, v] : chosen) {
        ++deg[u];
        ++deg[v];
      }
      best = std::min(best, *std::max_element(deg.begin(), deg.end()));
    }
    // next combination
    int i = need - 1;
    while (i >= 0 && pick[i] == m - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

// Bridge test from the definition: removing the edge splits the graph.
inline bool is_bridge(const sgpd::UndirectedGraph& g, std::pair<int, int> e) {
  std::vector<std::pair<int, int>> rest;
  for (const auto& other : g.edges()) {
    if (other != e) rest.push_back(other);
  }
  return component_count(g.node_count(), rest) >
         component_count(g.node_count(), g.edges());
}

// No single edge removal disconnects the subgraph induced by the edge set.
inline bool two_edge_connected_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) return true;
  std::set<int> verts;
  for (const auto& [u, v] : edges) {
    verts.insert(u);
    verts.insert(v);
  }
  auto comps_on_vertices = [&](const std::vector<std::pair<int, int>>& es) {
    // components restricted to the touched vertex set
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [u, v] : es) {
      parent[find(u)] = find(v);
    }
    std::set<int> roots;
    for (int v : verts) roots.insert(find(v));
    return static_cast<int>(roots.size());
  };
  int base = comps_on_vertices(edges);
  for (size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<std::pair<int, int>> rest;
    for (size_t i = 0; i < edges.size(); ++i) {
      if (i != skip) rest.push_back(edges[i]);
    }
    if (comps_on_vertices(rest) > base) return false;
  }
  return true;
}

}  // namespace oracle
