#include "sgpd/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <string>

namespace sgpd {

namespace {

void check_index(NodeId v, int n) {
  if (v < 0 || v >= n) {
    throw Error("node index " + std::to_string(v) + " out of range [0, " +
                std::to_string(n) + ")");
  }
}

}  // namespace

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<NodeId, NodeId>> edges)
    : n_(n) {
  if (n < 0) throw Error("negative node count");
  for (auto& [u, v] : edges) {
    check_index(u, n);
    check_index(v, n);
    if (u == v) throw Error("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool UndirectedGraph::has_edge(NodeId u, NodeId v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int UndirectedGraph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::vector<NodeId>> UndirectedGraph::connected_components() const {
  std::vector<std::vector<NodeId>> comps;
  std::vector<char> seen(n_, 0);
  for (NodeId s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> comp;
    std::queue<NodeId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      comp.push_back(v);
      for (NodeId u : adj_[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool UndirectedGraph::is_connected() const {
  if (n_ <= 1) return true;
  return connected_components().size() == 1;
}

Digraph::Digraph(int n, std::vector<Link> links) : n_(n) {
  if (n < 0) throw Error("negative node count");
  for (const Link& l : links) {
    check_index(l.from, n);
    check_index(l.to, n);
    if (l.from == l.to) throw Error("self-loop link at node " + std::to_string(l.from));
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  links_ = std::move(links);
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (const Link& l : links_) {
    out_[l.from].push_back(l.to);
    in_[l.to].push_back(l.from);
  }
  for (auto& a : out_) std::sort(a.begin(), a.end());
  for (auto& a : in_) std::sort(a.begin(), a.end());
}

bool Digraph::has_link(NodeId from, NodeId to) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) return false;
  const auto& a = out_[from];
  return std::binary_search(a.begin(), a.end(), to);
}

BaseTopology::BaseTopology(UndirectedGraph g) : g_(std::move(g)) {
  auto comps = g_.connected_components();
  if (comps.size() > 1) {
    std::ostringstream msg;
    msg << "base topology is disconnected (" << comps.size() << " components):";
    for (const auto& c : comps) {
      msg << " {";
      for (size_t i = 0; i < c.size(); ++i) msg << (i ? "," : "") << c[i];
      msg << "}";
    }
    throw DisconnectedError(msg.str());
  }
}

Digraph BaseTopology::full_digraph() const {
  std::vector<Link> links;
  links.reserve(2 * g_.edge_count());
  for (const auto& [u, v] : g_.edges()) {
    links.push_back({u, v});
    links.push_back({v, u});
  }
  return Digraph(g_.node_count(), std::move(links));
}

namespace {

// BFS hop counts from one source over an adjacency list.
std::vector<int> bfs_distances(int n, const std::vector<std::vector<NodeId>>& adj,
                               NodeId src) {
  std::vector<int> dist(n, kUnreachable);
  std::queue<NodeId> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    for (NodeId u : adj[v]) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

std::vector<std::vector<NodeId>> out_adjacency(const Digraph& g) {
  std::vector<std::vector<NodeId>> adj(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto s = g.out_neighbors(v);
    adj[v].assign(s.begin(), s.end());
  }
  return adj;
}

}  // namespace

std::vector<std::vector<int>> all_pairs_distances(const UndirectedGraph& g) {
  std::vector<std::vector<NodeId>> adj(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto s = g.neighbors(v);
    adj[v].assign(s.begin(), s.end());
  }
  std::vector<std::vector<int>> dist;
  dist.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    dist.push_back(bfs_distances(g.node_count(), adj, v));
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Digraph& g) {
  auto adj = out_adjacency(g);
  std::vector<std::vector<int>> dist;
  dist.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    dist.push_back(bfs_distances(g.node_count(), adj, v));
  }
  return dist;
}

bool is_strongly_connected(const Digraph& g) {
  int n = g.node_count();
  if (n <= 1) return true;
  auto out = out_adjacency(g);
  auto fwd = bfs_distances(n, out, 0);
  for (int v = 0; v < n; ++v) {
    if (fwd[v] == kUnreachable) return false;
  }
  std::vector<std::vector<NodeId>> rev(n);
  for (NodeId v = 0; v < n; ++v) {
    auto s = g.in_neighbors(v);
    rev[v].assign(s.begin(), s.end());
  }
  auto bwd = bfs_distances(n, rev, 0);
  for (int v = 0; v < n; ++v) {
    if (bwd[v] == kUnreachable) return false;
  }
  return true;
}

int diameter(const Digraph& g) {
  int n = g.node_count();
  if (n <= 1) return 0;
  auto adj = out_adjacency(g);
  int diam = 0;
  for (NodeId v = 0; v < n; ++v) {
    auto dist = bfs_distances(n, adj, v);
    for (NodeId u = 0; u < n; ++u) {
      if (u == v) continue;
      if (dist[u] == kUnreachable) {
        throw NotStronglyConnectedError("node " + std::to_string(u) +
                                        " unreachable from node " + std::to_string(v));
      }
      diam = std::max(diam, dist[u]);
    }
  }
  return diam;
}

std::pair<int, int> max_degrees(const Digraph& g) {
  int mo = 0, mi = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    mo = std::max(mo, g.out_degree(v));
    mi = std::max(mi, g.in_degree(v));
  }
  return {mo, mi};
}

BridgeDecomposition bridge_decomposition(const UndirectedGraph& g) {
  if (!g.is_connected()) {
    throw DisconnectedError("bridge decomposition requires a connected graph");
  }
  int n = g.node_count();
  BridgeDecomposition out;
  if (n == 0) return out;

  // Tarjan low-link, iterative. Adjacency is deduplicated, so the tree edge
  // to the parent appears exactly once and is skipped once.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<size_t> it(n, 0);
  int timer = 0;
  std::vector<NodeId> stack;
  stack.push_back(0);
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    NodeId v = stack.back();
    auto nbrs = g.neighbors(v);
    if (it[v] < nbrs.size()) {
      NodeId u = nbrs[it[v]++];
      if (u == parent[v]) continue;
      if (disc[u] == -1) {
        parent[u] = v;
        disc[u] = low[u] = timer++;
        stack.push_back(u);
      } else {
        low[v] = std::min(low[v], disc[u]);
      }
    } else {
      stack.pop_back();
      if (parent[v] != -1) {
        low[parent[v]] = std::min(low[parent[v]], low[v]);
        if (low[v] > disc[parent[v]]) {
          out.bridges.push_back(std::minmax(parent[v], v));
        }
      }
    }
  }
  std::sort(out.bridges.begin(), out.bridges.end());

  // Components = connected pieces after deleting bridges.
  std::set<std::pair<NodeId, NodeId>> bridge_set(out.bridges.begin(), out.bridges.end());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = ncomp++;
    std::queue<NodeId> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      for (NodeId u : g.neighbors(v)) {
        if (comp[u] != -1) continue;
        if (bridge_set.count(std::minmax(v, u))) continue;
        comp[u] = id;
        q.push(u);
      }
    }
  }
  out.components.resize(ncomp);
  for (NodeId v = 0; v < n; ++v) out.components[comp[v]].vertices.push_back(v);
  for (const auto& e : g.edges()) {
    if (bridge_set.count(e)) continue;
    out.components[comp[e.first]].edges.push_back(e);
  }
  for (auto& c : out.components) {
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
  }
  return out;
}

PreorderResult dfs_preorder(const std::vector<std::pair<NodeId, NodeId>>& component_edges,
                            NodeId root) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& [u, v] : component_edges) {
    if (u == v) throw Error("self-loop in component edge set");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  if (!component_edges.empty() && !adj.count(root)) {
    throw Error("root not in component");
  }
  adj[root];  // singleton component: bare root, no edges
  for (auto& [v, nbrs] : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }

  PreorderResult res;
  int counter = 1;
  res.pre[root] = counter++;
  std::vector<std::pair<NodeId, size_t>> stack;
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    const auto& nbrs = adj[v];
    if (idx < nbrs.size()) {
      NodeId u = nbrs[idx++];
      if (!res.pre.count(u)) {
        res.pre[u] = counter++;
        res.tree_edges.emplace_back(v, u);
        stack.emplace_back(u, 0);
      }
    } else {
      stack.pop_back();
    }
  }
  if (res.pre.size() != adj.size()) {
    throw DisconnectedError("component edge set is not connected");
  }
  return res;
}

}  // namespace sgpd
