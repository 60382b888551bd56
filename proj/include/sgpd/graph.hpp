#pragma once

#include <compare>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sgpd/errors.hpp"

namespace sgpd {

using NodeId = int;

// A directed communication link: `from` broadcasts, `to` receives.
struct Link {
  NodeId from = 0;
  NodeId to = 0;
  friend auto operator<=>(const Link&, const Link&) = default;
};

// Large-but-addable sentinel for unreachable pairs in hop-count matrices.
inline constexpr int kUnreachable = 1 << 29;

// Simple undirected graph with dense node ids 0..n-1 and sorted adjacency.
// Edges are stored normalized (u < v); self-loops are rejected.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(int n, std::vector<std::pair<NodeId, NodeId>> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  std::span<const NodeId> neighbors(NodeId v) const { return adj_[v]; }
  bool has_edge(NodeId u, NodeId v) const;
  int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool is_connected() const;
  std::vector<std::vector<NodeId>> connected_components() const;

 private:
  int n_ = 0;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::vector<NodeId>> adj_;
};

// Directed graph over dense node ids with sorted out/in adjacency.
// Immutable after construction; self-loops are rejected, duplicates merged.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<Link> links);

  int node_count() const { return n_; }
  int link_count() const { return static_cast<int>(links_.size()); }
  const std::vector<Link>& links() const { return links_; }
  std::span<const NodeId> out_neighbors(NodeId v) const { return out_[v]; }
  std::span<const NodeId> in_neighbors(NodeId v) const { return in_[v]; }
  bool has_link(NodeId from, NodeId to) const;
  int out_degree(NodeId v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(NodeId v) const { return static_cast<int>(in_[v].size()); }

 private:
  int n_ = 0;
  std::vector<Link> links_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
};

// The wireless connectivity graph. Bidirected by construction (every
// undirected edge stands for a pair of directed links) and required to be
// connected; construction throws DisconnectedError naming the components.
class BaseTopology {
 public:
  explicit BaseTopology(UndirectedGraph g);

  int node_count() const { return g_.node_count(); }
  int max_degree() const { return g_.max_degree(); }
  const UndirectedGraph& undirected() const { return g_; }
  bool has_edge(NodeId u, NodeId v) const { return g_.has_edge(u, v); }
  // All directed links (both directions of every edge).
  Digraph full_digraph() const;

 private:
  UndirectedGraph g_;
};

bool is_strongly_connected(const Digraph& g);

// Maximum directed shortest-path hop count over ordered pairs.
// Throws NotStronglyConnectedError when some node cannot reach another.
int diameter(const Digraph& g);

// (max out-degree, max in-degree); self-loops are never stored so none are counted.
std::pair<int, int> max_degrees(const Digraph& g);

// Hop-count matrices; kUnreachable marks disconnected pairs.
std::vector<std::vector<int>> all_pairs_distances(const UndirectedGraph& g);
std::vector<std::vector<int>> all_pairs_distances(const Digraph& g);

// Maximal bridge-free subgraphs plus the bridge list. Every vertex lands in
// exactly one component; every non-bridge edge in exactly one component.
struct BridgeDecomposition {
  struct Component {
    std::vector<NodeId> vertices;                      // ascending
    std::vector<std::pair<NodeId, NodeId>> edges;      // normalized, sorted
  };
  std::vector<Component> components;                   // ordered by min vertex
  std::vector<std::pair<NodeId, NodeId>> bridges;      // normalized, sorted
};
BridgeDecomposition bridge_decomposition(const UndirectedGraph& g);

// Depth-first preorder of a connected edge set, ascending neighbor order.
// `pre` maps every visited vertex to 1..|V|; tree edges are (parent, child).
struct PreorderResult {
  std::vector<std::pair<NodeId, NodeId>> tree_edges;
  std::map<NodeId, int> pre;
};
PreorderResult dfs_preorder(const std::vector<std::pair<NodeId, NodeId>>& component_edges,
                            NodeId root);

}  // namespace sgpd
