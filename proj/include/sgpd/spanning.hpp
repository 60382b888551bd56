#pragma once

#include <utility>
#include <vector>

#include "sgpd/graph.hpp"

namespace sgpd {

// A connected spanning subgraph of some base graph; is_tree marks the
// exactly-n-minus-1-edges case.
struct SpanningGraph {
  int n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;  // normalized, sorted
  bool is_tree = false;

  UndirectedGraph as_graph() const { return UndirectedGraph(n, edges); }
};

// Approximate minimum-degree spanning tree: local-improvement heuristic after
// Fürer & Raghavachari, starting from a BFS tree rooted at node 0. At the
// returned fixpoint no single edge swap targeting a vertex of degree >= k-1
// (k the current maximum degree) reduces its degree without creating another
// vertex of that degree, which carries the max-degree <= optimum + 1 bound.
SpanningGraph min_degree_spanning_tree(const UndirectedGraph& g);

// Greedily adds K base edges, each time the non-tree edge whose endpoints are
// farthest apart in the working graph (distances recomputed after every
// addition; ties broken by lexicographically smallest edge). Throws
// AddsExhaustedError when candidates run out early.
SpanningGraph add_k_edges(const SpanningGraph& t, const UndirectedGraph& g, int k);

}  // namespace sgpd
