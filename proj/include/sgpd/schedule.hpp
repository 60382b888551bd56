#pragma once

#include <cstdint>
#include <vector>

#include "sgpd/graph.hpp"

namespace sgpd {

// Conflict graph of an activated link set: one vertex per directed link,
// one edge per pair that cannot share a transmission slot.
struct ConflictGraph {
  std::vector<Link> vertices;              // sorted, unique
  std::vector<std::vector<int>> adj;       // sorted index lists, symmetric

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int max_degree() const;
};

// Two distinct links conflict when they violate half-duplex operation
// (a transmitter cannot receive, a receiver cannot transmit in the same slot)
// or when a receiver is within interference range of the other transmitter.
// Links sharing a transmitter never conflict: one broadcast serves them all.
bool conflicts(const Link& a, const Link& b, const UndirectedGraph& interference);

// Conflict graph of g_a's links. Interference range defaults to the base
// connectivity graph; pass a separate graph to override. Every link of g_a
// must be a directed version of a base edge.
ConflictGraph build_conflict_graph(const Digraph& g_a, const BaseTopology& base);
ConflictGraph build_conflict_graph(const Digraph& g_a, const BaseTopology& base,
                                   const UndirectedGraph& interference);

// Collision-free slot assignment: slots partition the link set and no slot
// holds a conflicting pair.
struct Schedule {
  std::vector<std::vector<Link>> slots;
  int tau() const { return static_cast<int>(slots.size()); }
};

// Greedy coloring, links visited in descending conflict degree (ties by
// lexicographic link order). Uses at most max_degree + 1 slots.
Schedule greedy_color(const ConflictGraph& cg);

// Exact chromatic number by exhaustive search; test/verification oracle only.
// Throws TooLargeError above 14 vertices.
int chromatic_number_exact(const ConflictGraph& cg);

// Closed-form bound on the conflict-graph maximum degree:
// (D + 1) * (max out-degree + max in-degree), D the base maximum degree.
long long conflict_degree_bound(const Digraph& g_a, const BaseTopology& base);

// True iff the slots partition cg's vertex set and each slot is independent.
bool validate_schedule(const Schedule& s, const ConflictGraph& cg);

}  // namespace sgpd
