#pragma once

#include <cstdint>
#include <string>

#include "sgpd/graph.hpp"

namespace sgpd {

// m cliques of k nodes sharing node 0 as the common hub.
// Node count m*(k-1)+1, edge count m*k*(k-1)/2.
UndirectedGraph windmill_graph(int m, int k);

// n points uniform in the unit square, edges within `radius`; redraws until
// connected (bounded retries, then DisconnectedError). Deterministic in seed.
UndirectedGraph random_geometric_graph(int n, double radius, uint64_t seed);

// Erdos-Renyi G(n, p) conditioned on connectivity (bounded retries).
UndirectedGraph random_connected_gnp(int n, double p, uint64_t seed);

// Topology source spec. Text forms:
//   "windmill:M,K"   e.g. windmill:3,21
//   "rg:N,RADIUS"    e.g. rg:33,0.5     (seeded by the caller)
//   "gnp:N,P"        e.g. gnp:12,0.4
//   "file:PATH"
struct GeneratorSpec {
  enum class Kind { windmill, random_geometric, gnp, edge_list };
  Kind kind = Kind::windmill;
  int m = 0;
  int k = 0;
  int n = 0;
  double radius = 0.0;
  double p = 0.0;
  uint64_t seed = 0;
  std::string path;
};

GeneratorSpec parse_generator_spec(const std::string& text, uint64_t seed);
BaseTopology realize(const GeneratorSpec& spec);
std::string describe(const GeneratorSpec& spec);

}  // namespace sgpd
