#include "sgpd/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sgpd {

int ConflictGraph::max_degree() const {
  int d = 0;
  for (const auto& a : adj) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool conflicts(const Link& a, const Link& b, const UndirectedGraph& interference) {
  // Half-duplex: a node cannot transmit and receive in the same slot.
  if (a.from == b.to || a.to == b.from) return true;
  // Interference applies only across distinct transmitters; a receiver must
  // not be adjacent to the other transmitter.
  if (a.from != b.from &&
      (interference.has_edge(a.from, b.to) || interference.has_edge(b.from, a.to))) {
    return true;
  }
  return false;
}

ConflictGraph build_conflict_graph(const Digraph& g_a, const BaseTopology& base) {
  return build_conflict_graph(g_a, base, base.undirected());
}

ConflictGraph build_conflict_graph(const Digraph& g_a, const BaseTopology& base,
                                   const UndirectedGraph& interference) {
  for (const Link& l : g_a.links()) {
    if (!base.has_edge(l.from, l.to)) {
      throw Error("activated link (" + std::to_string(l.from) + "," +
                  std::to_string(l.to) + ") is not a base topology link");
    }
  }
  ConflictGraph cg;
  cg.vertices = g_a.links();  // already sorted and unique
  int m = static_cast<int>(cg.vertices.size());
  cg.adj.assign(m, {});
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (conflicts(cg.vertices[i], cg.vertices[j], interference)) {
        cg.adj[i].push_back(j);
        cg.adj[j].push_back(i);
      }
    }
  }
  return cg;
}

Schedule greedy_color(const ConflictGraph& cg) {
  int m = static_cast<int>(cg.vertices.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cg.degree(a) != cg.degree(b)) return cg.degree(a) > cg.degree(b);
    return cg.vertices[a] < cg.vertices[b];
  });

  std::vector<int> color(m, -1);
  int ncolors = 0;
  std::vector<char> used;
  for (int v : order) {
    used.assign(ncolors + 1, 0);
    for (int u : cg.adj[v]) {
      if (color[u] >= 0) used[color[u]] = 1;
    }
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    ncolors = std::max(ncolors, c + 1);
  }

  Schedule s;
  s.slots.assign(ncolors, {});
  for (int v = 0; v < m; ++v) s.slots[color[v]].push_back(cg.vertices[v]);
  for (auto& slot : s.slots) std::sort(slot.begin(), slot.end());
  return s;
}

namespace {

bool colorable(const std::vector<uint32_t>& adj_mask, int k) {
  int m = static_cast<int>(adj_mask.size());
  std::vector<int> color(m, -1);
  // Backtracking with symmetry breaking: vertex i may open at most one new color.
  int v = 0;
  std::vector<int> max_used(m + 1, 0);
  while (true) {
    if (v == m) return true;
    int start = color[v] + 1;
    color[v] = -1;
    int limit = std::min(k, max_used[v] + 1);
    int chosen = -1;
    for (int c = start; c < limit; ++c) {
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if ((adj_mask[v] >> u & 1u) && color[u] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen = c;
        break;
      }
    }
    if (chosen >= 0) {
      color[v] = chosen;
      max_used[v + 1] = std::max(max_used[v], chosen + 1);
      ++v;
    } else {
      if (v == 0) return false;
      --v;
    }
  }
}

}  // namespace

int chromatic_number_exact(const ConflictGraph& cg) {
  int m = static_cast<int>(cg.vertices.size());
  if (m > 14) {
    throw TooLargeError("exact chromatic number limited to 14 vertices, got " +
                        std::to_string(m));
  }
  if (m == 0) return 0;

  // Descending-degree order tightens the symmetry-broken search.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cg.degree(a) != cg.degree(b)) return cg.degree(a) > cg.degree(b);
    return a < b;
  });
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[order[i]] = i;
  std::vector<uint32_t> mask(m, 0);
  for (int v = 0; v < m; ++v) {
    for (int u : cg.adj[v]) mask[pos[v]] |= 1u << pos[u];
  }

  for (int k = 1; k <= m; ++k) {
    if (colorable(mask, k)) return k;
  }
  return m;
}

long long conflict_degree_bound(const Digraph& g_a, const BaseTopology& base) {
  auto [dout, din] = max_degrees(g_a);
  return static_cast<long long>(base.max_degree() + 1) * (dout + din);
}

bool validate_schedule(const Schedule& s, const ConflictGraph& cg) {
  std::vector<Link> all;
  for (const auto& slot : s.slots) all.insert(all.end(), slot.begin(), slot.end());
  std::sort(all.begin(), all.end());
  if (all != cg.vertices) return false;

  // Index links for adjacency lookups.
  auto index_of = [&](const Link& l) {
    auto it = std::lower_bound(cg.vertices.begin(), cg.vertices.end(), l);
    return static_cast<int>(it - cg.vertices.begin());
  };
  for (const auto& slot : s.slots) {
    for (size_t i = 0; i < slot.size(); ++i) {
      int vi = index_of(slot[i]);
      for (size_t j = i + 1; j < slot.size(); ++j) {
        int vj = index_of(slot[j]);
        if (std::binary_search(cg.adj[vi].begin(), cg.adj[vi].end(), vj)) return false;
      }
    }
  }
  return true;
}

}  // namespace sgpd
