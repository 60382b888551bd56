#include "sgpd/generators.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "sgpd/io.hpp"
#include "sgpd/rng.hpp"

namespace sgpd {

namespace {

double next_unit(std::mt19937_64& eng) { return to_unit_double(eng()); }

}  // namespace

UndirectedGraph windmill_graph(int m, int k) {
  if (m < 1 || k < 2) throw Error("windmill requires m >= 1 and k >= 2");
  int n = m * (k - 1) + 1;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int c = 0; c < m; ++c) {
    std::vector<NodeId> clique;
    clique.push_back(0);
    for (int i = 0; i < k - 1; ++i) clique.push_back(1 + c * (k - 1) + i);
    for (size_t a = 0; a < clique.size(); ++a) {
      for (size_t b = a + 1; b < clique.size(); ++b) {
        edges.emplace_back(clique[a], clique[b]);
      }
    }
  }
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph random_geometric_graph(int n, double radius, uint64_t seed) {
  if (n < 1) throw Error("node count must be positive");
  if (!(radius > 0.0)) throw Error("radius must be positive");
  std::mt19937_64 eng(seed);
  const double r2 = radius * radius;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = next_unit(eng);
      ys[i] = next_unit(eng);
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double dx = xs[i] - xs[j], dy = ys[i] - ys[j];
        if (dx * dx + dy * dy <= r2) edges.emplace_back(i, j);
      }
    }
    UndirectedGraph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw DisconnectedError("no connected geometric graph after 200 attempts");
}

UndirectedGraph random_connected_gnp(int n, double p, uint64_t seed) {
  if (n < 1) throw Error("node count must be positive");
  if (!(p > 0.0) || p > 1.0) throw Error("edge probability must lie in (0, 1]");
  std::mt19937_64 eng(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (next_unit(eng) < p) edges.emplace_back(i, j);
      }
    }
    UndirectedGraph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw DisconnectedError("no connected G(n,p) sample after 500 attempts");
}

GeneratorSpec parse_generator_spec(const std::string& text, uint64_t seed) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("generator spec needs 'kind:args'");
  std::string kind = text.substr(0, colon);
  std::string args = text.substr(colon + 1);

  GeneratorSpec spec;
  spec.seed = seed;
  if (kind == "file") {
    spec.kind = GeneratorSpec::Kind::edge_list;
    spec.path = args;
    return spec;
  }

  std::vector<std::string> parts;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);

  try {
    if (kind == "windmill") {
      if (parts.size() != 2) throw ConfigError("windmill spec needs 'windmill:M,K'");
      spec.kind = GeneratorSpec::Kind::windmill;
      spec.m = std::stoi(parts[0]);
      spec.k = std::stoi(parts[1]);
    } else if (kind == "rg") {
      if (parts.size() != 2) throw ConfigError("rg spec needs 'rg:N,RADIUS'");
      spec.kind = GeneratorSpec::Kind::random_geometric;
      spec.n = std::stoi(parts[0]);
      spec.radius = std::stod(parts[1]);
    } else if (kind == "gnp") {
      if (parts.size() != 2) throw ConfigError("gnp spec needs 'gnp:N,P'");
      spec.kind = GeneratorSpec::Kind::gnp;
      spec.n = std::stoi(parts[0]);
      spec.p = std::stod(parts[1]);
    } else {
      throw ConfigError("unknown generator kind '" + kind + "'");
    }
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad numeric argument in generator spec '" + text + "'");
  }
  return spec;
}

BaseTopology realize(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::windmill:
      return BaseTopology(windmill_graph(spec.m, spec.k));
    case GeneratorSpec::Kind::random_geometric:
      return BaseTopology(random_geometric_graph(spec.n, spec.radius, spec.seed));
    case GeneratorSpec::Kind::gnp:
      return BaseTopology(random_connected_gnp(spec.n, spec.p, spec.seed));
    case GeneratorSpec::Kind::edge_list:
      return load_topology(spec.path);
  }
  throw Error("unreachable generator kind");
}

std::string describe(const GeneratorSpec& spec) {
  std::ostringstream os;
  switch (spec.kind) {
    case GeneratorSpec::Kind::windmill:
      os << "windmill:" << spec.m << "," << spec.k;
      break;
    case GeneratorSpec::Kind::random_geometric:
      os << "rg:" << spec.n << "," << spec.radius << " seed=" << spec.seed;
      break;
    case GeneratorSpec::Kind::gnp:
      os << "gnp:" << spec.n << "," << spec.p << " seed=" << spec.seed;
      break;
    case GeneratorSpec::Kind::edge_list:
      os << "file:" << spec.path;
      break;
  }
  return os.str();
}

}  // namespace sgpd
