#include "sgpd/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sgpd {

UndirectedGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  int max_node = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    NodeId u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v)) {
      throw Error("edge list line " + std::to_string(lineno) + ": expected two indices");
    }
    if (u < 0 || v < 0) {
      throw Error("edge list line " + std::to_string(lineno) + ": negative index");
    }
    edges.emplace_back(u, v);
    max_node = std::max({max_node, u, v});
  }
  return UndirectedGraph(max_node + 1, std::move(edges));
}

BaseTopology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open topology file '" + path + "'");
  return BaseTopology(parse_edge_list(in));
}

void save_edge_list(const UndirectedGraph& g, std::ostream& out) {
  out << "# " << g.node_count() << " nodes, " << g.edge_count() << " undirected edges\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void save_edge_list(const UndirectedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  save_edge_list(g, out);
}

nlohmann::json schedule_to_json(const Schedule& s) {
  nlohmann::json slots = nlohmann::json::array();
  for (const auto& slot : s.slots) {
    nlohmann::json js = nlohmann::json::array();
    for (const Link& l : slot) js.push_back({l.from, l.to});
    slots.push_back(std::move(js));
  }
  return slots;
}

Schedule schedule_from_json(const nlohmann::json& j) {
  Schedule s;
  for (const auto& slot : j) {
    std::vector<Link> links;
    for (const auto& pair : slot) {
      links.push_back({pair.at(0).get<NodeId>(), pair.at(1).get<NodeId>()});
    }
    s.slots.push_back(std::move(links));
  }
  return s;
}

nlohmann::json design_to_json(const DesignResult& r, const std::string& topology) {
  nlohmann::json j;
  j["topology"] = topology;
  j["n"] = r.g_a.node_count();
  j["k"] = r.k;
  j["skip_step4"] = r.skip_step4;
  nlohmann::json links = nlohmann::json::array();
  for (const Link& l : r.g_a.links()) links.push_back({l.from, l.to});
  j["links"] = std::move(links);
  j["schedule"] = schedule_to_json(r.schedule);
  j["tau"] = r.tau;
  j["diameter"] = r.diameter;
  j["max_out_degree"] = r.max_out;
  j["max_in_degree"] = r.max_in;
  j["min_mixing_weight"] = r.min_mixing_weight;
  j["log_design_objective"] = r.log_design_objective;
  j["design_objective"] = linear_from_log(r.log_design_objective);
  j["log_slot_objective"] = r.log_slot_objective;
  j["log_augmentation_budget"] = r.log_augmentation_budget;
  return j;
}

Digraph links_from_design_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<Link> links;
  for (const auto& pair : j.at("links")) {
    links.push_back({pair.at(0).get<NodeId>(), pair.at(1).get<NodeId>()});
  }
  return Digraph(n, std::move(links));
}

void save_mixing_matrix(const MixingMatrix& w, std::ostream& out) {
  out << w.size() << "\n";
  out << std::setprecision(17);
  const auto& m = w.matrix();
  for (int j = 0; j < m.outerSize(); ++j) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, j); it; ++it) {
      out << it.row() << " " << it.col() << " " << it.value() << "\n";
    }
  }
}

void save_mixing_matrix(const MixingMatrix& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  save_mixing_matrix(w, out);
}

void write_trace_csv(const Trace& t, std::ostream& out) {
  out << "iter,slots,grad_norm_sq,running_avg_grad_norm_sq,consensus_err,loss\n";
  out << std::setprecision(17);
  for (const auto& r : t.records) {
    out << r.iter << "," << r.slots << "," << r.grad_norm_sq << "," << r.running_avg
        << "," << r.consensus_err << "," << r.loss << "\n";
  }
}

void write_trace_csv(const Trace& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_trace_csv(t, out);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace sgpd
