#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "sgpd/design.hpp"
#include "sgpd/graph.hpp"
#include "sgpd/mixing.hpp"
#include "sgpd/schedule.hpp"
#include "sgpd/sim.hpp"

namespace sgpd {

// Edge-list text format: one `i j` pair per line, 0-based, '#' comments and
// blank lines ignored. Node count is the largest index + 1. Each listed edge
// stands for both directed links.
UndirectedGraph parse_edge_list(std::istream& in);
BaseTopology load_topology(const std::string& path);
void save_edge_list(const UndirectedGraph& g, std::ostream& out);
void save_edge_list(const UndirectedGraph& g, const std::string& path);

// Schedule as a JSON array of slots, each slot an array of [from, to] pairs.
nlohmann::json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const nlohmann::json& j);

nlohmann::json design_to_json(const DesignResult& r, const std::string& topology);
// Rebuilds the activated graph from an emitted design document.
Digraph links_from_design_json(const nlohmann::json& j);

// Coordinate text: header line `n`, then `i j value` per nonzero.
void save_mixing_matrix(const MixingMatrix& w, std::ostream& out);
void save_mixing_matrix(const MixingMatrix& w, const std::string& path);

void write_trace_csv(const Trace& t, std::ostream& out);
void write_trace_csv(const Trace& t, const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sgpd
