#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "netout/graph.hpp"

namespace netout {

struct TypeStats {
  std::size_t node_count = 0;
  std::string max_degree_node;  // lexicographically smallest label among ties
  std::size_t max_degree = 0;
};

struct GraphStats {
  std::map<std::string, TypeStats> per_type;  // keyed by type name
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double avg_degree = 0.0;  // 2|E|/|V|, 0 for the empty graph
};

/// Loads a tab-separated edge list:
///   src_id<TAB>src_type<TAB>dst_id<TAB>dst_type<TAB>edge_type[<TAB>weight]
/// Lines starting with '#' and blank lines are skipped. Duplicate identical
/// lines produce parallel edges. The returned graph is frozen.
HeteroGraph load_edge_list(std::istream& in);
HeteroGraph load_edge_list_file(const std::string& path);

/// Writes the graph back in the same edge-list format, one line per stored
/// edge in insertion order. Reloading the output yields an isomorphic graph.
void write_edge_list(const HeteroGraph& graph, std::ostream& out);

GraphStats graph_stats(const HeteroGraph& graph);

}  // namespace netout
