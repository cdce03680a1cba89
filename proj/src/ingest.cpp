#include "netout/ingest.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace netout {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

HeteroGraph load_edge_list(std::istream& in) {
  HeteroGraph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() != 5 && fields.size() != 6) {
      raise(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 5 or 6 fields, got " +
                                       std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < 5; ++i) {
      if (fields[i].empty())
        raise(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": empty field");
    }
    double weight = 1.0;
    if (fields.size() == 6) {
      const auto& w = fields[5];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (ec != std::errc{} || ptr != w.data() + w.size() || weight < 0) {
        raise(ErrorKind::ParseError,
              "line " + std::to_string(line_no) + ": bad weight '" + std::string(w) + "'");
      }
    }
    g.add_node(fields[0], fields[1]);
    g.add_node(fields[2], fields[3]);
    g.add_edge(fields[0], fields[2], fields[4], weight);
  }
  g.freeze();
  return g;
}

HeteroGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::ParseError, "cannot open '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(const HeteroGraph& graph, std::ostream& out) {
  for (const Edge& e : graph.edges()) {
    out << graph.node_label(e.src) << '\t' << graph.type_name(graph.node_type(e.src)) << '\t'
        << graph.node_label(e.dst) << '\t' << graph.type_name(graph.node_type(e.dst)) << '\t'
        << graph.edge_type_name(e.edge_type);
    std::ostringstream w;
    w << e.weight;
    out << '\t' << w.str() << '\n';
  }
}

GraphStats graph_stats(const HeteroGraph& graph) {
  GraphStats stats;
  stats.node_count = graph.node_count();
  stats.edge_count = graph.edge_count();
  stats.avg_degree =
      graph.node_count() == 0 ? 0.0 : 2.0 * static_cast<double>(graph.edge_count()) / graph.node_count();
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    auto& ts = stats.per_type[graph.type_name(graph.node_type(n))];
    ts.node_count += 1;
    std::size_t d = graph.degree(n);
    const std::string& label = graph.node_label(n);
    if (d > ts.max_degree || (d == ts.max_degree && (ts.max_degree_node.empty() || label < ts.max_degree_node))) {
      ts.max_degree = d;
      ts.max_degree_node = label;
    }
  }
  return stats;
}

}  // namespace netout
