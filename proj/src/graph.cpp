#include "netout/graph.hpp"

#include <algorithm>

namespace netout {

namespace {

template <typename Map, typename Vec>
std::uint16_t intern(Map& ids, Vec& names, std::string_view name) {
  auto it = ids.find(std::string(name));
  if (it != ids.end()) return it->second;
  auto id = static_cast<std::uint16_t>(names.size());
  names.emplace_back(name);
  ids.emplace(std::string(name), id);
  return id;
}

}  // namespace

void HeteroGraph::check_mutable() const {
  if (frozen_) raise(ErrorKind::FrozenGraph, "graph is frozen");
}

NodeId HeteroGraph::add_node(std::string_view label, std::string_view type_name) {
  check_mutable();
  TypeId t = intern(type_ids_, type_names_, type_name);
  auto it = node_ids_.find(std::string(label));
  if (it != node_ids_.end()) {
    if (node_types_[it->second] != t) {
      raise(ErrorKind::TypeConflict, "node '" + std::string(label) + "' already has type '" +
                                         type_names_[node_types_[it->second]] + "'");
    }
    return it->second;
  }
  auto id = static_cast<NodeId>(node_labels_.size());
  node_labels_.emplace_back(label);
  node_types_.push_back(t);
  node_ids_.emplace(std::string(label), id);
  if (nodes_by_type_.size() <= t) nodes_by_type_.resize(t + 1);
  nodes_by_type_[t].push_back(id);
  adjacency_.emplace_back();
  return id;
}

std::vector<Arc>& HeteroGraph::bucket_for(NodeId n, TypeId t) {
  auto& buckets = adjacency_[n];
  for (auto& b : buckets) {
    if (b.neighbor_type == t) return b.arcs;
  }
  buckets.push_back(AdjBucket{t, {}});
  return buckets.back().arcs;
}

std::size_t HeteroGraph::add_edge(std::string_view src, std::string_view dst,
                                  std::string_view edge_type, double weight) {
  check_mutable();
  auto s = find_node(src);
  if (!s) raise(ErrorKind::MissingNode, "unknown edge endpoint '" + std::string(src) + "'");
  auto d = find_node(dst);
  if (!d) raise(ErrorKind::MissingNode, "unknown edge endpoint '" + std::string(dst) + "'");
  EdgeTypeId et = intern(edge_type_ids_, edge_type_names_, edge_type);
  return add_edge(*s, *d, et, weight);
}

std::size_t HeteroGraph::add_edge(NodeId src, NodeId dst, EdgeTypeId edge_type, double weight) {
  check_mutable();
  if (src >= node_count() || dst >= node_count())
    raise(ErrorKind::MissingNode, "edge endpoint out of range");
  if (edge_type >= edge_type_names_.size())
    raise(ErrorKind::MissingNode, "unknown edge type id");
  edges_.push_back(Edge{src, dst, edge_type, weight});
  bucket_for(src, node_types_[dst]).push_back(Arc{dst, edge_type, weight});
  if (src != dst) bucket_for(dst, node_types_[src]).push_back(Arc{src, edge_type, weight});
  return edges_.size() - 1;
}

void HeteroGraph::freeze() {
  if (frozen_) return;
  for (auto& buckets : adjacency_) {
    std::sort(buckets.begin(), buckets.end(),
              [](const AdjBucket& a, const AdjBucket& b) { return a.neighbor_type < b.neighbor_type; });
    for (auto& b : buckets) {
      std::sort(b.arcs.begin(), b.arcs.end(), [](const Arc& x, const Arc& y) {
        return x.neighbor != y.neighbor ? x.neighbor < y.neighbor : x.edge_type < y.edge_type;
      });
    }
  }
  frozen_ = true;
}

std::optional<NodeId> HeteroGraph::find_node(std::string_view label) const {
  auto it = node_ids_.find(std::string(label));
  if (it == node_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<TypeId> HeteroGraph::find_type(std::string_view name) const {
  auto it = type_ids_.find(std::string(name));
  if (it == type_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeTypeId> HeteroGraph::find_edge_type(std::string_view name) const {
  auto it = edge_type_ids_.find(std::string(name));
  if (it == edge_type_ids_.end()) return std::nullopt;
  return it->second;
}

NodeId HeteroGraph::node(std::string_view label) const {
  auto n = find_node(label);
  if (!n) raise(ErrorKind::MissingNode, "unknown node '" + std::string(label) + "'");
  return *n;
}

std::span<const NodeId> HeteroGraph::nodes_of_type(TypeId t) const {
  if (t >= nodes_by_type_.size()) return {};
  return nodes_by_type_[t];
}

std::span<const Arc> HeteroGraph::neighbors_by_type(NodeId n, TypeId t) const {
  for (const auto& b : adjacency_[n]) {
    if (b.neighbor_type == t) return b.arcs;
  }
  return {};
}

std::vector<std::pair<std::string, double>> HeteroGraph::neighbors_by_type(
    std::string_view node_label, std::string_view type_name) const {
  NodeId n = node(node_label);
  auto t = find_type(type_name);
  std::vector<std::pair<std::string, double>> out;
  if (!t) return out;
  for (const Arc& a : neighbors_by_type(n, *t)) out.emplace_back(node_labels_[a.neighbor], a.weight);
  return out;
}

std::size_t HeteroGraph::degree(NodeId n) const {
  std::size_t d = 0;
  for (const auto& b : adjacency_[n]) d += b.arcs.size();
  return d;
}

bool HeteroGraph::has_edge_between(NodeId a, NodeId b) const {
  for (const Arc& arc : neighbors_by_type(a, node_types_[b])) {
    if (arc.neighbor == b) return true;
  }
  return false;
}

bool HeteroGraph::has_edge_between(NodeId a, NodeId b, EdgeTypeId edge_type) const {
  for (const Arc& arc : neighbors_by_type(a, node_types_[b])) {
    if (arc.neighbor == b && arc.edge_type == edge_type) return true;
  }
  return false;
}

bool HeteroGraph::types_cooccur(TypeId a, TypeId b) const {
  for (const Edge& e : edges_) {
    TypeId s = node_types_[e.src];
    TypeId d = node_types_[e.dst];
    if ((s == a && d == b) || (s == b && d == a)) return true;
  }
  return false;
}

HeteroGraph filter_high_degree(const HeteroGraph& graph,
                               const std::map<std::string, std::uint64_t>& thresholds) {
  // Thresholds by interned type; absent means keep everything of that type.
  std::vector<std::optional<std::uint64_t>> limit(graph.type_count());
  for (const auto& [type_name, value] : thresholds) {
    if (auto t = graph.find_type(type_name)) limit[*t] = value;
  }

  std::vector<bool> keep(graph.node_count(), true);
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    const auto& lim = limit[graph.node_type(n)];
    if (lim && graph.degree(n) > *lim) keep[n] = false;
  }

  HeteroGraph out;
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    if (keep[n]) out.add_node(graph.node_label(n), graph.type_name(graph.node_type(n)));
  }
  for (const Edge& e : graph.edges()) {
    if (keep[e.src] && keep[e.dst]) {
      out.add_edge(graph.node_label(e.src), graph.node_label(e.dst),
                   graph.edge_type_name(e.edge_type), e.weight);
    }
  }
  out.freeze();
  return out;
}

}  // namespace netout
