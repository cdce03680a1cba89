#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "netout/error.hpp"

namespace netout {

using NodeId = std::uint32_t;
using TypeId = std::uint16_t;
using EdgeTypeId = std::uint16_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

/// One directed half of an undirected edge, kept in the adjacency index of
/// its source endpoint. Parallel edges produce one Arc each.
struct Arc {
  NodeId neighbor;
  EdgeTypeId edge_type;
  double weight;
};

struct Edge {
  NodeId src;
  NodeId dst;
  EdgeTypeId edge_type;
  double weight;
};

/// Typed-node, typed-edge undirected multigraph. Nodes carry a string label
/// and a node type; adjacency is partitioned by neighbor node type so that
/// meta-path traversal never scans foreign-type neighbors.
///
/// Mutable while building; freeze() fixes deterministic adjacency order and
/// makes the graph safe for concurrent readers.
class HeteroGraph {
public:
  HeteroGraph() = default;

  /// Adds a node with the given label and type name. Re-adding the same
  /// label with the same type is a no-op returning the existing node;
  /// re-adding with a different type throws TypeConflict.
  NodeId add_node(std::string_view label, std::string_view type_name);

  /// Adds an undirected edge and returns its index into edges(). Both
  /// endpoints must exist (MissingNode). Duplicate calls create parallel
  /// edges.
  std::size_t add_edge(std::string_view src, std::string_view dst, std::string_view edge_type,
                       double weight = 1.0);
  std::size_t add_edge(NodeId src, NodeId dst, EdgeTypeId edge_type, double weight = 1.0);

  /// Sorts adjacency deterministically and forbids further mutation.
  void freeze();
  bool frozen() const { return frozen_; }

  // --- lookups -------------------------------------------------------------

  std::optional<NodeId> find_node(std::string_view label) const;
  std::optional<TypeId> find_type(std::string_view name) const;
  std::optional<EdgeTypeId> find_edge_type(std::string_view name) const;

  /// find_node that throws MissingNode instead of returning nullopt.
  NodeId node(std::string_view label) const;

  TypeId node_type(NodeId n) const { return node_types_[n]; }
  const std::string& node_label(NodeId n) const { return node_labels_[n]; }
  const std::string& type_name(TypeId t) const { return type_names_[t]; }
  const std::string& edge_type_name(EdgeTypeId t) const { return edge_type_names_[t]; }

  std::size_t node_count() const { return node_labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t type_count() const { return type_names_.size(); }
  std::size_t edge_type_count() const { return edge_type_names_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodeId> nodes_of_type(TypeId t) const;

  /// Neighbors of `n` having node type `t`, one Arc per parallel edge.
  std::span<const Arc> neighbors_by_type(NodeId n, TypeId t) const;

  /// Label-based variant from the public surface; throws MissingNode for an
  /// unknown node label. An unknown type name simply has no neighbors.
  std::vector<std::pair<std::string, double>> neighbors_by_type(std::string_view node,
                                                                std::string_view type_name) const;

  /// Total degree of n = number of incident edge ends (parallel edges count
  /// with multiplicity).
  std::size_t degree(NodeId n) const;

  bool has_edge_between(NodeId a, NodeId b) const;
  bool has_edge_between(NodeId a, NodeId b, EdgeTypeId edge_type) const;

  /// True when at least one edge joins the two node types (in either order).
  bool types_cooccur(TypeId a, TypeId b) const;

private:
  struct AdjBucket {
    TypeId neighbor_type;
    std::vector<Arc> arcs;
  };

  void check_mutable() const;
  std::vector<Arc>& bucket_for(NodeId n, TypeId t);

  bool frozen_ = false;

  std::vector<std::string> type_names_;
  std::unordered_map<std::string, TypeId> type_ids_;

  std::vector<std::string> edge_type_names_;
  std::unordered_map<std::string, EdgeTypeId> edge_type_ids_;

  std::vector<std::string> node_labels_;
  std::vector<TypeId> node_types_;
  std::unordered_map<std::string, NodeId> node_ids_;
  std::vector<std::vector<NodeId>> nodes_by_type_;

  std::vector<std::vector<AdjBucket>> adjacency_;
  std::vector<Edge> edges_;
};

/// Removes every node whose total degree exceeds its type's threshold, along
/// with incident edges, and returns the filtered graph (frozen). Thresholds
/// are keyed by type name; types without an entry are never filtered.
/// Removal is decided on the input graph's degrees in a single pass.
HeteroGraph filter_high_degree(const HeteroGraph& graph,
                               const std::map<std::string, std::uint64_t>& thresholds);

}  // namespace netout
