#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "netout/graph.hpp"
#include "netout/motif.hpp"
#include "netout/query.hpp"

namespace netout {

/// Half-path instance counts from one start node: reached node -> number of
/// distinct walks. Sorted by node id; zero-count nodes are absent.
using NodeCounts = std::vector<std::pair<NodeId, std::uint64_t>>;

/// Reachability structure for one half path: start node -> NodeCounts.
using ReachabilityMap = std::unordered_map<NodeId, NodeCounts>;

/// Layered frontier expansion along the half path's type sequence: layer i+1
/// counts are sums of layer-i counts over type-conforming edges, one
/// contribution per parallel edge. Start nodes must carry the leading type
/// (TypeMismatch otherwise); duplicate start nodes are computed once.
/// Counts are exact; overflow raises PathCountOverflow.
ReachabilityMap reachable_nodes(const HeteroGraph& graph, std::span<const NodeId> starts,
                                const ResolvedPath& half_path, unsigned threads = 1);

/// Full symmetric-path counts between node pairs, assembled from half-path
/// reachability by midpoint products (odd lengths) or center-edge products
/// (even lengths). Also carries the half-vector dot products and squared
/// norms that cosine similarity needs.
class PairCounts {
public:
  PairCounts(const HeteroGraph& graph, TypeId end_type, double weight)
      : graph_(&graph), end_type_(end_type), weight_(weight) {}

  const HeteroGraph& graph() const { return *graph_; }
  TypeId end_type() const { return end_type_; }
  double weight() const { return weight_; }

  /// Number of full symmetric-path instances between a and b (= between b
  /// and a). Absent pairs count zero.
  std::uint64_t count(NodeId a, NodeId b) const { return lookup(full_, a, b); }

  /// Half-vector dot product; equals count() for odd-length paths.
  std::uint64_t dot(NodeId a, NodeId b) const {
    return dot_is_full_ ? lookup(full_, a, b) : lookup(dots_, a, b);
  }

  /// Squared L2 norm of the half-path reachability vector.
  double norm_sq(NodeId n) const {
    auto it = norms_sq_.find(n);
    return it == norms_sq_.end() ? 0.0 : it->second;
  }

  std::size_t pair_count() const { return full_.size(); }

private:
  friend PairCounts pair_counts(const HeteroGraph&, const ResolvedPath&, const ReachabilityMap&,
                                const ReachabilityMap&);

  static std::uint64_t key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
  static std::uint64_t lookup(const std::unordered_map<std::uint64_t, std::uint64_t>& m, NodeId a,
                              NodeId b) {
    auto it = m.find(key(a, b));
    return it == m.end() ? 0 : it->second;
  }

  const HeteroGraph* graph_;
  TypeId end_type_;
  double weight_;
  bool dot_is_full_ = true;
  std::unordered_map<std::uint64_t, std::uint64_t> full_;
  std::unordered_map<std::uint64_t, std::uint64_t> dots_;
  std::unordered_map<NodeId, double> norms_sq_;
};

/// Joins two reachability maps built over the same half path into
/// pairwise full-path counts covering (keys(candidates) ∪ keys(references))².
/// Candidate-to-reference entries are count(a, b) with a from the candidate
/// side; within-candidate entries are count(a, a'); both sides may alias one
/// map.
PairCounts pair_counts(const HeteroGraph& graph, const ResolvedPath& full_path,
                       const ReachabilityMap& candidates, const ReachabilityMap& references);

/// Same-type-slot correction for motif-level self counts: total walk count
/// of the symmetric path over the instance's nodes of the path's end type,
/// self pairs plus ordered cross pairs.
std::uint64_t motif_self_paths(const MotifInstance& instance, const PairCounts& counts);

}  // namespace netout
