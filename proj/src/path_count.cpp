#include "netout/path_count.hpp"

#include <algorithm>
#include <set>

#include "netout/parallel.hpp"

namespace netout {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    raise(ErrorKind::PathCountOverflow, "path count exceeds 64 bits");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    raise(ErrorKind::PathCountOverflow, "path count exceeds 64 bits");
  return r;
}

NodeCounts expand_one(const HeteroGraph& graph, const ResolvedPath& half, NodeId start) {
  std::unordered_map<NodeId, std::uint64_t> layer{{start, 1}};
  for (std::size_t step = 1; step < half.types.size(); ++step) {
    std::unordered_map<NodeId, std::uint64_t> next;
    for (const auto& [node, count] : layer) {
      for (const Arc& arc : graph.neighbors_by_type(node, half.types[step])) {
        if (!half.edge_types.empty() && arc.edge_type != half.edge_types[step - 1]) continue;
        auto [it, fresh] = next.emplace(arc.neighbor, count);
        if (!fresh) it->second = checked_add(it->second, count);
      }
    }
    layer = std::move(next);
  }
  NodeCounts out(layer.begin(), layer.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ReachabilityMap reachable_nodes(const HeteroGraph& graph, std::span<const NodeId> starts,
                                const ResolvedPath& half_path, unsigned threads) {
  if (half_path.types.empty()) raise(ErrorKind::TypeMismatch, "empty half path");
  std::vector<NodeId> unique;
  std::set<NodeId> seen;
  for (NodeId n : starts) {
    if (graph.node_type(n) != half_path.types.front()) {
      raise(ErrorKind::TypeMismatch, "start node '" + graph.node_label(n) + "' is not of type '" +
                                         graph.type_name(half_path.types.front()) + "'");
    }
    if (seen.insert(n).second) unique.push_back(n);
  }

  std::vector<NodeCounts> slots(unique.size());
  parallel_for(unique.size(), threads,
               [&](std::size_t i) { slots[i] = expand_one(graph, half_path, unique[i]); });

  ReachabilityMap out;
  out.reserve(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) out.emplace(unique[i], std::move(slots[i]));
  return out;
}

PairCounts pair_counts(const HeteroGraph& graph, const ResolvedPath& full_path,
                       const ReachabilityMap& candidates, const ReachabilityMap& references) {
  PairCounts pc(graph, full_path.types.front(), full_path.weight);
  std::size_t len = full_path.types.size();
  bool odd = len % 2 == 1;

  // Union of both sides in sorted order; shared nodes have identical
  // half-path vectors because both maps were built over the same half path.
  std::vector<const NodeCounts*> vecs;
  std::vector<NodeId> nodes;
  {
    std::set<NodeId> all;
    for (const auto& [n, v] : candidates) all.insert(n);
    for (const auto& [n, v] : references) all.insert(n);
    for (NodeId n : all) {
      auto it = candidates.find(n);
      vecs.push_back(it != candidates.end() ? &it->second : &references.at(n));
      nodes.push_back(n);
    }
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double s = 0;
    for (const auto& [mid, c] : *vecs[i]) s += static_cast<double>(c) * static_cast<double>(c);
    pc.norms_sq_.emplace(nodes[i], s);
  }

  // Inverted midpoint index: midpoint -> (endpoint, half count), endpoints in
  // ascending id order so joined keys come out canonical.
  std::unordered_map<NodeId, std::vector<std::pair<NodeId, std::uint64_t>>> by_midpoint;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& [mid, c] : *vecs[i]) by_midpoint[mid].emplace_back(nodes[i], c);
  }

  // Shared-midpoint products: for odd paths these are the full counts; for
  // even paths they are the cosine dot products only.
  auto& node_join = odd ? pc.full_ : pc.dots_;
  for (const auto& [mid, list] : by_midpoint) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i; j < list.size(); ++j) {
        std::uint64_t prod = checked_mul(list[i].second, list[j].second);
        auto [it, fresh] = node_join.emplace(PairCounts::key(list[i].first, list[j].first), prod);
        if (!fresh) it->second = checked_add(it->second, prod);
      }
    }
  }
  pc.dot_is_full_ = odd;

  if (!odd) {
    // Even length: the two frontiers meet across an edge between the two
    // center positions. Walk every directed center arc once; keeping only
    // ordered endpoint pairs (x <= y) counts each x->y walk family exactly
    // once under the canonical pair key.
    std::size_t half_len = len / 2;
    TypeId center_type = full_path.types[half_len];
    bool constrained = !full_path.edge_types.empty();
    EdgeTypeId center_edge = constrained ? full_path.edge_types[half_len - 1] : EdgeTypeId{0};
    for (const auto& [d1, list1] : by_midpoint) {
      for (const Arc& arc : graph.neighbors_by_type(d1, center_type)) {
        if (constrained && arc.edge_type != center_edge) continue;
        auto it2 = by_midpoint.find(arc.neighbor);
        if (it2 == by_midpoint.end()) continue;
        for (const auto& [x, cx] : list1) {
          for (const auto& [y, cy] : it2->second) {
            if (x > y) continue;
            std::uint64_t prod = checked_mul(cx, cy);
            auto [it, fresh] = pc.full_.emplace(PairCounts::key(x, y), prod);
            if (!fresh) it->second = checked_add(it->second, prod);
          }
        }
      }
    }
  }

  return pc;
}

std::uint64_t motif_self_paths(const MotifInstance& instance, const PairCounts& counts) {
  const HeteroGraph& g = counts.graph();
  std::vector<NodeId> group;
  for (NodeId n : instance.nodes) {
    if (g.node_type(n) == counts.end_type()) group.push_back(n);
  }
  std::uint64_t total = 0;
  for (NodeId x : group) {
    for (NodeId y : group) total = checked_add(total, counts.count(x, y));
  }
  return total;
}

}  // namespace netout
