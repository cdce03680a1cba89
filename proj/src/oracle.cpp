#include "netout/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <unordered_map>

namespace netout {
namespace oracle {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorKind::PathCountOverflow, "oracle count overflow");
  return r;
}

void check_limits(const HeteroGraph& graph, std::size_t path_len, const OracleLimits& limits) {
  if (graph.node_count() > limits.max_nodes) {
    raise(ErrorKind::OracleBoundExceeded,
          "graph has " + std::to_string(graph.node_count()) + " nodes (limit " +
              std::to_string(limits.max_nodes) + ")");
  }
  if (path_len > limits.max_path_len) {
    raise(ErrorKind::OracleBoundExceeded, "path length " + std::to_string(path_len) + " (limit " +
                                              std::to_string(limits.max_path_len) + ")");
  }
}

void dfs_walk(const HeteroGraph& graph, const ResolvedPath& path, std::size_t depth,
              std::vector<NodeId>& walk, PathEnumeration& out, const OracleLimits& limits,
              bool collect) {
  if (depth == path.types.size()) {
    NodeId end = walk.back();
    auto [it, fresh] = out.counts.emplace(end, 1);
    if (!fresh) it->second = checked_add(it->second, 1);
    if (collect) {
      if (out.sequences.size() >= limits.max_sequences)
        raise(ErrorKind::OracleBoundExceeded, "too many walk sequences");
      out.sequences.push_back(walk);
    }
    return;
  }
  for (const Arc& arc : graph.neighbors_by_type(walk.back(), path.types[depth])) {
    if (!path.edge_types.empty() && arc.edge_type != path.edge_types[depth - 1]) continue;
    walk.push_back(arc.neighbor);
    dfs_walk(graph, path, depth + 1, walk, out, limits, collect);
    walk.pop_back();
  }
}

}  // namespace

PathEnumeration enumerate_paths(const HeteroGraph& graph, const ResolvedPath& path, NodeId src,
                                const OracleLimits& limits, bool collect_sequences) {
  if (path.types.empty()) raise(ErrorKind::TypeMismatch, "empty type sequence");
  if (graph.node_type(src) != path.types.front()) {
    raise(ErrorKind::TypeMismatch, "source node '" + graph.node_label(src) +
                                       "' is not of type '" + graph.type_name(path.types.front()) + "'");
  }
  check_limits(graph, path.types.size(), limits);

  PathEnumeration out;
  std::vector<NodeId> walk{src};
  dfs_walk(graph, path, 1, walk, out, limits, collect_sequences);
  return out;
}

PathEnumeration enumerate_paths(const HeteroGraph& graph, const std::vector<std::string>& types,
                                const std::string& src_label, const OracleLimits& limits,
                                bool collect_sequences) {
  if (types.empty()) raise(ErrorKind::TypeMismatch, "empty type sequence");
  NodeId src = graph.node(src_label);
  if (graph.type_name(graph.node_type(src)) != types.front()) {
    raise(ErrorKind::TypeMismatch,
          "source node '" + src_label + "' is not of type '" + types.front() + "'");
  }
  MetaPath mp;
  mp.types = types;
  auto resolved = resolve_path(graph, mp);
  if (!resolved) {
    check_limits(graph, types.size(), limits);
    return {};  // some type never occurs in this graph: no walks
  }
  return enumerate_paths(graph, *resolved, src, limits, collect_sequences);
}

InstanceSet naive_match(const HeteroGraph& graph, const MotifPattern& pattern,
                        const OracleLimits& limits) {
  check_limits(graph, 1, limits);
  InstanceSet out;

  std::vector<std::optional<TypeId>> slot_types;
  for (const auto& slot : pattern.slots) slot_types.push_back(graph.find_type(slot.type));
  if (std::any_of(slot_types.begin(), slot_types.end(), [](const auto& t) { return !t; })) return out;

  std::vector<NodeId> nodes(pattern.slots.size(), kNoNode);
  auto edges_ok = [&]() {
    for (const auto& e : pattern.edges) {
      if (e.edge_type.empty()) {
        if (!graph.has_edge_between(nodes[e.a], nodes[e.b])) return false;
      } else {
        auto et = graph.find_edge_type(e.edge_type);
        if (!et || !graph.has_edge_between(nodes[e.a], nodes[e.b], *et)) return false;
      }
    }
    return true;
  };

  // Plain nested enumeration over all type-correct injective bindings.
  auto autos = slot_automorphisms(pattern);
  std::size_t s = pattern.slots.size();
  std::vector<std::size_t> cursor(s, 0);
  std::size_t level = 0;
  while (true) {
    if (level == s) {
      if (edges_ok()) out.insert(make_instance(graph, pattern, autos, nodes));
      --level;
      ++cursor[level];
      continue;
    }
    auto candidates = graph.nodes_of_type(*slot_types[level]);
    if (cursor[level] >= candidates.size()) {
      nodes[level] = kNoNode;
      if (level == 0) break;
      cursor[level] = 0;
      --level;
      ++cursor[level];
      continue;
    }
    NodeId n = candidates[cursor[level]];
    bool used = false;
    for (std::size_t i = 0; i < level; ++i) used = used || nodes[i] == n;
    if (used) {
      ++cursor[level];
      continue;
    }
    nodes[level] = n;
    ++level;
  }
  return out;
}

InstanceSet naive_candidates(const HeteroGraph& graph, const MotifPattern& pattern,
                             std::span<const MotifInstance> starts,
                             std::span<const MetaPath> search_paths, const OracleLimits& limits) {
  std::set<NodeId> termini;
  for (const auto& path : search_paths) {
    auto resolved = resolve_path(graph, path);
    if (!resolved) continue;
    for (const auto& start : starts) {
      for (NodeId b : start.nodes) {
        if (graph.node_type(b) != resolved->types.front()) continue;
        auto walks = enumerate_paths(graph, *resolved, b, limits);
        for (const auto& [end, count] : walks.counts) {
          if (end != b) termini.insert(end);
        }
      }
    }
  }

  InstanceSet out;
  for (const auto& s : starts) {
    MotifInstance inst;
    std::string reason;
    SlotBinding binding;
    for (std::size_t i = 0; i < pattern.slots.size(); ++i)
      binding[pattern.slots[i].id] = graph.node_label(s.nodes[i]);
    if (bind_instance(graph, pattern, binding, inst, reason)) out.insert(std::move(inst));
  }
  auto matched = naive_match(graph, pattern, limits);
  for (const auto& inst : matched.items()) {
    bool connected = false;
    for (NodeId n : inst.nodes) connected = connected || termini.count(n) > 0;
    if (connected) out.insert(inst);
  }
  return out;
}

namespace {

/// Per-path enumeration cache so oracle_mos stays usable inside property
/// sweeps. Counts are full-path walk counts; vectors are half-path counts.
struct PathOracle {
  const HeteroGraph& graph;
  ResolvedPath full;
  ResolvedPath half;
  const OracleLimits& limits;
  std::unordered_map<NodeId, std::map<NodeId, std::uint64_t>> full_counts;
  std::unordered_map<NodeId, std::map<NodeId, std::uint64_t>> half_counts;

  const std::map<NodeId, std::uint64_t>& counts_from(NodeId src) {
    auto it = full_counts.find(src);
    if (it == full_counts.end())
      it = full_counts.emplace(src, enumerate_paths(graph, full, src, limits).counts).first;
    return it->second;
  }

  const std::map<NodeId, std::uint64_t>& half_from(NodeId src) {
    auto it = half_counts.find(src);
    if (it == half_counts.end())
      it = half_counts.emplace(src, enumerate_paths(graph, half, src, limits).counts).first;
    return it->second;
  }

  std::uint64_t count(NodeId a, NodeId b) {
    const auto& c = counts_from(a);
    auto it = c.find(b);
    return it == c.end() ? 0 : it->second;
  }

  double dot(NodeId a, NodeId b) {
    const auto& va = half_from(a);
    const auto& vb = half_from(b);
    double sum = 0;
    for (const auto& [mid, ca] : va) {
      auto it = vb.find(mid);
      if (it != vb.end()) sum += static_cast<double>(ca) * static_cast<double>(it->second);
    }
    return sum;
  }

  double norm(NodeId a) {
    double sum = 0;
    for (const auto& [mid, c] : half_from(a)) sum += static_cast<double>(c) * static_cast<double>(c);
    return std::sqrt(sum);
  }
};

std::vector<NodeId> nodes_of_end_type(const HeteroGraph& graph, const MotifInstance& inst,
                                      TypeId end_type) {
  std::vector<NodeId> out;
  for (NodeId n : inst.nodes) {
    if (graph.node_type(n) == end_type) out.push_back(n);
  }
  return out;
}

std::uint64_t self_paths(PathOracle& po, const std::vector<NodeId>& group) {
  std::uint64_t total = 0;
  for (NodeId x : group) {
    for (NodeId y : group) total = checked_add(total, po.count(x, y));
  }
  return total;
}

double similarity_for_path(PathOracle& po, const HeteroGraph& graph, const MotifInstance& a,
                           const MotifInstance& b, Metric metric) {
  TypeId end_type = po.full.types.front();
  auto ga = nodes_of_end_type(graph, a, end_type);
  auto gb = nodes_of_end_type(graph, b, end_type);

  if (metric == Metric::CosSim) {
    double sum = 0;
    for (NodeId u : ga) {
      for (NodeId v : gb) {
        double nu = po.norm(u);
        double nv = po.norm(v);
        if (nu == 0 || nv == 0) continue;
        sum += po.dot(u, v) / (nu * nv);
      }
    }
    return sum;
  }

  std::uint64_t cross = 0;
  for (NodeId u : ga) {
    for (NodeId v : gb) cross = checked_add(cross, po.count(u, v));
  }
  switch (metric) {
    case Metric::RawCount:
      return static_cast<double>(cross);
    case Metric::PathSim: {
      std::uint64_t denom = checked_add(self_paths(po, ga), self_paths(po, gb));
      return denom == 0 ? 0.0 : 2.0 * static_cast<double>(cross) / static_cast<double>(denom);
    }
    case Metric::NormCon: {
      std::uint64_t base = self_paths(po, ga);
      if (base == 0 && cross > 0)
        raise(ErrorKind::DegenerateBase, "zero self count with nonzero cross count");
      return base == 0 ? 0.0 : static_cast<double>(cross) / static_cast<double>(base);
    }
    default:
      return 0.0;
  }
}

double similarity_over_paths(const HeteroGraph& graph, const MotifInstance& a, const MotifInstance& b,
                             std::span<const MetaPath> score_paths, Metric metric,
                             const OracleLimits& limits,
                             std::vector<std::unique_ptr<PathOracle>>& oracles) {
  if (oracles.empty()) {
    for (const auto& path : score_paths) {
      auto resolved = resolve_path(graph, path);
      if (!resolved) raise(ErrorKind::TypeMismatch, "score path type unknown in graph");
      auto half = resolve_path(graph, half_of(path));
      oracles.push_back(std::unique_ptr<PathOracle>(
          new PathOracle{graph, *resolved, *half, limits, {}, {}}));
    }
  }
  double total = 0;
  for (std::size_t i = 0; i < score_paths.size(); ++i) {
    total += score_paths[i].weight * similarity_for_path(*oracles[i], graph, a, b, metric);
  }
  return total;
}

}  // namespace

double oracle_motif_similarity(const HeteroGraph& graph, const MotifInstance& a,
                               const MotifInstance& b, std::span<const MetaPath> score_paths,
                               Metric metric, const OracleLimits& limits) {
  std::vector<std::unique_ptr<PathOracle>> oracles;
  return similarity_over_paths(graph, a, b, score_paths, metric, limits, oracles);
}

double oracle_mos(const HeteroGraph& graph, const MotifInstance& candidate,
                  const InstanceSet& reference_set, std::span<const MetaPath> score_paths,
                  Metric metric, const OracleLimits& limits) {
  std::vector<std::unique_ptr<PathOracle>> oracles;
  double total = 0;
  for (const auto& ref : reference_set.items()) {
    total += similarity_over_paths(graph, candidate, ref, score_paths, metric, limits, oracles);
  }
  return total;
}

}  // namespace oracle
}  // namespace netout
