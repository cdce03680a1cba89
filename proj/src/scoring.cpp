#include "netout/scoring.hpp"

#include <algorithm>
#include <cmath>

#include "netout/parallel.hpp"

namespace netout {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    raise(ErrorKind::PathCountOverflow, "similarity count exceeds 64 bits");
  return r;
}

void require_same_type(NodeId x, NodeId y, const HeteroGraph& g) {
  if (g.node_type(x) != g.node_type(y)) {
    raise(ErrorKind::TypeMismatch, "nodes '" + g.node_label(x) + "' and '" + g.node_label(y) +
                                       "' have different types");
  }
}

std::vector<NodeId> end_type_nodes(const MotifInstance& inst, const PairCounts& pc) {
  std::vector<NodeId> out;
  for (NodeId n : inst.nodes) {
    if (pc.graph().node_type(n) == pc.end_type()) out.push_back(n);
  }
  return out;
}

}  // namespace

double path_sim(NodeId x, NodeId y, const PairCounts& counts) {
  require_same_type(x, y, counts.graph());
  std::uint64_t denom = checked_add(counts.count(x, x), counts.count(y, y));
  if (denom == 0) return 0.0;
  return 2.0 * static_cast<double>(counts.count(x, y)) / static_cast<double>(denom);
}

double cos_sim(NodeId x, NodeId y, const PairCounts& counts) {
  require_same_type(x, y, counts.graph());
  double nx = counts.norm_sq(x);
  double ny = counts.norm_sq(y);
  if (nx == 0 || ny == 0) return 0.0;
  return static_cast<double>(counts.dot(x, y)) / (std::sqrt(nx) * std::sqrt(ny));
}

double norm_con(NodeId x, NodeId y, const PairCounts& counts) {
  require_same_type(x, y, counts.graph());
  std::uint64_t base = counts.count(x, x);
  std::uint64_t cross = counts.count(x, y);
  if (base == 0) {
    if (cross > 0)
      raise(ErrorKind::DegenerateBase, "no self paths for '" + counts.graph().node_label(x) + "'");
    return 0.0;
  }
  return static_cast<double>(cross) / static_cast<double>(base);
}

double motif_similarity(const MotifInstance& a, const MotifInstance& b,
                        std::span<const PairCounts> tables, Metric metric) {
  if (!(a.pattern == b.pattern))
    raise(ErrorKind::PatternMismatch, "instances bind different patterns");

  double total = 0.0;
  for (const PairCounts& pc : tables) {
    auto ga = end_type_nodes(a, pc);
    auto gb = end_type_nodes(b, pc);

    if (metric == Metric::CosSim) {
      double sum = 0.0;
      for (NodeId u : ga) {
        for (NodeId v : gb) sum += cos_sim(u, v, pc);
      }
      total += pc.weight() * sum;
      continue;
    }

    std::uint64_t cross = 0;
    for (NodeId u : ga) {
      for (NodeId v : gb) cross = checked_add(cross, pc.count(u, v));
    }
    switch (metric) {
      case Metric::RawCount:
        total += pc.weight() * static_cast<double>(cross);
        break;
      case Metric::PathSim: {
        std::uint64_t denom = checked_add(motif_self_paths(a, pc), motif_self_paths(b, pc));
        if (denom > 0)
          total += pc.weight() * 2.0 * static_cast<double>(cross) / static_cast<double>(denom);
        break;
      }
      case Metric::NormCon: {
        std::uint64_t base = motif_self_paths(a, pc);
        if (base == 0) {
          if (cross > 0) raise(ErrorKind::DegenerateBase, "no self paths for candidate motif");
          break;
        }
        total += pc.weight() * static_cast<double>(cross) / static_cast<double>(base);
        break;
      }
      case Metric::CosSim:
        break;  // handled above
    }
  }
  return total;
}

double mos(const MotifInstance& candidate, const InstanceSet& reference_set,
           std::span<const PairCounts> tables, Metric metric) {
  double total = 0.0;
  for (const auto& ref : reference_set.items()) {
    total += motif_similarity(candidate, ref, tables, metric);
  }
  return total;
}

std::vector<double> score_candidates(const CandidateSet& candidates, const InstanceSet& reference_set,
                                     std::span<const PairCounts> tables, Metric metric,
                                     unsigned threads) {
  std::vector<double> scores(candidates.size());
  parallel_for(candidates.size(), threads,
               [&](std::size_t i) { scores[i] = mos(candidates[i], reference_set, tables, metric); });
  return scores;
}

RankedList rank(const CandidateSet& candidates, std::span<const double> scores, int top_k) {
  RankedList list;
  list.top_k = top_k;
  list.entries.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    list.entries.push_back(RankedEntry{candidates[i], scores[i]});
  std::sort(list.entries.begin(), list.entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.instance.key < b.instance.key;
  });
  return list;
}

GroupDistribution group_distribution(const HeteroGraph& graph, const RankedList& ranked, int groups) {
  if (ranked.entries.empty()) raise(ErrorKind::EmptyInput, "cannot group an empty ranked list");
  if (groups <= 0) raise(ErrorKind::EmptyInput, "group count must be positive");

  std::size_t n = ranked.entries.size();
  std::size_t g = static_cast<std::size_t>(groups);
  std::size_t base = n / g;

  GroupDistribution dist;
  dist.groups.resize(g);
  std::size_t cursor = 0;
  for (std::size_t b = 0; b < g; ++b) {
    std::size_t size = b + 1 < g ? base : n - cursor;
    for (std::size_t i = 0; i < size; ++i) {
      const auto& inst = ranked.entries[cursor + i].instance;
      for (NodeId node : inst.nodes) {
        dist.groups[b][graph.type_name(graph.node_type(node))][graph.node_label(node)] += 1;
      }
    }
    cursor += size;
  }
  return dist;
}

}  // namespace netout
