#pragma once

#include <span>
#include <string>
#include <vector>

#include "netout/motif.hpp"
#include "netout/path_count.hpp"
#include "netout/query.hpp"

namespace netout {

/// PathSim over one symmetric path: 2|p_xy| / (|p_xx| + |p_yy|); 0 when the
/// denominator vanishes. Nodes must share a type.
double path_sim(NodeId x, NodeId y, const PairCounts& counts);

/// Cosine of the two half-path reachability vectors; 0 when either is zero.
double cos_sim(NodeId x, NodeId y, const PairCounts& counts);

/// Normalized connectivity |p_xy| / |p_xx|. A zero base with nonzero cross
/// count raises DegenerateBase (unreachable for symmetric paths on an
/// undirected graph, but the contract holds for arbitrary tables).
double norm_con(NodeId x, NodeId y, const PairCounts& counts);

/// Similarity between two instances of one pattern: weighted sum over the
/// score paths of the pairwise similarity between same-type nodes, with
/// PathSim/NormCon normalized by the motif-level self counts of the
/// same-type slot group rather than per-node denominators.
double motif_similarity(const MotifInstance& a, const MotifInstance& b,
                        std::span<const PairCounts> tables, Metric metric);

/// Motif outlier score: sum of motif_similarity against every reference.
double mos(const MotifInstance& candidate, const InstanceSet& reference_set,
           std::span<const PairCounts> tables, Metric metric);

/// Scores for every candidate, evaluated independently per candidate (safe
/// to parallelize; results identical for any thread count).
std::vector<double> score_candidates(const CandidateSet& candidates, const InstanceSet& reference_set,
                                     std::span<const PairCounts> tables, Metric metric,
                                     unsigned threads = 1);

struct RankedEntry {
  MotifInstance instance;
  double score;
};

/// Ascending by score, the strongest outliers first; ties broken by
/// canonical key. Holds the full list; top_k only governs display.
struct RankedList {
  std::vector<RankedEntry> entries;
  int top_k = 10;
};

RankedList rank(const CandidateSet& candidates, std::span<const double> scores, int top_k);

/// Node frequency tables per contiguous rank bucket: for each group, type
/// name -> node label -> appearances among that group's motifs.
struct GroupDistribution {
  std::vector<std::map<std::string, std::map<std::string, std::size_t>>> groups;
};

/// Splits the ranked list into `groups` contiguous buckets (equal floor
/// size, remainder to the last) and tabulates node frequencies per bucket.
/// An empty list raises EmptyInput.
GroupDistribution group_distribution(const HeteroGraph& graph, const RankedList& ranked,
                                     int groups = 10);

}  // namespace netout
