#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "netout/graph.hpp"
#include "netout/motif.hpp"
#include "netout/query.hpp"

namespace netout {
namespace oracle {

/// Size guards: the oracle enumerates exhaustively and is only meant for
/// graphs small enough to certify the optimized engine against.
struct OracleLimits {
  std::size_t max_nodes = 200;
  std::size_t max_path_len = 9;
  std::size_t max_sequences = 200000;
};

struct PathEnumeration {
  std::map<NodeId, std::uint64_t> counts;            // end node -> walk count
  std::vector<std::vector<NodeId>> sequences;        // explicit walks, when requested
};

/// Exhaustive DFS enumeration of every walk from `src` that follows the
/// type sequence (and edge types, when present). A length-1 sequence yields
/// {src: 1}. Throws TypeMismatch when src is not of the leading type and
/// OracleBoundExceeded when limits are hit.
PathEnumeration enumerate_paths(const HeteroGraph& graph, const ResolvedPath& path, NodeId src,
                                const OracleLimits& limits = {}, bool collect_sequences = false);
PathEnumeration enumerate_paths(const HeteroGraph& graph, const std::vector<std::string>& types,
                                const std::string& src_label, const OracleLimits& limits = {},
                                bool collect_sequences = false);

/// Exhaustive enumeration of all pattern instances, deduplicated with the
/// shared canonical form (dedup is a definition, not an optimization).
InstanceSet naive_match(const HeteroGraph& graph, const MotifPattern& pattern,
                        const OracleLimits& limits = {});

/// Reference construction for candidate generation: all exhaustively-matched
/// instances sharing at least one search-path terminus with a start
/// instance, plus the start instances themselves.
InstanceSet naive_candidates(const HeteroGraph& graph, const MotifPattern& pattern,
                             std::span<const MotifInstance> starts,
                             std::span<const MetaPath> search_paths, const OracleLimits& limits = {});

/// Motif outlier score recomputed from explicit path enumeration only.
double oracle_mos(const HeteroGraph& graph, const MotifInstance& candidate,
                  const InstanceSet& reference_set, std::span<const MetaPath> score_paths,
                  Metric metric, const OracleLimits& limits = {});

/// Single-pair motif similarity from explicit enumeration (the oracle twin
/// of scoring's motif_similarity).
double oracle_motif_similarity(const HeteroGraph& graph, const MotifInstance& a,
                               const MotifInstance& b, std::span<const MetaPath> score_paths,
                               Metric metric, const OracleLimits& limits = {});

}  // namespace oracle
}  // namespace netout
