#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netout/graph.hpp"

namespace netout {

/// Ordered node-type sequence with optional per-step edge types and a
/// weight used when aggregating scores over several paths.
struct MetaPath {
  std::vector<std::string> types;       // length >= 2 once validated
  std::vector<std::string> edge_types;  // empty, or exactly types.size()-1 entries
  double weight = 1.0;

  bool operator==(const MetaPath&) const = default;
};

/// MetaPath with names resolved against one graph's interned ids.
struct ResolvedPath {
  std::vector<TypeId> types;
  std::vector<EdgeTypeId> edge_types;  // empty means unconstrained steps
  double weight = 1.0;
};

struct PatternSlot {
  std::string id;
  std::string type;

  bool operator==(const PatternSlot&) const = default;
};

struct PatternEdge {
  std::size_t a;  // slot indexes
  std::size_t b;
  std::string edge_type;  // empty = any edge type

  bool operator==(const PatternEdge&) const = default;
};

/// The target motif template: typed slots plus required connections.
struct MotifPattern {
  std::vector<PatternSlot> slots;
  std::vector<PatternEdge> edges;

  bool operator==(const MotifPattern&) const = default;

  std::optional<std::size_t> slot_index(std::string_view slot_id) const;
};

enum class Metric { RawCount, PathSim, CosSim, NormCon };

/// RawCount is the unnormalized path-count similarity behind the default
/// "mos" metric name; the others normalize per node pair or motif.
std::optional<Metric> metric_from_name(std::string_view name);
const char* metric_name(Metric metric);

enum class ReferenceSource { Candidates, UserProvided };

using SlotBinding = std::map<std::string, std::string>;  // slot id -> node label

struct QuerySpec {
  MotifPattern pattern;
  std::vector<SlotBinding> start_bindings;  // at least one
  std::vector<MetaPath> search_paths;       // may be empty: no expansion
  std::vector<MetaPath> score_paths;        // symmetric, endpoints in pattern
  ReferenceSource reference_source = ReferenceSource::Candidates;
  std::vector<SlotBinding> reference_bindings;  // used when UserProvided
  Metric metric = Metric::RawCount;
  int top_k = 10;
  std::map<std::string, std::uint64_t> degree_thresholds;
};

/// Parses the JSON query document; applies defaults (metric=mos, top_k=10,
/// weight=1). Throws QueryParseError with the offending field path.
QuerySpec parse_query(const std::string& json_text);
QuerySpec parse_query_file(const std::string& path);

/// Inverse of parse_query up to defaults; parse(serialize(q)) == q field-wise.
std::string serialize_query(const QuerySpec& spec);

/// True iff reversing the type sequence (and edge types) leaves the path
/// unchanged.
bool is_symmetric(const MetaPath& path);

/// Concatenates the path with its reverse, sharing the pivot type once.
/// The result always satisfies is_symmetric and has odd length.
MetaPath symmetrize(const MetaPath& path);

/// Prefix used for bidirectional search: up to and including the center type
/// for odd lengths, up to the left-of-center type for even lengths.
MetaPath half_of(const MetaPath& symmetric_path);

/// Resolves type / edge-type names against a graph; nullopt when any name is
/// unknown there.
std::optional<ResolvedPath> resolve_path(const HeteroGraph& graph, const MetaPath& path);

/// Graph-dependent checks: start instances exist and are type-correct with
/// all pattern edges present, meta-path types known and consecutive types
/// co-occurring on some edge. Returns human-readable violations; empty means
/// the query is runnable.
std::vector<std::string> validate(const QuerySpec& spec, const HeteroGraph& graph);

}  // namespace netout
