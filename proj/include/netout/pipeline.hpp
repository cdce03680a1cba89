#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "netout/scoring.hpp"

namespace netout {

/// Validation violations surfaced as an input error; the CLI maps this to
/// exit code 2 with one line per violation.
class QueryViolations : public std::runtime_error {
public:
  explicit QueryViolations(std::vector<std::string> violations)
      : std::runtime_error("query validation failed"), items(std::move(violations)) {}

  std::vector<std::string> items;
};

struct RunOptions {
  std::optional<Metric> metric;  // overrides the query document
  std::optional<int> top_k;
  std::map<std::string, std::uint64_t> degree_thresholds;  // merged over the document's
  unsigned threads = 1;
  int groups = 10;
  bool distribution = false;
};

struct QueryRun {
  // The filtered graph every node id, table and instance refers to; heap
  // allocated so moving a QueryRun never invalidates the tables' back refs.
  std::shared_ptr<const HeteroGraph> graph;
  QuerySpec spec;  // with overrides applied
  CandidateSet candidates;
  ReferenceSet references;
  std::vector<PairCounts> tables;  // one per score path, in query order
  std::vector<double> scores;      // parallel to candidates
  RankedList ranked;
  std::optional<GroupDistribution> distribution;
};

/// Full detection pipeline: degree filtering, validation, candidate and
/// reference generation, bidirectional path counting, scoring and ranking.
/// Output is identical for every thread count.
QueryRun run_query(const HeteroGraph& input, const QuerySpec& spec, const RunOptions& options = {});

}  // namespace netout
