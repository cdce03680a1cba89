#include "netout/pipeline.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace netout {

QueryRun run_query(const HeteroGraph& input, const QuerySpec& spec, const RunOptions& options) {
  QueryRun run;
  run.spec = spec;
  if (options.metric) run.spec.metric = *options.metric;
  if (options.top_k) run.spec.top_k = *options.top_k;
  for (const auto& [type, limit] : options.degree_thresholds)
    run.spec.degree_thresholds[type] = limit;

  run.graph = std::make_shared<const HeteroGraph>(filter_high_degree(input, run.spec.degree_thresholds));
  const HeteroGraph& graph = *run.graph;

  auto violations = validate(run.spec, graph);
  if (!violations.empty()) throw QueryViolations(std::move(violations));

  std::vector<MotifInstance> starts;
  for (const auto& binding : run.spec.start_bindings) {
    MotifInstance inst;
    std::string reason;
    if (!bind_instance(graph, run.spec.pattern, binding, inst, reason))
      throw QueryViolations({reason});  // unreachable post-validate
    starts.push_back(std::move(inst));
  }

  run.candidates =
      expand_from(graph, run.spec.pattern, starts, run.spec.search_paths, options.threads);
  run.references = build_reference_set(graph, run.spec, run.candidates, options.threads);

  for (const auto& path : run.spec.score_paths) {
    auto resolved = resolve_path(graph, path);
    if (!resolved) throw QueryViolations({"score path type unknown in graph"});
    auto half = resolve_path(graph, half_of(path));

    std::set<NodeId> group;
    for (const auto& inst : run.candidates.items()) {
      for (NodeId n : inst.nodes) {
        if (graph.node_type(n) == resolved->types.front()) group.insert(n);
      }
    }
    for (const auto& inst : run.references.items()) {
      for (NodeId n : inst.nodes) {
        if (graph.node_type(n) == resolved->types.front()) group.insert(n);
      }
    }
    std::vector<NodeId> nodes(group.begin(), group.end());
    auto reach = reachable_nodes(graph, nodes, *half, options.threads);
    run.tables.push_back(pair_counts(graph, *resolved, reach, reach));
  }

  run.scores =
      score_candidates(run.candidates, run.references, run.tables, run.spec.metric, options.threads);
  run.ranked = rank(run.candidates, run.scores, run.spec.top_k);
  if (options.distribution && !run.ranked.entries.empty()) {
    run.distribution = group_distribution(graph, run.ranked, options.groups);
  }
  return run;
}

}  // namespace netout
