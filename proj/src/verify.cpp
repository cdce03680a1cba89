#include "netout/verify.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "netout/oracle.hpp"
#include "netout/pipeline.hpp"
#include "netout/synth.hpp"

namespace netout {

namespace {

std::set<std::string> keys_of(const InstanceSet& set) {
  std::set<std::string> out;
  for (const auto& inst : set.items()) out.insert(inst.key);
  return out;
}

constexpr Metric kMetrics[] = {Metric::RawCount, Metric::PathSim, Metric::CosSim, Metric::NormCon};

}  // namespace

VerifyReport run_verification(const VerifyConfig& config) {
  VerifyReport report;
  oracle::OracleLimits limits;
  limits.max_nodes = config.max_nodes + 1;

  for (int case_index = 0; case_index < config.cases; ++case_index) {
    // Deterministic per-case seed; skip sub-seeds whose random draw yields no
    // pattern instance.
    CaseConfig cc;
    cc.max_nodes = config.max_nodes;
    cc.half_len = config.half_lengths[case_index % config.half_lengths.size()];
    Metric metric = kMetrics[case_index % 4];

    HeteroGraph graph;
    std::optional<QuerySpec> spec;
    std::uint64_t case_seed = 0;
    for (int attempt = 0; attempt < 64 && !spec; ++attempt) {
      case_seed = config.seed + 1000ull * static_cast<std::uint64_t>(case_index) + attempt;
      spec = make_random_case(case_seed, cc, graph);
    }
    auto fail = [&](const std::string& what) {
      ++report.failures;
      if (report.first_failure.empty()) {
        std::ostringstream msg;
        msg << what << " (seed " << case_seed << ", case " << case_index << ")";
        report.first_failure = msg.str();
      }
    };
    if (!spec) {
      fail("no realizable case after 64 attempts");
      continue;
    }
    spec->metric = metric;
    ++report.cases_run;

    RunOptions options;
    options.threads = config.threads;
    QueryRun run;
    try {
      run = run_query(graph, *spec, options);
    } catch (const std::exception& e) {
      fail(std::string("pipeline error: ") + e.what());
      continue;
    }
    const HeteroGraph& g = *run.graph;

    std::vector<MotifInstance> starts;
    for (const auto& binding : spec->start_bindings) {
      MotifInstance inst;
      std::string reason;
      if (!bind_instance(g, spec->pattern, binding, inst, reason)) {
        fail("start binding invalid: " + reason);
        continue;
      }
      starts.push_back(std::move(inst));
    }

    // Candidate generation: expansion must equal exhaustive match filtered
    // by search-path reachability, plus the starts.
    auto oracle_candidates =
        oracle::naive_candidates(g, spec->pattern, starts, spec->search_paths, limits);
    if (keys_of(run.candidates) != keys_of(oracle_candidates)) {
      fail("candidate set mismatch");
      continue;
    }

    InstanceSet oracle_refs;
    if (spec->reference_source == ReferenceSource::Candidates) {
      oracle_refs = oracle_candidates;
    } else {
      std::vector<MotifInstance> provided;
      for (const auto& binding : spec->reference_bindings) {
        MotifInstance inst;
        std::string reason;
        if (bind_instance(g, spec->pattern, binding, inst, reason)) provided.push_back(inst);
      }
      oracle_refs = oracle::naive_candidates(g, spec->pattern, provided, spec->search_paths, limits);
    }
    if (keys_of(run.references) != keys_of(oracle_refs)) {
      fail("reference set mismatch");
      continue;
    }

    // Pair counts: every within-candidate and cross-set entry over the
    // end-type node sets must equal full-length DFS enumeration exactly.
    bool counts_ok = true;
    bool faulted = false;
    for (std::size_t p = 0; p < spec->score_paths.size() && counts_ok; ++p) {
      auto resolved = resolve_path(g, spec->score_paths[p]);
      if (!resolved) {
        fail("score path unresolved post-validation");
        counts_ok = false;
        break;
      }
      std::set<NodeId> group;
      for (const auto& inst : run.candidates.items()) {
        for (NodeId n : inst.nodes)
          if (g.node_type(n) == resolved->types.front()) group.insert(n);
      }
      for (const auto& inst : run.references.items()) {
        for (NodeId n : inst.nodes)
          if (g.node_type(n) == resolved->types.front()) group.insert(n);
      }
      for (NodeId a : group) {
        auto enumerated = oracle::enumerate_paths(g, *resolved, a, limits);
        for (NodeId b : group) {
          auto it = enumerated.counts.find(b);
          std::uint64_t expected = it == enumerated.counts.end() ? 0 : it->second;
          std::uint64_t actual = run.tables[p].count(a, b);
          if (config.inject_fault && !faulted) {
            actual += 1;  // self-test: a broken engine must be reported
            faulted = true;
          }
          ++report.pair_checks;
          if (actual != expected) {
            std::ostringstream what;
            what << "pair count mismatch: path " << p << " (" << g.node_label(a) << ", "
                 << g.node_label(b) << ") engine=" << actual << " oracle=" << expected;
            fail(what.str());
            counts_ok = false;
            break;
          }
        }
        if (!counts_ok) break;
      }
    }
    if (!counts_ok) continue;

    // Scores against the oracle's own aggregation, 1e-9 relative.
    for (std::size_t i = 0; i < run.candidates.size(); ++i) {
      double expected =
          oracle::oracle_mos(g, run.candidates[i], oracle_refs, spec->score_paths, metric, limits);
      double actual = run.scores[i];
      ++report.mos_checks;
      double tolerance = 1e-9 * std::max(1.0, std::abs(expected));
      if (std::abs(actual - expected) > tolerance) {
        std::ostringstream what;
        what << "MOS mismatch for " << run.candidates[i].key << ": engine=" << actual
             << " oracle=" << expected << " metric=" << metric_name(metric);
        fail(what.str());
        break;
      }
    }
  }
  return report;
}

}  // namespace netout
