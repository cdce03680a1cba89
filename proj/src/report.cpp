#include "netout/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace netout {

namespace {

using nlohmann::ordered_json;

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void append_row(std::string& out, const QueryRun& run, std::size_t index) {
  const auto& entry = run.ranked.entries[index];
  out += std::to_string(index + 1);
  for (NodeId n : entry.instance.nodes) {
    out += '\t';
    out += run.graph->node_label(n);
  }
  out += '\t';
  out += fixed3(entry.score);
  out += '\n';
}

ordered_json json_row(const QueryRun& run, std::size_t index) {
  const auto& entry = run.ranked.entries[index];
  ordered_json row;
  row["rank"] = index + 1;
  ordered_json slots;
  for (std::size_t s = 0; s < entry.instance.nodes.size(); ++s)
    slots[run.spec.pattern.slots[s].id] = run.graph->node_label(entry.instance.nodes[s]);
  row["slots"] = slots;
  row["score"] = entry.score;
  return row;
}

}  // namespace

std::string format_query_report(const QueryRun& run, const ReportMeta& meta, ReportFormat format) {
  std::size_t n = run.ranked.entries.size();
  std::size_t k = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(run.ranked.top_k, 0)));

  if (format == ReportFormat::Json) {
    ordered_json doc;
    doc["graph"] = meta.graph_path;
    doc["query"] = meta.query_path;
    doc["metric"] = metric_name(run.spec.metric);
    doc["candidates"] = run.candidates.size();
    doc["references"] = run.references.size();
    doc["top_k"] = run.ranked.top_k;
    doc["outliers"] = ordered_json::array();
    for (std::size_t i = 0; i < k; ++i) doc["outliers"].push_back(json_row(run, i));
    doc["most_similar"] = ordered_json::array();
    for (std::size_t i = 0; i < k; ++i) doc["most_similar"].push_back(json_row(run, n - 1 - i));
    if (run.distribution) {
      doc["distribution"] = ordered_json::array();
      for (std::size_t b = 0; b < run.distribution->groups.size(); ++b) {
        ordered_json bucket;
        bucket["group"] = b + 1;
        bucket["counts"] = run.distribution->groups[b];
        doc["distribution"].push_back(bucket);
      }
    }
    return doc.dump(2) + "\n";
  }

  std::string out;
  out += "# netout query report\n";
  out += "# graph=" + meta.graph_path + "\n";
  out += "# query=" + meta.query_path + "\n";
  out += "# metric=" + std::string(metric_name(run.spec.metric)) + "\n";
  out += "# candidates=" + std::to_string(run.candidates.size()) + "\n";
  out += "# references=" + std::to_string(run.references.size()) + "\n";

  std::string header = "rank";
  for (const auto& slot : run.spec.pattern.slots) header += '\t' + slot.id;
  header += "\tscore\n";

  out += "# outliers\n" + header;
  for (std::size_t i = 0; i < k; ++i) append_row(out, run, i);
  out += "# most_similar\n" + header;
  for (std::size_t i = 0; i < k; ++i) append_row(out, run, n - 1 - i);

  if (run.distribution) {
    out += "# distribution groups=" + std::to_string(run.distribution->groups.size()) + "\n";
    out += "group\ttype\tnode\tcount\n";
    for (std::size_t b = 0; b < run.distribution->groups.size(); ++b) {
      for (const auto& [type_name, table] : run.distribution->groups[b]) {
        for (const auto& [label, count] : table) {
          out += std::to_string(b + 1) + '\t' + type_name + '\t' + label + '\t' +
                 std::to_string(count) + '\n';
        }
      }
    }
  }
  return out;
}

std::string format_stats(const GraphStats& stats, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ordered_json doc;
    doc["nodes"] = stats.node_count;
    doc["edges"] = stats.edge_count;
    doc["avg_degree"] = stats.avg_degree;
    doc["types"] = ordered_json::object();
    for (const auto& [name, ts] : stats.per_type) {
      doc["types"][name] = {{"count", ts.node_count},
                            {"max_degree_node", ts.max_degree_node},
                            {"max_degree", ts.max_degree}};
    }
    return doc.dump(2) + "\n";
  }
  std::string out;
  out += "nodes\t" + std::to_string(stats.node_count) + "\n";
  out += "edges\t" + std::to_string(stats.edge_count) + "\n";
  out += "avg_degree\t" + fixed3(stats.avg_degree) + "\n";
  out += "type\tcount\tmax_degree_node\tmax_degree\n";
  for (const auto& [name, ts] : stats.per_type) {
    out += name + '\t' + std::to_string(ts.node_count) + '\t' + ts.max_degree_node + '\t' +
           std::to_string(ts.max_degree) + '\n';
  }
  return out;
}

std::string format_bench(const std::vector<BenchPoint>& points, const BenchConfig& config) {
  std::string out;
  out += "# netout bench seed=" + std::to_string(config.seed) +
         " reps=" + std::to_string(config.reps) + " threads=" + std::to_string(config.threads) +
         "\n";
  out += "sweep\tparam\tmedian_ms\tmax_mos\tcandidates\n";
  for (const auto& p : points) {
    std::ostringstream param;
    param << p.param;
    out += p.sweep + '\t' + param.str() + '\t' + fixed3(p.median_ms) + '\t' +
           fixed3(p.max_score) + '\t' + std::to_string(p.candidates) + '\n';
  }
  return out;
}

std::string format_verify(const VerifyReport& report) {
  std::string out;
  if (report.ok()) {
    out += "all " + std::to_string(report.cases_run) + " cases passed (" +
           std::to_string(report.pair_checks) + " pair counts, " +
           std::to_string(report.mos_checks) + " scores)\n";
  } else {
    out += "FAILED: " + std::to_string(report.failures) + " of " +
           std::to_string(report.cases_run) + " cases\n";
    out += report.first_failure + "\n";
  }
  return out;
}

}  // namespace netout
