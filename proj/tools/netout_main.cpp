#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "netout/bench.hpp"
#include "netout/ingest.hpp"
#include "netout/pipeline.hpp"
#include "netout/report.hpp"
#include "netout/verify.hpp"

using namespace netout;

namespace {

int parse_thresholds(const std::vector<std::string>& raw,
                     std::map<std::string, std::uint64_t>& out) {
  for (const auto& entry : raw) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "bad --degree-threshold '" << entry << "', expected TYPE=N\n";
      return 2;
    }
    try {
      out[entry.substr(0, eq)] = std::stoull(entry.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "bad --degree-threshold '" << entry << "', expected TYPE=N\n";
      return 2;
    }
  }
  return 0;
}

ReportFormat parse_format(const std::string& name) {
  return name == "json" ? ReportFormat::Json : ReportFormat::Tsv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outlier motif detection in heterogeneous information networks"};
  app.require_subcommand(1);

  std::string graph_path, query_path;
  std::string format = "tsv";
  std::string metric_override;
  int top_k = 0;
  int groups = 10;
  bool distribution = false;
  unsigned threads = 1;
  std::vector<std::string> thresholds;

  auto* stats_cmd = app.add_subcommand("stats", "Graph statistics from an edge-list file");
  stats_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  stats_cmd->add_option("--format", format, "tsv|json");
  stats_cmd->add_option("--degree-threshold", thresholds, "TYPE=N filter before counting");

  auto* query_cmd = app.add_subcommand("query", "Detect and rank outlier motifs");
  query_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  query_cmd->add_option("--query", query_path, "query document (JSON)")->required();
  query_cmd->add_option("--metric", metric_override, "mos|pathsim|cossim|normcon");
  query_cmd->add_option("--top", top_k, "rows per report end");
  query_cmd->add_option("--groups", groups, "distribution bucket count");
  query_cmd->add_flag("--distribution", distribution, "append per-group node frequencies");
  query_cmd->add_option("--format", format, "tsv|json");
  query_cmd->add_option("--threads", threads, "engine parallelism");
  query_cmd->add_option("--degree-threshold", thresholds, "TYPE=N, overrides the query document");

  BenchConfig bench_config;
  auto* bench_cmd = app.add_subcommand("bench", "Timing sweeps on seeded synthetic graphs");
  bench_cmd->add_option("--seed", bench_config.seed, "generator seed");
  bench_cmd->add_option("--reps", bench_config.reps, "repetitions per point");
  bench_cmd->add_option("--threads", bench_config.threads, "engine parallelism");
  bench_cmd->add_option("--nodes", bench_config.degree_nodes, "node count for the degree sweep");
  bench_cmd->add_option("--degrees", bench_config.degrees, "degree sweep points");
  bench_cmd->add_option("--length-nodes", bench_config.length_nodes,
                        "node count for the path-length sweep");
  bench_cmd->add_option("--length-degree", bench_config.length_degree,
                        "average degree for the path-length sweep");
  bench_cmd->add_option("--lengths", bench_config.score_lengths, "score-path lengths (odd)");
  bench_cmd->add_option("--search-len", bench_config.search_len, "expansion meta-path length (odd)");
  bench_cmd->add_option("--pattern-size", bench_config.pattern_size, "motif slots: 2 or 3");

  VerifyConfig verify_config;
  auto* verify_cmd = app.add_subcommand("verify", "Engine-vs-oracle equivalence sweep");
  verify_cmd->add_option("--cases", verify_config.cases, "number of randomized cases");
  verify_cmd->add_option("--seed", verify_config.seed, "case seed");
  verify_cmd->add_option("--max-nodes", verify_config.max_nodes, "graph size bound");
  verify_cmd->add_option("--threads", verify_config.threads, "engine parallelism");
  verify_cmd->add_flag("--inject-fault", verify_config.inject_fault,
                       "self-test: force one mismatch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (stats_cmd->parsed()) {
      std::map<std::string, std::uint64_t> filter;
      if (int rc = parse_thresholds(thresholds, filter)) return rc;
      auto g = load_edge_list_file(graph_path);
      if (!filter.empty()) g = filter_high_degree(g, filter);
      std::fputs(format_stats(graph_stats(g), parse_format(format)).c_str(), stdout);
      return 0;
    }

    if (query_cmd->parsed()) {
      RunOptions options;
      options.threads = threads;
      options.groups = groups;
      options.distribution = distribution;
      if (int rc = parse_thresholds(thresholds, options.degree_thresholds)) return rc;
      if (!metric_override.empty()) {
        auto m = metric_from_name(metric_override);
        if (!m) {
          std::cerr << "unknown metric '" << metric_override << "'\n";
          return 2;
        }
        options.metric = *m;
      }
      if (top_k > 0) options.top_k = top_k;

      auto g = load_edge_list_file(graph_path);
      auto spec = parse_query_file(query_path);
      auto run = run_query(g, spec, options);
      ReportMeta meta{graph_path, query_path};
      std::fputs(format_query_report(run, meta, parse_format(format)).c_str(), stdout);
      return 0;
    }

    if (bench_cmd->parsed()) {
      for (double k : bench_config.degrees) {
        if (k >= bench_config.degree_nodes) {
          std::cerr << "infeasible bench config: degree " << k << " >= node count\n";
          return 2;
        }
      }
      if (bench_config.length_degree >= bench_config.length_nodes) {
        std::cerr << "infeasible bench config: degree >= node count\n";
        return 2;
      }
      auto points = run_bench(bench_config);
      std::fputs(format_bench(points, bench_config).c_str(), stdout);
      return 0;
    }

    if (verify_cmd->parsed()) {
      auto report = run_verification(verify_config);
      std::fputs(format_verify(report).c_str(), stdout);
      return report.ok() ? 0 : 1;
    }
  } catch (const QueryViolations& e) {
    std::cerr << "query validation failed:\n";
    for (const auto& v : e.items) std::cerr << "  " << v << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
