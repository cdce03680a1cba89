#include "netout/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "netout/pipeline.hpp"
#include "netout/synth.hpp"

namespace netout {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

/// Synthetic graph with one planted pattern instance (two t0 nodes joined to
/// each other and to one t1 node), so every configuration admits the start
/// motif regardless of how sparse the random part is.
HeteroGraph planted_graph(std::uint64_t seed, std::uint32_t nodes, std::uint32_t types, double k) {
  SynthConfig sc;
  sc.seed = seed;
  sc.nodes = nodes;
  sc.types = std::max<std::uint32_t>(2, types);
  sc.avg_degree = k;
  HeteroGraph g = synthetic_graph(sc, /*freeze=*/false);
  std::uint32_t c = sc.types;
  std::string a0 = "n0";
  std::string a1 = "n" + std::to_string(c);      // next node of type t0
  std::string b0 = "n1";                         // first node of type t1
  g.add_edge(a0, a1, "rel_t0_t0", 1.0);
  g.add_edge(a0, b0, "rel_t0_t1", 1.0);
  g.add_edge(a1, b0, "rel_t0_t1", 1.0);
  g.freeze();
  return g;
}

QuerySpec bench_query(std::uint32_t types, int score_len, int pattern_size, int search_len,
                      bool both_directions) {
  QuerySpec spec;
  if (pattern_size >= 3) {
    spec.pattern.slots = {{"X1", "t0"}, {"X2", "t0"}, {"Y", "t1"}};
    spec.pattern.edges = {{0, 1, ""}, {0, 2, ""}, {1, 2, ""}};
    spec.start_bindings = {
        {{"X1", "n0"}, {"X2", "n" + std::to_string(std::max<std::uint32_t>(2, types))}, {"Y", "n1"}}};
  } else {
    spec.pattern.slots = {{"X1", "t0"}, {"Y", "t1"}};
    spec.pattern.edges = {{0, 1, ""}};
    spec.start_bindings = {{{"X1", "n0"}, {"Y", "n1"}}};
  }
  MetaPath search;
  for (int i = 0; i < std::max(3, search_len); ++i) search.types.push_back(i % 2 ? "t1" : "t0");
  spec.search_paths = {search};

  MetaPath score;
  for (int i = 0; i < score_len; ++i) score.types.push_back(i % 2 ? "t1" : "t0");
  spec.score_paths = {score};
  if (both_directions && score_len == 3) {
    MetaPath tat;
    tat.types = {"t1", "t0", "t1"};
    spec.score_paths.push_back(tat);
  }
  spec.metric = Metric::RawCount;
  return spec;
}

BenchPoint measure_point(const HeteroGraph& g, const QuerySpec& spec, const BenchConfig& config,
                         const std::string& sweep, double param) {
  RunOptions options;
  options.threads = config.threads;

  QueryRun last;
  auto run_once = [&]() { last = run_query(g, spec, options); };

  // Calibrate an inner repetition count so each measurement spans at least
  // ~40ms; micro runs are otherwise too noisy for trend assertions.
  auto t0 = Clock::now();
  run_once();
  auto t1 = Clock::now();
  double first_ms = ms_between(t0, t1);
  int inner = first_ms >= 40.0 ? 1 : static_cast<int>(std::ceil(40.0 / std::max(first_ms, 1e-3)));

  std::vector<double> samples;
  for (int rep = 0; rep < std::max(1, config.reps); ++rep) {
    auto s0 = Clock::now();
    for (int i = 0; i < inner; ++i) run_once();
    auto s1 = Clock::now();
    samples.push_back(ms_between(s0, s1) / inner);
  }
  std::sort(samples.begin(), samples.end());
  double median = samples[samples.size() / 2];

  BenchPoint point;
  point.sweep = sweep;
  point.param = param;
  point.median_ms = median;
  point.max_score = last.ranked.entries.empty() ? 0.0 : last.ranked.entries.back().score;
  point.candidates = last.candidates.size();
  return point;
}

}  // namespace

std::vector<BenchPoint> run_bench(const BenchConfig& config) {
  std::vector<BenchPoint> points;

  for (double k : config.degrees) {
    auto g = planted_graph(config.seed, config.degree_nodes, config.types, k);
    auto spec = bench_query(config.types, 3, config.pattern_size, config.search_len,
                            /*both_directions=*/true);
    points.push_back(measure_point(g, spec, config, "degree", k));
  }

  auto g = planted_graph(config.seed + 1, config.length_nodes, config.types, config.length_degree);
  for (int len : config.score_lengths) {
    auto spec = bench_query(config.types, len, config.pattern_size, config.search_len,
                            /*both_directions=*/false);
    points.push_back(measure_point(g, spec, config, "score_len", len));
  }
  return points;
}

}  // namespace netout
