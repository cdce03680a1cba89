#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netout {

/// Synthetic-workload sweeps mirroring the complexity analysis: pipeline
/// time as a function of average degree, and of symmetric score-path length.
struct BenchConfig {
  std::uint64_t seed = 42;
  int reps = 5;                 // median over this many repetitions per point
  unsigned threads = 1;
  std::uint32_t types = 2;
  int pattern_size = 2;         // 2: edge motif, 3: triangle motif
  int search_len = 3;           // odd length of the expansion meta path

  std::uint32_t degree_nodes = 2000;
  std::vector<double> degrees = {2, 4, 8};

  std::uint32_t length_nodes = 600;
  double length_degree = 8.0;
  std::vector<int> score_lengths = {3, 5, 7, 9};  // odd symmetric lengths
};

struct BenchPoint {
  std::string sweep;  // "degree" or "score_len"
  double param;
  double median_ms;   // median wall time of the full query pipeline
  double max_score;   // highest MOS on the ranked list at this point
  std::size_t candidates;
};

/// Runs both sweeps; every point executes the full pipeline (filter,
/// validate, expand, count, score, rank) on a seeded planted-motif graph.
std::vector<BenchPoint> run_bench(const BenchConfig& config);

}  // namespace netout
