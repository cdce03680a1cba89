#pragma once

#include <cstdint>
#include <optional>

#include "netout/graph.hpp"
#include "netout/query.hpp"

namespace netout {

/// splitmix64 stream: all randomized suites and generated graphs reproduce
/// bit-for-bit across platforms (stdlib distributions do not guarantee that).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

struct SynthConfig {
  std::uint64_t seed = 1;
  std::uint32_t nodes = 24;
  std::uint32_t types = 2;       // node types t0..t{c-1}, assigned round-robin
  double avg_degree = 4.0;       // independent edges with p = k/(n-1)
};

/// Seeded random heterogeneous graph: node "n<i>" has type "t<i%c>"; each
/// unordered node pair carries an edge with probability avg_degree/(n-1),
/// typed "rel_<ti>_<tj>" by its endpoint types.
HeteroGraph synthetic_graph(const SynthConfig& config, bool freeze = true);

struct CaseConfig {
  std::uint32_t min_nodes = 10;
  std::uint32_t max_nodes = 40;
  std::uint32_t max_types = 4;   // 2..max_types
  double max_avg_degree = 6.0;
  int half_len = 0;              // score-path half length; 0 = random in [2,4]
  bool allow_user_reference = true;
};

/// One randomized end-to-end case: a synthetic graph plus a query whose
/// pattern, start instances and meta paths are all realizable in it (start
/// instances are actual pattern matches; meta paths follow the graph's
/// schema). Returns nullopt when the drawn graph admits no pattern instance;
/// callers advance the seed and retry.
std::optional<QuerySpec> make_random_case(std::uint64_t seed, const CaseConfig& config,
                                          HeteroGraph& graph_out);

}  // namespace netout
