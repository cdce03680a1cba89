#include "netout/synth.hpp"

#include <algorithm>
#include <set>

#include "netout/oracle.hpp"

namespace netout {

HeteroGraph synthetic_graph(const SynthConfig& config, bool freeze) {
  HeteroGraph g;
  std::uint32_t c = std::max<std::uint32_t>(1, config.types);
  for (std::uint32_t i = 0; i < config.nodes; ++i) {
    g.add_node("n" + std::to_string(i), "t" + std::to_string(i % c));
  }
  if (config.nodes > 1) {
    Rng rng(config.seed);
    double p = std::min(1.0, config.avg_degree / static_cast<double>(config.nodes - 1));
    for (std::uint32_t u = 0; u < config.nodes; ++u) {
      for (std::uint32_t v = u + 1; v < config.nodes; ++v) {
        if (rng.unit() >= p) continue;
        std::uint32_t a = u % c;
        std::uint32_t b = v % c;
        if (a > b) std::swap(a, b);
        g.add_edge(g.node_label(u), g.node_label(v),
                   "rel_t" + std::to_string(a) + "_t" + std::to_string(b), 1.0);
      }
    }
  }
  if (freeze) g.freeze();
  return g;
}

namespace {

/// Type-level adjacency actually present in the graph, used to build meta
/// paths that always pass schema validation.
std::vector<std::vector<TypeId>> schema_adjacency(const HeteroGraph& g) {
  std::vector<std::set<TypeId>> adj(g.type_count());
  for (const Edge& e : g.edges()) {
    TypeId a = g.node_type(e.src);
    TypeId b = g.node_type(e.dst);
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<std::vector<TypeId>> out(g.type_count());
  for (std::size_t t = 0; t < adj.size(); ++t) out[t].assign(adj[t].begin(), adj[t].end());
  return out;
}

std::optional<std::vector<std::string>> schema_walk(const HeteroGraph& g,
                                                    const std::vector<std::vector<TypeId>>& schema,
                                                    TypeId from, std::size_t length, Rng& rng) {
  std::vector<std::string> types{g.type_name(from)};
  TypeId at = from;
  for (std::size_t i = 1; i < length; ++i) {
    const auto& next = schema[at];
    if (next.empty()) return std::nullopt;
    at = next[rng.below(next.size())];
    types.push_back(g.type_name(at));
  }
  return types;
}

}  // namespace

std::optional<QuerySpec> make_random_case(std::uint64_t seed, const CaseConfig& config,
                                          HeteroGraph& graph_out) {
  Rng rng(seed);

  SynthConfig sc;
  sc.seed = rng.next();
  sc.nodes = config.min_nodes +
             static_cast<std::uint32_t>(rng.below(config.max_nodes - config.min_nodes + 1));
  sc.types = 2 + static_cast<std::uint32_t>(rng.below(config.max_types - 1));
  sc.avg_degree = 1.5 + rng.unit() * (config.max_avg_degree - 1.5);
  graph_out = synthetic_graph(sc);
  const HeteroGraph& g = graph_out;
  if (g.edge_count() == 0) return std::nullopt;

  auto schema = schema_adjacency(g);

  // Pattern: a 2- or 3-slot chain whose consecutive slot types co-occur in
  // the schema, so instances have a chance to exist.
  QuerySpec spec;
  std::size_t slot_count = 2 + rng.below(2);
  TypeId t0 = g.node_type(g.edges()[rng.below(g.edge_count())].src);
  std::vector<TypeId> slot_types{t0};
  for (std::size_t i = 1; i < slot_count; ++i) {
    const auto& next = schema[slot_types.back()];
    if (next.empty()) return std::nullopt;
    slot_types.push_back(next[rng.below(next.size())]);
  }
  for (std::size_t i = 0; i < slot_count; ++i) {
    spec.pattern.slots.push_back(
        PatternSlot{"S" + std::to_string(i), g.type_name(slot_types[i])});
  }
  for (std::size_t i = 0; i + 1 < slot_count; ++i)
    spec.pattern.edges.push_back(PatternEdge{i, i + 1, ""});
  if (slot_count == 3 && rng.unit() < 0.3) spec.pattern.edges.push_back(PatternEdge{0, 2, ""});

  auto instances = oracle::naive_match(g, spec.pattern);
  if (instances.empty()) return std::nullopt;

  std::size_t start_count = 1 + rng.below(2);
  std::set<std::size_t> picked;
  for (std::size_t i = 0; i < start_count; ++i) picked.insert(rng.below(instances.size()));
  for (std::size_t idx : picked) {
    SlotBinding binding;
    for (std::size_t s = 0; s < slot_count; ++s)
      binding[spec.pattern.slots[s].id] = g.node_label(instances[idx].nodes[s]);
    spec.start_bindings.push_back(std::move(binding));
  }

  // Search paths along the schema, starting at a pattern type.
  std::size_t search_count = 1 + rng.below(2);
  for (std::size_t i = 0; i < search_count; ++i) {
    TypeId from = slot_types[rng.below(slot_types.size())];
    auto types = schema_walk(g, schema, from, 2 + rng.below(3), rng);
    if (!types) return std::nullopt;
    MetaPath p;
    p.types = *types;
    spec.search_paths.push_back(std::move(p));
  }

  // Symmetric score paths: random schema half walk, mirrored. Dyadic weights
  // keep weight-scaling properties exact in floating point.
  const double weights[] = {0.5, 1.0, 1.5, 2.0};
  std::size_t score_count = 1 + rng.below(2);
  for (std::size_t i = 0; i < score_count; ++i) {
    std::size_t half_len =
        config.half_len > 0 ? static_cast<std::size_t>(config.half_len) : 2 + rng.below(3);
    TypeId from = slot_types[rng.below(slot_types.size())];
    auto types = schema_walk(g, schema, from, half_len, rng);
    if (!types) return std::nullopt;
    MetaPath half;
    half.types = *types;
    MetaPath p = symmetrize(half);
    p.weight = weights[rng.below(4)];
    spec.score_paths.push_back(std::move(p));
  }

  if (config.allow_user_reference && rng.unit() < 0.25) {
    spec.reference_source = ReferenceSource::UserProvided;
    std::size_t ref_idx = rng.below(instances.size());
    SlotBinding binding;
    for (std::size_t s = 0; s < slot_count; ++s)
      binding[spec.pattern.slots[s].id] = g.node_label(instances[ref_idx].nodes[s]);
    spec.reference_bindings.push_back(std::move(binding));
  }

  return spec;
}

}  // namespace netout
