#include "netout/motif.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "netout/parallel.hpp"

namespace netout {

namespace {

constexpr char kKeySep = '\x1f';

using EdgeFingerprint = std::vector<std::tuple<std::size_t, std::size_t, std::string>>;

EdgeFingerprint edge_fingerprint(const MotifPattern& pattern, const std::vector<std::size_t>& perm) {
  EdgeFingerprint fp;
  fp.reserve(pattern.edges.size());
  for (const auto& e : pattern.edges) {
    std::size_t a = perm[e.a];
    std::size_t b = perm[e.b];
    fp.emplace_back(std::min(a, b), std::max(a, b), e.edge_type);
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

}  // namespace

SlotPermutations slot_automorphisms(const MotifPattern& pattern) {
  std::size_t s = pattern.slots.size();
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  SlotPermutations result;
  if (s > 8) {  // patterns are small by construction; refuse s! blowups
    result.push_back(perm);
    return result;
  }
  EdgeFingerprint identity_fp = edge_fingerprint(pattern, perm);
  do {
    bool types_ok = true;
    for (std::size_t i = 0; i < s && types_ok; ++i)
      types_ok = pattern.slots[perm[i]].type == pattern.slots[i].type;
    if (!types_ok) continue;
    if (edge_fingerprint(pattern, perm) == identity_fp) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

std::vector<NodeId> canonical_binding(const HeteroGraph& graph, const SlotPermutations& autos,
                                      std::span<const NodeId> nodes) {
  std::size_t s = nodes.size();
  std::vector<NodeId> best(nodes.begin(), nodes.end());
  std::vector<NodeId> cur(s);
  auto less_by_label = [&](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    for (std::size_t i = 0; i < s; ++i) {
      int c = graph.node_label(a[i]).compare(graph.node_label(b[i]));
      if (c != 0) return c < 0;
    }
    return false;
  };
  for (const auto& perm : autos) {
    for (std::size_t i = 0; i < s; ++i) cur[i] = nodes[perm[i]];
    if (less_by_label(cur, best)) best = cur;
  }
  return best;
}

std::string canonical_form(const HeteroGraph& graph, const MotifPattern& pattern,
                           std::span<const NodeId> nodes) {
  auto autos = slot_automorphisms(pattern);
  auto arranged = canonical_binding(graph, autos, nodes);
  std::string key;
  for (std::size_t i = 0; i < arranged.size(); ++i) {
    if (i) key += kKeySep;
    key += graph.node_label(arranged[i]);
  }
  return key;
}

MotifInstance make_instance(const HeteroGraph& graph, const MotifPattern& pattern,
                            const SlotPermutations& autos, std::span<const NodeId> nodes) {
  MotifInstance inst;
  inst.pattern = pattern;
  inst.nodes = canonical_binding(graph, autos, nodes);
  std::string key;
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) {
    if (i) key += kKeySep;
    key += graph.node_label(inst.nodes[i]);
  }
  inst.key = std::move(key);
  return inst;
}

MotifInstance make_instance(const HeteroGraph& graph, const MotifPattern& pattern,
                            std::span<const NodeId> nodes) {
  return make_instance(graph, pattern, slot_automorphisms(pattern), nodes);
}

bool bind_instance(const HeteroGraph& graph, const MotifPattern& pattern, const SlotBinding& binding,
                   MotifInstance& out, std::string& reason) {
  std::vector<NodeId> nodes(pattern.slots.size(), kNoNode);
  for (std::size_t i = 0; i < pattern.slots.size(); ++i) {
    const auto& slot = pattern.slots[i];
    auto it = binding.find(slot.id);
    if (it == binding.end()) {
      reason = "missing binding for slot '" + slot.id + "'";
      return false;
    }
    auto n = graph.find_node(it->second);
    if (!n) {
      reason = "node '" + it->second + "' not in graph";
      return false;
    }
    if (graph.type_name(graph.node_type(*n)) != slot.type) {
      reason = "node '" + it->second + "' is not of type '" + slot.type + "'";
      return false;
    }
    nodes[i] = *n;
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) {
        reason = "slots '" + pattern.slots[i].id + "' and '" + pattern.slots[j].id +
                 "' bound to the same node";
        return false;
      }
    }
  }
  for (const auto& e : pattern.edges) {
    bool present;
    if (e.edge_type.empty()) {
      present = graph.has_edge_between(nodes[e.a], nodes[e.b]);
    } else {
      auto et = graph.find_edge_type(e.edge_type);
      present = et && graph.has_edge_between(nodes[e.a], nodes[e.b], *et);
    }
    if (!present) {
      reason = "pattern edge " + graph.node_label(nodes[e.a]) + "-" + graph.node_label(nodes[e.b]) +
               " missing in graph";
      return false;
    }
  }
  out = make_instance(graph, pattern, nodes);
  return true;
}

bool InstanceSet::insert(MotifInstance instance) {
  auto [it, fresh] = index_.emplace(instance.key, items_.size());
  if (!fresh) return false;
  items_.push_back(std::move(instance));
  return true;
}

namespace {

struct Matcher {
  const HeteroGraph& graph;
  const MotifPattern& pattern;
  std::vector<std::optional<TypeId>> slot_types;          // nullopt: type absent from graph
  std::vector<std::optional<EdgeTypeId>> edge_type_ids;   // per pattern edge; nullopt = any
  std::vector<std::vector<std::size_t>> edges_at;         // slot -> incident pattern-edge indexes
  std::vector<NodeId> bound;
  std::vector<std::vector<NodeId>> results;
  bool feasible = true;

  Matcher(const HeteroGraph& g, const MotifPattern& p) : graph(g), pattern(p) {
    slot_types.resize(p.slots.size());
    for (std::size_t i = 0; i < p.slots.size(); ++i) {
      slot_types[i] = g.find_type(p.slots[i].type);
      if (!slot_types[i]) feasible = false;
    }
    edge_type_ids.resize(p.edges.size());
    edges_at.resize(p.slots.size());
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
      if (!p.edges[e].edge_type.empty()) {
        edge_type_ids[e] = g.find_edge_type(p.edges[e].edge_type);
        if (!edge_type_ids[e]) feasible = false;
      }
      edges_at[p.edges[e].a].push_back(e);
      edges_at[p.edges[e].b].push_back(e);
    }
    bound.assign(p.slots.size(), kNoNode);
  }

  bool edge_ok(std::size_t edge_index, NodeId a, NodeId b) const {
    const auto& et = edge_type_ids[edge_index];
    return et ? graph.has_edge_between(a, b, *et) : graph.has_edge_between(a, b);
  }

  bool consistent_at(std::size_t slot, NodeId node) const {
    for (std::size_t i = 0; i < bound.size(); ++i) {
      if (bound[i] == node) return false;  // injective bindings
    }
    for (std::size_t e : edges_at[slot]) {
      std::size_t other = pattern.edges[e].a == slot ? pattern.edges[e].b : pattern.edges[e].a;
      if (bound[other] != kNoNode && !edge_ok(e, node, bound[other])) return false;
    }
    return true;
  }

  // Next slot to extend: first unbound one adjacent to a bound slot, so the
  // search stays anchored; falls back to the first unbound slot.
  std::size_t pick_slot() const {
    std::size_t fallback = bound.size();
    for (std::size_t i = 0; i < bound.size(); ++i) {
      if (bound[i] != kNoNode) continue;
      if (fallback == bound.size()) fallback = i;
      for (std::size_t e : edges_at[i]) {
        std::size_t other = pattern.edges[e].a == i ? pattern.edges[e].b : pattern.edges[e].a;
        if (bound[other] != kNoNode) return i;
      }
    }
    return fallback;
  }

  void search(std::size_t remaining) {
    if (remaining == 0) {
      results.push_back(bound);
      return;
    }
    std::size_t slot = pick_slot();
    TypeId want = *slot_types[slot];

    // Prefer enumerating neighbors of an already-bound adjacent slot.
    for (std::size_t e : edges_at[slot]) {
      std::size_t other = pattern.edges[e].a == slot ? pattern.edges[e].b : pattern.edges[e].a;
      if (bound[other] == kNoNode) continue;
      NodeId prev = kNoNode;
      for (const Arc& arc : graph.neighbors_by_type(bound[other], want)) {
        if (arc.neighbor == prev) continue;  // parallel edges: one try per node
        prev = arc.neighbor;
        if (!consistent_at(slot, arc.neighbor)) continue;
        bound[slot] = arc.neighbor;
        search(remaining - 1);
        bound[slot] = kNoNode;
      }
      return;
    }

    for (NodeId n : graph.nodes_of_type(want)) {
      if (!consistent_at(slot, n)) continue;
      bound[slot] = n;
      search(remaining - 1);
      bound[slot] = kNoNode;
    }
  }
};

}  // namespace

std::vector<std::vector<NodeId>> match_pattern(const HeteroGraph& graph, const MotifPattern& pattern,
                                               std::span<const NodeId> partial) {
  Matcher m(graph, pattern);
  if (!m.feasible) return {};
  std::size_t remaining = pattern.slots.size();
  for (std::size_t i = 0; i < partial.size() && i < m.bound.size(); ++i) {
    if (partial[i] == kNoNode) continue;
    if (graph.node_type(partial[i]) != *m.slot_types[i]) return {};
    if (!m.consistent_at(i, partial[i])) return {};
    m.bound[i] = partial[i];
    --remaining;
  }
  m.search(remaining);
  return std::move(m.results);
}

std::vector<std::vector<NodeId>> match_pattern(const HeteroGraph& graph, const MotifPattern& pattern,
                                               const SlotBinding& partial) {
  std::vector<NodeId> nodes(pattern.slots.size(), kNoNode);
  for (const auto& [slot_id, label] : partial) {
    auto idx = pattern.slot_index(slot_id);
    if (!idx) raise(ErrorKind::QueryParseError, "unknown slot '" + slot_id + "' in partial binding");
    nodes[*idx] = graph.node(label);
  }
  return match_pattern(graph, pattern, nodes);
}

std::vector<NodeId> walk_termini(const HeteroGraph& graph, const ResolvedPath& path, NodeId origin) {
  if (path.types.empty() || graph.node_type(origin) != path.types.front()) return {};
  std::set<NodeId> frontier{origin};
  for (std::size_t step = 1; step < path.types.size(); ++step) {
    std::set<NodeId> next;
    for (NodeId n : frontier) {
      for (const Arc& arc : graph.neighbors_by_type(n, path.types[step])) {
        if (!path.edge_types.empty() && arc.edge_type != path.edge_types[step - 1]) continue;
        next.insert(arc.neighbor);
      }
    }
    frontier = std::move(next);
  }
  std::vector<NodeId> out;
  out.reserve(frontier.size());
  for (NodeId n : frontier) {
    if (n != origin) out.push_back(n);
  }
  return out;
}

CandidateSet expand_from(const HeteroGraph& graph, const MotifPattern& pattern,
                         std::span<const MotifInstance> starts, std::span<const MetaPath> search_paths,
                         unsigned threads) {
  CandidateSet result;

  // The start motifs are part of their own candidate set when pattern-valid.
  for (const auto& s : starts) {
    bool valid = true;
    for (const auto& e : pattern.edges) {
      bool present = e.edge_type.empty()
                         ? graph.has_edge_between(s.nodes[e.a], s.nodes[e.b])
                         : (graph.find_edge_type(e.edge_type) &&
                            graph.has_edge_between(s.nodes[e.a], s.nodes[e.b],
                                                   *graph.find_edge_type(e.edge_type)));
      if (!present) {
        valid = false;
        break;
      }
    }
    if (valid) result.insert(s);
  }

  struct Task {
    const MotifInstance* start;
    const MetaPath* path;
  };
  std::vector<Task> tasks;
  for (const auto& s : starts) {
    for (const auto& p : search_paths) tasks.push_back(Task{&s, &p});
  }

  auto autos = slot_automorphisms(pattern);
  std::vector<std::vector<MotifInstance>> found(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t ti) {
    const Task& task = tasks[ti];
    auto resolved = resolve_path(graph, *task.path);
    if (!resolved) return;  // path types absent from this graph: no expansion

    std::set<NodeId> termini;
    for (NodeId b : task.start->nodes) {
      if (graph.node_type(b) != resolved->types.front()) continue;
      for (NodeId d : walk_termini(graph, *resolved, b)) termini.insert(d);
    }

    TypeId end_type = resolved->types.back();
    std::vector<NodeId> seed(pattern.slots.size(), kNoNode);
    for (NodeId d : termini) {
      if (graph.node_type(d) != end_type) continue;  // always true; guard stays cheap
      for (std::size_t slot = 0; slot < pattern.slots.size(); ++slot) {
        auto st = graph.find_type(pattern.slots[slot].type);
        if (!st || *st != end_type) continue;
        std::fill(seed.begin(), seed.end(), kNoNode);
        seed[slot] = d;
        for (const auto& binding : match_pattern(graph, pattern, seed)) {
          found[ti].push_back(make_instance(graph, pattern, autos, binding));
        }
      }
    }
  });

  for (auto& list : found) {
    for (auto& inst : list) result.insert(std::move(inst));
  }
  return result;
}

ReferenceSet build_reference_set(const HeteroGraph& graph, const QuerySpec& spec,
                                 const CandidateSet& candidates, unsigned threads) {
  if (spec.reference_source == ReferenceSource::Candidates) return candidates;

  std::vector<MotifInstance> provided;
  for (std::size_t i = 0; i < spec.reference_bindings.size(); ++i) {
    MotifInstance inst;
    std::string reason;
    if (!bind_instance(graph, spec.pattern, spec.reference_bindings[i], inst, reason)) {
      raise(ErrorKind::InvalidReference, "reference[" + std::to_string(i) + "]: " + reason);
    }
    provided.push_back(std::move(inst));
  }
  return expand_from(graph, spec.pattern, provided, spec.search_paths, threads);
}

}  // namespace netout
