#pragma once

#include <span>
#include <string>
#include <vector>

#include "netout/graph.hpp"
#include "netout/query.hpp"

namespace netout {

/// A concrete binding of a pattern's slots to graph nodes, stored in the
/// canonical arrangement for its automorphism class. Patterns are a few
/// slots, so each instance carries its pattern by value.
struct MotifInstance {
  MotifPattern pattern;
  std::vector<NodeId> nodes;  // one per slot, pattern slot order
  std::string key;            // canonical key; equal iff automorphic rebinding
};

using SlotPermutations = std::vector<std::vector<std::size_t>>;

/// Slot permutations preserving slot types and the pattern edge multiset.
/// Patterns are small (a handful of slots), so plain permutation search;
/// computed once per query and reused across instances.
SlotPermutations slot_automorphisms(const MotifPattern& pattern);

/// Canonical slot arrangement of a binding: minimal label tuple over the
/// pattern's automorphisms.
std::vector<NodeId> canonical_binding(const HeteroGraph& graph, const SlotPermutations& autos,
                                      std::span<const NodeId> nodes);

/// Key string for dedup and ordering; equal keys iff one binding is an
/// automorphic rebinding of the other.
std::string canonical_form(const HeteroGraph& graph, const MotifPattern& pattern,
                           std::span<const NodeId> nodes);

MotifInstance make_instance(const HeteroGraph& graph, const MotifPattern& pattern,
                            std::span<const NodeId> nodes);
MotifInstance make_instance(const HeteroGraph& graph, const MotifPattern& pattern,
                            const SlotPermutations& autos, std::span<const NodeId> nodes);

/// Builds an instance from a slot binding, checking node existence, slot
/// types, distinctness and pattern edges. On failure returns false and
/// appends the reason.
bool bind_instance(const HeteroGraph& graph, const MotifPattern& pattern, const SlotBinding& binding,
                   MotifInstance& out, std::string& reason);

/// Insertion-ordered set of instances deduplicated by canonical key.
class InstanceSet {
public:
  /// True if inserted, false if an automorphic duplicate was present.
  bool insert(MotifInstance instance);
  bool contains_key(const std::string& key) const { return index_.count(key) > 0; }

  const std::vector<MotifInstance>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const MotifInstance& operator[](std::size_t i) const { return items_[i]; }

private:
  std::vector<MotifInstance> items_;
  std::unordered_map<std::string, std::size_t> index_;
};

using CandidateSet = InstanceSet;
using ReferenceSet = InstanceSet;

/// All completions of the partial binding such that every pattern edge is a
/// graph edge and slots bind pairwise-distinct nodes. Each distinct binding
/// is reported once, in deterministic DFS order; results are not collapsed
/// to canonical form.
std::vector<std::vector<NodeId>> match_pattern(const HeteroGraph& graph, const MotifPattern& pattern,
                                               const SlotBinding& partial);
std::vector<std::vector<NodeId>> match_pattern(const HeteroGraph& graph, const MotifPattern& pattern,
                                               std::span<const NodeId> partial);

/// All nodes reachable from `origin` by walking the path's type sequence,
/// excluding the origin itself. Walks may revisit nodes.
std::vector<NodeId> walk_termini(const HeteroGraph& graph, const ResolvedPath& path, NodeId origin);

/// Meta-path-guided candidate generation: every search-path walk from every
/// type-compatible bound node of every start instance yields termini; each
/// terminus seeds pattern matching at each type-compatible slot. The start
/// instances themselves are included when pattern-valid. Deduplicated by
/// canonical key; discovery order is start order, then path order, then
/// terminus id order.
CandidateSet expand_from(const HeteroGraph& graph, const MotifPattern& pattern,
                         std::span<const MotifInstance> starts, std::span<const MetaPath> search_paths,
                         unsigned threads = 1);

/// Reference set per the query: the candidate set itself, or the expansion
/// of the user-provided instances by the same procedure. Invalid
/// user-provided instances raise InvalidReference.
ReferenceSet build_reference_set(const HeteroGraph& graph, const QuerySpec& spec,
                                 const CandidateSet& candidates, unsigned threads = 1);

}  // namespace netout
