#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "netout/motif.hpp"

using namespace netout;
using namespace netout::testing;

namespace {

std::set<std::string> keys_of(const InstanceSet& set) {
  std::set<std::string> out;
  for (const auto& inst : set.items()) out.insert(inst.key);
  return out;
}

MotifInstance g1_m1(const HeteroGraph& g) {
  return make_instance(g, aat_pattern(),
                       std::vector<NodeId>{g.node("a1"), g.node("a2"), g.node("t1")});
}

MotifInstance g1_m2(const HeteroGraph& g) {
  return make_instance(g, aat_pattern(),
                       std::vector<NodeId>{g.node("a2"), g.node("a3"), g.node("t3")});
}

}  // namespace

TEST_SUITE("motif") {

TEST_CASE("pattern matching from an empty binding") {
  auto g = g1();
  auto pattern = aat_pattern();
  auto bindings = match_pattern(g, pattern, SlotBinding{});
  CHECK(bindings.size() == 4);  // two instances, A1/A2 interchangeable
  std::set<std::string> canon;
  for (const auto& b : bindings) canon.insert(canonical_form(g, pattern, b));
  CHECK(canon.size() == 2);
}

TEST_CASE("pattern matching with partial bindings") {
  auto g = g1();
  auto pattern = aat_pattern();

  auto from_a1 = match_pattern(g, pattern, SlotBinding{{"A1", "a1"}});
  REQUIRE(from_a1.size() == 1);
  CHECK(from_a1[0] == std::vector<NodeId>{g.node("a1"), g.node("a2"), g.node("t1")});

  auto impossible = match_pattern(g, pattern, SlotBinding{{"A1", "a3"}, {"A2", "a1"}});
  CHECK(impossible.empty());  // no a3-a1 edge
}

TEST_CASE("canonical keys identify automorphic rebindings") {
  auto g = g1();
  auto pattern = aat_pattern();
  auto k1 = canonical_form(g, pattern, std::vector<NodeId>{g.node("a1"), g.node("a2"), g.node("t1")});
  auto k2 = canonical_form(g, pattern, std::vector<NodeId>{g.node("a2"), g.node("a1"), g.node("t1")});
  CHECK(k1 == k2);

  auto k3 = canonical_form(g, pattern, std::vector<NodeId>{g.node("a2"), g.node("a3"), g.node("t3")});
  CHECK(k1 != k3);

  // Asymmetric pattern: A1 carries the term edge, so the author slots are
  // not interchangeable.
  MotifPattern asym;
  asym.slots = {{"A1", "author"}, {"A2", "author"}, {"T", "term"}};
  asym.edges = {{0, 1, ""}, {0, 2, ""}};
  CHECK(slot_automorphisms(asym).size() == 1);
  auto a1 = canonical_form(g, asym, std::vector<NodeId>{g.node("a1"), g.node("a2"), g.node("t1")});
  auto a2 = canonical_form(g, asym, std::vector<NodeId>{g.node("a2"), g.node("a1"), g.node("t1")});
  CHECK(a1 != a2);
}

TEST_CASE("walk termini exclude the origin") {
  auto g = g1();
  auto ata = resolve_path(g, ata_path());
  REQUIRE(ata);
  CHECK(walk_termini(g, *ata, g.node("a1")) == std::vector<NodeId>{g.node("a2")});
  auto from_a2 = walk_termini(g, *ata, g.node("a2"));
  CHECK(from_a2 == std::vector<NodeId>{g.node("a1"), g.node("a3")});
}

TEST_CASE("expansion finds the fixture candidate set") {
  auto g = g1();
  auto pattern = aat_pattern();
  std::vector<MotifInstance> starts{g1_m1(g)};
  std::vector<MetaPath> paths{ata_path()};
  auto candidates = expand_from(g, pattern, starts, paths);
  REQUIRE(candidates.size() == 2);
  CHECK(candidates.items()[0].key == g1_m1(g).key);  // start motif first
  CHECK(candidates.items()[1].key == g1_m2(g).key);
}

TEST_CASE("search paths with types absent from the graph expand nothing") {
  auto g = g1();
  auto pattern = aat_pattern();
  std::vector<MotifInstance> starts{g1_m1(g)};
  MetaPath venue_path;
  venue_path.types = {"author", "venue", "author"};
  std::vector<MetaPath> paths{venue_path};
  auto candidates = expand_from(g, pattern, starts, paths);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates.items()[0].key == g1_m1(g).key);
}

TEST_CASE("overlapping expansions union without duplicates") {
  auto g = g1();
  auto pattern = aat_pattern();
  std::vector<MotifInstance> starts{g1_m1(g), g1_m2(g)};
  std::vector<MetaPath> paths{ata_path()};
  auto candidates = expand_from(g, pattern, starts, paths);
  CHECK(candidates.size() == 2);
  std::set<std::string> seen;
  for (const auto& inst : candidates.items()) CHECK(seen.insert(inst.key).second);
}

TEST_CASE("adding a search path never shrinks the candidate set") {
  auto g = g1();
  auto pattern = aat_pattern();
  std::vector<MotifInstance> starts{g1_m1(g)};
  std::vector<MetaPath> one{ata_path()};
  std::vector<MetaPath> two{ata_path(), tat_path()};
  auto small = keys_of(expand_from(g, pattern, starts, one));
  auto big = keys_of(expand_from(g, pattern, starts, two));
  CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
}

TEST_CASE("expansion order is reproducible and thread-independent") {
  auto g = g1();
  auto pattern = aat_pattern();
  std::vector<MotifInstance> starts{g1_m1(g), g1_m2(g)};
  std::vector<MetaPath> paths{ata_path(), tat_path()};
  auto a = expand_from(g, pattern, starts, paths, 1);
  auto b = expand_from(g, pattern, starts, paths, 1);
  auto c = expand_from(g, pattern, starts, paths, 4);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.items()[i].key == b.items()[i].key);
    CHECK(a.items()[i].key == c.items()[i].key);
  }
}

TEST_CASE("reference set defaults to the candidates") {
  auto g = g1();
  auto spec = parse_query(g1_query_json());
  std::vector<MotifInstance> starts{g1_m1(g)};
  auto candidates = expand_from(g, spec.pattern, starts, spec.search_paths);
  auto refs = build_reference_set(g, spec, candidates);
  CHECK(keys_of(refs) == keys_of(candidates));
}

TEST_CASE("user-provided reference instances pass through without search paths") {
  auto g = g1();
  auto spec = parse_query(g1_query_json());
  spec.reference_source = ReferenceSource::UserProvided;
  spec.reference_bindings = {{{"A1", "a2"}, {"A2", "a3"}, {"T", "t3"}}};
  spec.search_paths.clear();
  auto refs = build_reference_set(g, spec, CandidateSet{});
  REQUIRE(refs.size() == 1);
  CHECK(refs.items()[0].key == g1_m2(g).key);
}

TEST_CASE("invalid user-provided reference instances are rejected") {
  auto g = g1();
  auto spec = parse_query(g1_query_json());
  spec.reference_source = ReferenceSource::UserProvided;
  spec.reference_bindings = {{{"A1", "a1"}, {"A2", "a3"}, {"T", "t1"}}};  // no a1-a3 edge
  try {
    build_reference_set(g, spec, CandidateSet{});
    FAIL("expected InvalidReference");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidReference);
  }
}

}  // TEST_SUITE
