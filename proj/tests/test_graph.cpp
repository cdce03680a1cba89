#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "netout/graph.hpp"

using namespace netout;
using namespace netout::testing;

TEST_SUITE("graph") {

TEST_CASE("construction and typed adjacency") {
  HeteroGraph g;
  g.add_node("a1", "author");
  g.add_node("t1", "term");
  g.add_edge("a1", "t1", "writes", 1.0);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  auto nb = g.neighbors_by_type("a1", "term");
  REQUIRE(nb.size() == 1);
  CHECK(nb[0].first == "t1");
  // symmetric storage: retrievable from the other endpoint
  auto back = g.neighbors_by_type("t1", "author");
  REQUIRE(back.size() == 1);
  CHECK(back[0].first == "a1");
}

TEST_CASE("edge endpoints must exist") {
  HeteroGraph g;
  g.add_node("a1", "author");
  try {
    g.add_edge("a1", "zz", "writes");
    FAIL("expected MissingNode");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingNode);
  }
}

TEST_CASE("re-adding a node under another type conflicts") {
  HeteroGraph g;
  g.add_node("a1", "author");
  CHECK(g.add_node("a1", "author") == g.node("a1"));  // idempotent same-type re-add
  try {
    g.add_node("a1", "term");
    FAIL("expected TypeConflict");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TypeConflict);
  }
}

TEST_CASE("neighbors partitioned by type on the fixture") {
  auto g = g1();
  auto terms_of = [&](const char* a) {
    std::set<std::string> out;
    for (auto& [n, w] : g.neighbors_by_type(a, "term")) out.insert(n);
    return out;
  };
  CHECK(terms_of("a1") == std::set<std::string>{"t1", "t2"});
  CHECK(terms_of("a3") == std::set<std::string>{"t3"});
  CHECK(g.neighbors_by_type("t2", "venue").empty());
  try {
    g.neighbors_by_type("zz", "term");
    FAIL("expected MissingNode");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingNode);
  }
}

TEST_CASE("adjacency partition is exhaustive and disjoint") {
  auto g = g1();
  for (NodeId n = 0; n < g.node_count(); ++n) {
    std::size_t total = 0;
    for (TypeId t = 0; t < g.type_count(); ++t) total += g.neighbors_by_type(n, t).size();
    CHECK(total == g.degree(n));
  }
}

TEST_CASE("parallel edges keep multiplicity") {
  HeteroGraph g;
  g.add_node("a", "author");
  g.add_node("t", "term");
  g.add_edge("a", "t", "writes");
  g.add_edge("a", "t", "writes");
  CHECK(g.neighbors_by_type("a", "term").size() == 2);
  CHECK(g.degree(g.node("a")) == 2);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("degree filtering removes over-threshold nodes with incident edges") {
  auto g = g1();
  auto filtered = filter_high_degree(g, {{"term", 1}});
  CHECK_FALSE(filtered.find_node("t1"));  // degree 2 in the input graph
  CHECK_FALSE(filtered.find_node("t3"));
  CHECK(filtered.find_node("t2"));  // degree 1 survives
  CHECK(filtered.node_count() == 4);
  CHECK(filtered.edge_count() == 3);  // a1-t2, a1-a2, a2-a3
  CHECK(g.node_count() == 6);         // input unmodified
}

TEST_CASE("empty threshold map is the identity") {
  auto g = g1();
  auto filtered = filter_high_degree(g, {});
  CHECK(filtered.node_count() == g.node_count());
  CHECK(filtered.edge_count() == g.edge_count());
}

TEST_CASE("zero threshold removes every node of the type with any edge") {
  auto g = g1();
  auto filtered = filter_high_degree(g, {{"author", 0}});
  CHECK_FALSE(filtered.find_node("a1"));
  CHECK_FALSE(filtered.find_node("a2"));
  CHECK_FALSE(filtered.find_node("a3"));
  CHECK(filtered.edge_count() == 0);
}

TEST_CASE("filtering is idempotent and decided on pre-filter degrees") {
  auto g = g1();
  std::map<std::string, std::uint64_t> t{{"term", 1}, {"author", 2}};
  auto once = filter_high_degree(g, t);
  auto twice = filter_high_degree(once, t);
  CHECK(once.node_count() == twice.node_count());
  CHECK(once.edge_count() == twice.edge_count());
  for (NodeId n = 0; n < once.node_count(); ++n) {
    // survivors never exceeded their threshold in the original graph
    auto original = g.degree(g.node(once.node_label(n)));
    auto it = t.find(once.type_name(once.node_type(n)));
    if (it != t.end()) CHECK(original <= it->second);
  }
}

TEST_CASE("frozen graphs reject mutation") {
  auto g = g1();
  try {
    g.add_node("x", "author");
    FAIL("expected FrozenGraph");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FrozenGraph);
  }
}

}  // TEST_SUITE
