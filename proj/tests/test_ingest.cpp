#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "netout/ingest.hpp"

using namespace netout;
using namespace netout::testing;

namespace {

HeteroGraph load_text(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("loads the 7-line fixture file") {
  auto g = load_text(g1_tsv());
  CHECK(g.node_count() == 6);
  CHECK(g.edge_count() == 7);
  CHECK(g.frozen());
}

TEST_CASE("empty input yields the empty graph") {
  auto g = load_text("");
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
  auto stats = graph_stats(g);
  CHECK(stats.edge_count == 0);
  CHECK(stats.avg_degree == 0.0);
  CHECK(stats.per_type.empty());
}

TEST_CASE("comments, blank lines and weights") {
  auto g = load_text("# header\n\na1\tauthor\tt1\tterm\twrites\t2.5\n");
  CHECK(g.node_count() == 2);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0].weight == 2.5);
}

TEST_CASE("malformed lines report the line number") {
  try {
    load_text("a1\tauthor\tt1\tterm\twrites\n" "a\tb\tc\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    load_text("a1\tauthor\tt1\tterm\twrites\tnot_a_number\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("conflicting node type reports the offending id") {
  try {
    load_text("a1\tauthor\tt1\tterm\twrites\n" "t1\tauthor\ta2\tauthor\tcoauthor\n");
    FAIL("expected TypeConflict");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TypeConflict);
    CHECK(std::string(e.what()).find("t1") != std::string::npos);
  }
}

TEST_CASE("fixture statistics") {
  auto g = load_text(g1_tsv());
  auto stats = graph_stats(g);
  CHECK(stats.per_type.at("author").node_count == 3);
  CHECK(stats.per_type.at("term").node_count == 3);
  CHECK(stats.edge_count == 7);
  CHECK(stats.avg_degree == doctest::Approx(14.0 / 6.0));
  CHECK(stats.per_type.at("author").max_degree_node == "a2");
  CHECK(stats.per_type.at("author").max_degree == 4);
  CHECK(stats.per_type.at("term").max_degree_node == "t1");  // ties break to smallest label
  CHECK(stats.per_type.at("term").max_degree == 2);
}

TEST_CASE("statistics after degree filtering") {
  auto g = filter_high_degree(load_text(g1_tsv()), {{"term", 1}});
  auto stats = graph_stats(g);
  CHECK(stats.per_type.at("author").node_count == 3);
  CHECK(stats.per_type.at("term").node_count == 1);
  CHECK(stats.edge_count == 3);
}

TEST_CASE("round trip keeps the node set and edge multiset") {
  auto g = load_text(g1_tsv());
  std::ostringstream out;
  write_edge_list(g, out);
  auto g2 = load_text(out.str());
  REQUIRE(g2.node_count() == g.node_count());
  REQUIRE(g2.edge_count() == g.edge_count());
  for (NodeId n = 0; n < g.node_count(); ++n) {
    auto other = g2.find_node(g.node_label(n));
    REQUIRE(other);
    CHECK(g2.type_name(g2.node_type(*other)) == g.type_name(g.node_type(n)));
    CHECK(g2.degree(*other) == g.degree(n));
  }
}

TEST_CASE("loading is deterministic") {
  auto a = load_text(g1_tsv());
  auto b = load_text(g1_tsv());
  REQUIRE(a.node_count() == b.node_count());
  for (NodeId n = 0; n < a.node_count(); ++n) {
    CHECK(a.node_label(n) == b.node_label(n));
    for (TypeId t = 0; t < a.type_count(); ++t) {
      auto na = a.neighbors_by_type(n, t);
      auto nb = b.neighbors_by_type(n, t);
      REQUIRE(na.size() == nb.size());
      for (std::size_t i = 0; i < na.size(); ++i) CHECK(na[i].neighbor == nb[i].neighbor);
    }
  }
}

}  // TEST_SUITE
