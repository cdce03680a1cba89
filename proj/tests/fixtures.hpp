#pragma once

#include <string>

#include "netout/graph.hpp"
#include "netout/query.hpp"

namespace netout::testing {

// Shared small bibliographic fixture: three authors, three terms,
// author-term edges a1-t1 a1-t2 a2-t1 a2-t3 a3-t3 and co-author edges
// a1-a2 a2-a3. Every frozen expected value in the test suite was computed
// on this graph by the brute-force oracle.
inline HeteroGraph g1() {
  HeteroGraph g;
  for (const char* a : {"a1", "a2", "a3"}) g.add_node(a, "author");
  for (const char* t : {"t1", "t2", "t3"}) g.add_node(t, "term");
  g.add_edge("a1", "t1", "writes");
  g.add_edge("a1", "t2", "writes");
  g.add_edge("a2", "t1", "writes");
  g.add_edge("a2", "t3", "writes");
  g.add_edge("a3", "t3", "writes");
  g.add_edge("a1", "a2", "coauthor");
  g.add_edge("a2", "a3", "coauthor");
  g.freeze();
  return g;
}

inline const char* g1_tsv() {
  return
      "a1\tauthor\tt1\tterm\twrites\t1\n"
      "a1\tauthor\tt2\tterm\twrites\t1\n"
      "a2\tauthor\tt1\tterm\twrites\t1\n"
      "a2\tauthor\tt3\tterm\twrites\t1\n"
      "a3\tauthor\tt3\tterm\twrites\t1\n"
      "a1\tauthor\ta2\tauthor\tcoauthor\t1\n"
      "a2\tauthor\ta3\tauthor\tcoauthor\t1\n";
}

// Pattern author-author-term with edges A1-A2, A1-T, A2-T.
inline MotifPattern aat_pattern() {
  MotifPattern p;
  p.slots = {{"A1", "author"}, {"A2", "author"}, {"T", "term"}};
  p.edges = {{0, 1, ""}, {0, 2, ""}, {1, 2, ""}};
  return p;
}

inline MetaPath ata_path() {
  MetaPath p;
  p.types = {"author", "term", "author"};
  return p;
}

inline MetaPath tat_path() {
  MetaPath p;
  p.types = {"term", "author", "term"};
  return p;
}

inline std::string g1_query_json() {
  return R"({
  "pattern": {
    "slots": [{"id":"A1","type":"author"},{"id":"A2","type":"author"},{"id":"T","type":"term"}],
    "edges": [["A1","A2"],["A1","T"],["A2","T"]]
  },
  "start": [{"A1":"a1","A2":"a2","T":"t1"}],
  "search_paths": [["author","term","author"]],
  "score_paths": [
    {"types":["author","term","author"],"weight":1.0},
    {"types":["term","author","term"],"weight":1.0}
  ],
  "reference": "candidates",
  "metric": "mos",
  "top_k": 10
})";
}

}  // namespace netout::testing
