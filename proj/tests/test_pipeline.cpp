#include "doctest.h"
#include "fixtures.hpp"
#include "netout/pipeline.hpp"
#include "netout/report.hpp"

using namespace netout;
using namespace netout::testing;

TEST_SUITE("pipeline") {

TEST_CASE("fixture query end to end") {
  auto g = g1();
  auto spec = parse_query(g1_query_json());
  RunOptions options;
  options.distribution = true;
  options.groups = 2;
  auto run = run_query(g, spec, options);

  REQUIRE(run.candidates.size() == 2);
  CHECK(run.references.size() == 2);
  REQUIRE(run.ranked.entries.size() == 2);
  CHECK(run.ranked.entries[0].score == doctest::Approx(12.0));
  CHECK(run.ranked.entries[1].score == doctest::Approx(13.0));
  REQUIRE(run.distribution);
  CHECK(run.distribution->groups[0].at("term").count("t3") == 1);
  CHECK(run.distribution->groups[1].at("term").count("t1") == 1);
}

TEST_CASE("validation failures carry every violation") {
  auto g = g1();
  auto spec = parse_query(g1_query_json());
  spec.start_bindings[0]["A2"] = "a3";
  try {
    run_query(g, spec);
    FAIL("expected QueryViolations");
  } catch (const QueryViolations& e) {
    CHECK_FALSE(e.items.empty());
  }
}

TEST_CASE("degree thresholds filter before validation") {
  auto g = g1();
  auto spec = parse_query(g1_query_json());
  RunOptions options;
  options.degree_thresholds["term"] = 1;  // removes t1, breaking the start motif
  CHECK_THROWS_AS(run_query(g, spec, options), QueryViolations);
}

TEST_CASE("metric and top_k overrides apply") {
  auto g = g1();
  auto spec = parse_query(g1_query_json());
  RunOptions options;
  options.metric = Metric::PathSim;
  options.top_k = 1;
  auto run = run_query(g, spec, options);
  CHECK(run.spec.metric == Metric::PathSim);
  CHECK(run.ranked.top_k == 1);
  // PathSim scores differ from raw counts but rank the same two motifs
  CHECK(run.ranked.entries.size() == 2);
}

TEST_CASE("tsv report bytes are stable") {
  auto g = g1();
  auto spec = parse_query(g1_query_json());
  RunOptions options;
  options.distribution = true;
  options.groups = 2;
  auto run = run_query(g, spec, options);
  ReportMeta meta{"g1.tsv", "q1.json"};
  std::string expected =
      "# netout query report\n"
      "# graph=g1.tsv\n"
      "# query=q1.json\n"
      "# metric=mos\n"
      "# candidates=2\n"
      "# references=2\n"
      "# outliers\n"
      "rank\tA1\tA2\tT\tscore\n"
      "1\ta2\ta3\tt3\t12.000\n"
      "2\ta1\ta2\tt1\t13.000\n"
      "# most_similar\n"
      "rank\tA1\tA2\tT\tscore\n"
      "2\ta1\ta2\tt1\t13.000\n"
      "1\ta2\ta3\tt3\t12.000\n"
      "# distribution groups=2\n"
      "group\ttype\tnode\tcount\n"
      "1\tauthor\ta2\t1\n"
      "1\tauthor\ta3\t1\n"
      "1\tterm\tt3\t1\n"
      "2\tauthor\ta1\t1\n"
      "2\tauthor\ta2\t1\n"
      "2\tterm\tt1\t1\n";
  CHECK(format_query_report(run, meta, ReportFormat::Tsv) == expected);

  auto json_text = format_query_report(run, meta, ReportFormat::Json);
  CHECK(json_text.find("\"metric\": \"mos\"") != std::string::npos);
  CHECK(json_text == format_query_report(run, meta, ReportFormat::Json));
}

}  // TEST_SUITE
