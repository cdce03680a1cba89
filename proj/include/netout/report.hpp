#pragma once

#include <string>
#include <vector>

#include "netout/bench.hpp"
#include "netout/ingest.hpp"
#include "netout/pipeline.hpp"
#include "netout/verify.hpp"

namespace netout {

enum class ReportFormat { Tsv, Json };

struct ReportMeta {
  std::string graph_path;
  std::string query_path;
};

/// Ranked-list report: top-k outliers (ascending) and top-k most similar
/// motifs (descending), plus the optional group distribution. Byte-stable
/// for fixed inputs: no timestamps, no thread counts, fixed float precision.
std::string format_query_report(const QueryRun& run, const ReportMeta& meta, ReportFormat format);

std::string format_stats(const GraphStats& stats, ReportFormat format);

std::string format_bench(const std::vector<BenchPoint>& points, const BenchConfig& config);

std::string format_verify(const VerifyReport& report);

}  // namespace netout
