#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netout {

/// Configuration for the engine-vs-oracle equivalence sweep behind
/// `netout verify` and the acceptance suite.
struct VerifyConfig {
  std::uint64_t seed = 20260808;
  int cases = 100;
  std::uint32_t max_nodes = 40;
  unsigned threads = 1;
  bool inject_fault = false;          // harness self-test: force one mismatch
  std::vector<int> half_lengths = {2, 3, 4};  // symmetric lengths 3, 5, 7
};

struct VerifyReport {
  int cases_run = 0;
  int pair_checks = 0;   // pair-count entries compared
  int mos_checks = 0;
  int failures = 0;
  std::string first_failure;  // includes the seed for reproduction

  bool ok() const { return failures == 0 && cases_run > 0; }
};

/// Runs randomized end-to-end cases and checks, per case: candidate sets,
/// reference sets, every pair count, and MOS under the case's metric against
/// the brute-force oracle. Deterministic for a fixed config.
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace netout
