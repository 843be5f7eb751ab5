#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adjc/rootsys.hpp"

namespace adjc {

enum class CheckStatus { Pass, Fail, Skip };

const char* status_name(CheckStatus status);

struct CheckResult {
  std::string check_id;
  std::string group;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Skip;
  std::string paper_anchor;
};

struct RunOptions {
  std::vector<std::string> groups;  // empty: default_groups()
  std::vector<std::string> suites;  // empty or "all": every suite
  std::uint64_t seed = 1;
  int max_rank = 8;                 // cap for the classical series
};

struct Report {
  std::uint64_t seed = 0;
  int max_rank = 0;
  std::vector<std::string> groups;
  std::vector<std::string> suites;
  std::vector<CheckResult> results;  // sorted by (check_id, group)

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// roots, polytope, fixedpoints, compass, hexagon, grading, freudenthal,
/// bb, character.
const std::vector<std::string>& suite_names();
/// B3..B8, D4..D8, E6, E7, E8, F4, G2.
const std::vector<std::string>& default_groups();

/// Resolves "all" and rejects unknown names with InvalidInput.
std::vector<std::string> expand_suites(const std::vector<std::string>& suites);
/// Accepts B3+, D4+, E6-8, F4, G2, and A1+, C3+ for the structural suites;
/// classical ranks above max_rank are rejected with InvalidInput.
DynkinType parse_group(const std::string& name, int max_rank);

/// Checks of one suite for one group, unsorted.
std::vector<CheckResult> run_group_suite(const RootDatum& datum, const std::string& suite, std::uint64_t seed);

Report run_verification(const RunOptions& options);

std::string render_json(const Report& report);
std::string render_markdown(const Report& report);

}  // namespace adjc
