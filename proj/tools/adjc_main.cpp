// adjc: command-line driver for the verification suites.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "adjc/adjc.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      std::size_t end = item.find(',', start);
      if (end == std::string::npos) end = item.size();
      if (end > start) out.push_back(item.substr(start, end - start));
      start = end + 1;
    }
  }
  return out;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  adjc_string_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of torus-fixed-point data on adjoint varieties"};
  app.set_version_flag("--version", std::string(adjc_version()));
  app.require_subcommand(1);

  std::vector<std::string> groups, suites;
  std::string format = "json", out_path;
  std::uint64_t seed = 1;
  int max_rank = 8;

  char* suite_list = nullptr;
  char* group_list = nullptr;
  adjc_suite_names(&suite_list);
  adjc_default_groups(&group_list);
  const std::string suite_help = "suite to run: all or one of " + take_string(suite_list) + " (repeatable)";
  const std::string group_help = "group such as E7 or B5 (repeatable; default " + take_string(group_list) + ")";

  auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
  verify->add_option("--group,-g", groups, group_help);
  verify->add_option("--suite,-s", suites, suite_help);
  verify->add_option("--format,-f", format, "report format")->check(CLI::IsMember({"json", "markdown"}));
  verify->add_option("--out,-o", out_path, "write the report here instead of stdout");
  verify->add_option("--seed", seed, "seed for covectors and evaluation points (ADJC_SEED overrides)");
  verify->add_option("--rank", max_rank, "highest rank accepted for the classical series")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (const char* env = std::getenv("ADJC_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "adjc: ADJC_SEED is not an unsigned integer: " << env << "\n";
      return kExitUsage;
    }
  }

  groups = split_commas(groups);
  suites = split_commas(suites);
  std::vector<const char*> group_ptrs, suite_ptrs;
  for (const auto& g : groups) group_ptrs.push_back(g.c_str());
  for (const auto& s : suites) suite_ptrs.push_back(s.c_str());

  adjc_report* report = nullptr;
  adjc_status st = adjc_run_suite(group_ptrs.data(), group_ptrs.size(), suite_ptrs.data(), suite_ptrs.size(), seed,
                                  max_rank, &report);
  if (st == ADJC_ERR_INVALID_INPUT) {
    std::cerr << "adjc: " << adjc_last_error() << "\n";
    return kExitUsage;
  }
  if (st != ADJC_OK) {
    std::cerr << "adjc: " << adjc_status_name(st) << ": " << adjc_last_error() << "\n";
    return kExitFail;
  }

  char* text = nullptr;
  st = adjc_report_render(report, format == "json" ? ADJC_FORMAT_JSON : ADJC_FORMAT_MARKDOWN, &text);
  std::size_t failures = 0, total = 0;
  adjc_report_failures(report, &failures);
  adjc_report_result_count(report, &total);
  adjc_report_destroy(report);
  if (st != ADJC_OK) {
    std::cerr << "adjc: " << adjc_last_error() << "\n";
    return kExitFail;
  }
  const std::string rendered = take_string(text);

  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << rendered;
    if (!out) {
      std::cerr << "adjc: cannot write " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::cerr << "adjc: " << total << " checks, " << failures << " failed\n";
  return failures == 0 ? kExitPass : kExitFail;
}
