#include "adjc/adjc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "adjc/bbinv.hpp"
#include "adjc/errors.hpp"
#include "adjc/verify.hpp"

struct adjc_group {
  adjc::RootDatum datum;
};

struct adjc_report {
  adjc::Report report;
};

namespace {

thread_local std::string g_last_error;

adjc_status fail(adjc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
adjc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return ADJC_OK;
  } catch (const adjc::InvalidInput& e) {
    return fail(ADJC_ERR_INVALID_INPUT, e.what());
  } catch (const adjc::StructuralError& e) {
    return fail(ADJC_ERR_STRUCTURAL, e.what());
  } catch (const adjc::NonGenericCovector& e) {
    return fail(ADJC_ERR_NON_GENERIC, e.what());
  } catch (const adjc::PoleEncountered& e) {
    return fail(ADJC_ERR_POLE, e.what());
  } catch (const adjc::ConsistencyError& e) {
    return fail(ADJC_ERR_CONSISTENCY, e.what());
  } catch (const std::exception& e) {
    return fail(ADJC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ADJC_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

}  // namespace

#define ADJC_REQUIRE(ptr) \
  if (!(ptr)) return fail(ADJC_ERR_NULL_ARGUMENT, #ptr " is null")

extern "C" {

const char* adjc_version(void) { return ADJC_VERSION_STRING; }

const char* adjc_status_name(adjc_status status) {
  switch (status) {
    case ADJC_OK: return "ok";
    case ADJC_ERR_NULL_ARGUMENT: return "null argument";
    case ADJC_ERR_INVALID_INPUT: return "invalid input";
    case ADJC_ERR_STRUCTURAL: return "structural error";
    case ADJC_ERR_NON_GENERIC: return "non-generic covector";
    case ADJC_ERR_POLE: return "pole encountered";
    case ADJC_ERR_CONSISTENCY: return "consistency error";
    case ADJC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case ADJC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* adjc_last_error(void) { return g_last_error.c_str(); }

void adjc_string_free(char* s) { std::free(s); }

adjc_status adjc_group_create(char letter, int rank, adjc_group** out) {
  ADJC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new adjc_group{adjc::build_root_system(letter, rank)}; });
}

adjc_status adjc_group_parse(const char* name, adjc_group** out) {
  ADJC_REQUIRE(name);
  ADJC_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto t = adjc::parse_dynkin_type(name);
    *out = new adjc_group{adjc::build_root_system(t.letter, t.rank)};
  });
}

void adjc_group_destroy(adjc_group* group) { delete group; }

adjc_status adjc_group_name(const adjc_group* group, char** out) {
  ADJC_REQUIRE(group);
  ADJC_REQUIRE(out);
  return guarded([&] { *out = dup_string(group->datum.name()); });
}

adjc_status adjc_group_rank(const adjc_group* group, int* out) {
  ADJC_REQUIRE(group);
  ADJC_REQUIRE(out);
  *out = group->datum.rank();
  return ADJC_OK;
}

adjc_status adjc_group_root_count(const adjc_group* group, size_t* out) {
  ADJC_REQUIRE(group);
  ADJC_REQUIRE(out);
  *out = group->datum.root_total();
  return ADJC_OK;
}

adjc_status adjc_group_long_root_count(const adjc_group* group, size_t* out) {
  ADJC_REQUIRE(group);
  ADJC_REQUIRE(out);
  return guarded([&] { *out = adjc::long_roots(group->datum).size(); });
}

adjc_status adjc_group_lie_dimension(const adjc_group* group, int* out) {
  ADJC_REQUIRE(group);
  ADJC_REQUIRE(out);
  *out = group->datum.lie_algebra_dimension();
  return ADJC_OK;
}

adjc_status adjc_group_adjoint_dimension(const adjc_group* group, int* out) {
  ADJC_REQUIRE(group);
  ADJC_REQUIRE(out);
  return guarded([&] { *out = adjc::gp_dimension(group->datum, adjc::adjoint_parabolic(group->datum)); });
}

adjc_status adjc_group_fixed_point_count(const adjc_group* group, size_t* out) {
  ADJC_REQUIRE(group);
  ADJC_REQUIRE(out);
  return guarded([&] { *out = adjc::adjoint_fixed_points(group->datum).size(); });
}

adjc_status adjc_group_betti_numbers(const adjc_group* group, uint64_t seed, int* buffer, size_t capacity,
                                     size_t* count) {
  ADJC_REQUIRE(group);
  ADJC_REQUIRE(count);
  std::vector<int> betti;
  adjc_status st = guarded([&] {
    const auto& d = group->datum;
    auto x = adjc::make_adjoint_variety(d);
    betti = adjc::betti_numbers(adjc::downgrade_to_line(d, x, adjc::generic_covectors(d, seed, 1).at(0)));
  });
  if (st != ADJC_OK) return st;
  *count = betti.size();
  if (capacity < betti.size() || !buffer) return fail(ADJC_ERR_BUFFER_TOO_SMALL, "buffer holds fewer Betti numbers");
  std::copy(betti.begin(), betti.end(), buffer);
  return ADJC_OK;
}

adjc_status adjc_group_character_check(const adjc_group* group, uint64_t seed, size_t points, int* all_equal) {
  ADJC_REQUIRE(group);
  ADJC_REQUIRE(all_equal);
  return guarded([&] {
    const auto& d = group->datum;
    auto x = adjc::make_adjoint_variety(d);
    int equal = 1;
    for (const auto& t : adjc::evaluation_points(d, seed, points))
      if (adjc::localized_character(d, x, t) != adjc::adjoint_character(d, t)) equal = 0;
    *all_equal = equal;
  });
}

adjc_status adjc_default_groups(char** out) {
  ADJC_REQUIRE(out);
  return guarded([&] { *out = dup_string(join(adjc::default_groups())); });
}

adjc_status adjc_suite_names(char** out) {
  ADJC_REQUIRE(out);
  return guarded([&] { *out = dup_string(join(adjc::suite_names())); });
}

adjc_status adjc_run_suite(const char* const* groups, size_t group_count, const char* const* suites,
                           size_t suite_count, uint64_t seed, int max_rank, adjc_report** out) {
  ADJC_REQUIRE(out);
  *out = nullptr;
  if (group_count > 0 && !groups) return fail(ADJC_ERR_NULL_ARGUMENT, "groups is null");
  if (suite_count > 0 && !suites) return fail(ADJC_ERR_NULL_ARGUMENT, "suites is null");
  return guarded([&] {
    adjc::RunOptions options;
    for (size_t i = 0; i < group_count; ++i) {
      if (!groups[i]) throw adjc::InvalidInput("null group name");
      options.groups.emplace_back(groups[i]);
    }
    for (size_t i = 0; i < suite_count; ++i) {
      if (!suites[i]) throw adjc::InvalidInput("null suite name");
      options.suites.emplace_back(suites[i]);
    }
    options.seed = seed;
    options.max_rank = max_rank;
    *out = new adjc_report{adjc::run_verification(options)};
  });
}

adjc_status adjc_report_render(const adjc_report* report, adjc_format format, char** out) {
  ADJC_REQUIRE(report);
  ADJC_REQUIRE(out);
  if (format != ADJC_FORMAT_JSON && format != ADJC_FORMAT_MARKDOWN) return fail(ADJC_ERR_INVALID_INPUT, "unknown format");
  return guarded([&] {
    *out = dup_string(format == ADJC_FORMAT_JSON ? adjc::render_json(report->report)
                                                 : adjc::render_markdown(report->report));
  });
}

adjc_status adjc_report_result_count(const adjc_report* report, size_t* out) {
  ADJC_REQUIRE(report);
  ADJC_REQUIRE(out);
  *out = report->report.results.size();
  return ADJC_OK;
}

adjc_status adjc_report_failures(const adjc_report* report, size_t* out) {
  ADJC_REQUIRE(report);
  ADJC_REQUIRE(out);
  *out = report->report.failures();
  return ADJC_OK;
}

void adjc_report_destroy(adjc_report* report) { delete report; }

}  // extern "C"
