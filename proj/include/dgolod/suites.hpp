#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dgolod {

/// Outcome of one seeded property suite.
struct SuiteResult {
  std::string id;
  std::string title;
  std::uint64_t seed = 0;
  bool passed = true;
  std::size_t instances = 0;
  std::size_t checks = 0;
  /// The first few failed checks.
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  /// Counts a check; records the message when it fails.
  void expect(bool ok, const std::string& what);
};

struct SuiteInfo {
  int criterion;
  std::string id;
  std::string title;
  SuiteResult (*run)(std::uint64_t seed);
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// The acceptance suites, in criterion order.
const std::vector<SuiteInfo>& all_suites();
/// Runs the suite, filling id, title, seed and timing. Errors become failures.
SuiteResult run_suite(const SuiteInfo& info, std::uint64_t seed);
/// Throws PreconditionError for an unknown id.
const SuiteInfo& find_suite(const std::string& id);

}  // namespace dgolod
