#ifndef MCDLO_SELFTEST_HPP
#define MCDLO_SELFTEST_HPP

// Executable invariants of every module at desk scale.

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mcdlo::selftest {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double millis = 0;

  bool passed() const { return failures == 0 && cases > 0; }
};

nlohmann::json to_json(const SuiteResult& r);

std::vector<std::string> suite_names();
/// Throws Error for an unknown name.
SuiteResult run_suite(const std::string& name);
std::vector<SuiteResult> run_all();

}  // namespace mcdlo::selftest

#endif  // MCDLO_SELFTEST_HPP
