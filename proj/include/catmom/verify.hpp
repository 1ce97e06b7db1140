#pragma once

// Property suites backing `catmom verify`. Each suite evaluates a fixed,
// deterministic set of identities over a grid and tallies passes/failures.

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace catmom {

enum class Grid { small, full };

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;  // empty when nothing failed
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool ok() const;
  std::size_t passed() const;
  std::size_t failed() const;
};

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name. The weight suite
/// may throw QuadratureError.
SuiteReport run_suite(std::string_view name, Grid grid);

/// One line per property ("<name>: N pass[, M fail ...]") and a summary line.
void print_report(std::ostream& os, const SuiteReport& report);

}  // namespace catmom
