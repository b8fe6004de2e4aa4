#pragma once

// Named verification suites. Each one checks a family of properties of the
// library against an independent oracle, exhaustively on a bounded universe
// or on seeded random samples, and reports every failure with a shrunk
// counterexample.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetawpo/ordinal.hpp"

namespace thetawpo {

struct SuiteParams {
  /// Size or complexity bound; each suite has its own default.
  std::optional<std::size_t> size;
  std::uint64_t seed = 1;
  /// Random sample count for suites that sample; each suite has its own default.
  std::optional<std::size_t> samples;
  /// Restricts ordinal suites to one system; both when empty.
  std::optional<System> system;
};

struct Failure {
  std::vector<std::string> inputs;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  nlohmann::ordered_json params;
  std::uint64_t checked = 0;
  /// At most kMaxFailures entries, sorted.
  std::vector<Failure> failures;

  static constexpr std::size_t kMaxFailures = 50;
  bool passed() const { return failures.empty(); }
};

/// Suite names in a fixed order.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteParams& params = {});

/// {suite, params, checked, failures: [{inputs, expected, got}]}.
nlohmann::ordered_json to_json(const SuiteReport& r);
/// One summary line, then one line per failure.
std::string to_text(const SuiteReport& r);

}  // namespace thetawpo
