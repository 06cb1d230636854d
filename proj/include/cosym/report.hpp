#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cosym {

enum class ScalarMode { Exact, Float };

inline const char* to_string(ScalarMode m) {
  return m == ScalarMode::Exact ? "exact" : "float";
}

/// Everything a verification run needs to be reproducible.
struct RunConfig {
  std::size_t plus = 3;
  std::size_t minus = 1;
  ScalarMode mode = ScalarMode::Exact;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-6;  // used in float mode only
  std::vector<std::string> suites;  // empty means: all

  RunConfig();
};

/// The six property suites, in canonical order.
const std::vector<std::string>& all_suite_names();

/// Throws std::invalid_argument with a user-facing message on any bad field;
/// meant to run before any suite does.
void validate(const RunConfig& cfg);

/// First falsified check of a suite, with enough input detail to replay.
struct CheckFailure {
  std::string check;
  std::map<std::string, std::string> inputs;
  std::string message;
};

struct SuiteResult {
  std::string name;
  std::size_t checks_attempted = 0;
  std::size_t checks_passed = 0;
  std::optional<CheckFailure> first_failure;
  std::map<std::string, long> details;  // e.g. the audit dimension triple
  double wall_ms = 0.0;

  bool pass() const { return checks_attempted == checks_passed && !first_failure; }
};

struct Report {
  RunConfig config;
  std::vector<SuiteResult> suites;

  bool overall_pass() const;
};

/// Machine-readable report. Field names and nesting are fixed; nothing
/// time-dependent is included, so identical configs serialize to identical
/// bytes. Wall-clock timings appear only in the text rendering.
nlohmann::json to_json(const Report& r);

/// Human-readable projection of the same data, plus per-suite wall time.
std::string to_text(const Report& r);

}  // namespace cosym
