#include "cosym/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cosym {

RunConfig::RunConfig() : suites(all_suite_names()) {}

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {"phase",    "action",  "orbits",
                                                 "quotient", "contact", "audit"};
  return names;
}

void validate(const RunConfig& cfg) {
  if (cfg.samples == 0)
    throw std::invalid_argument("config: samples must be at least 1");
  if (cfg.mode == ScalarMode::Float && !(cfg.tol > 0.0))
    throw std::invalid_argument("config: float mode needs a positive tolerance");
  if (cfg.minus != 1)
    throw std::invalid_argument(
        "config: only Lorentzian signatures (q = 1) are supported by the verifier");
  if (cfg.plus < 2)
    throw std::invalid_argument(
        "config: need at least two space-like directions for the null charts");
  if (cfg.suites.empty())
    throw std::invalid_argument("config: suite list is empty");
  const auto& known = all_suite_names();
  for (const std::string& s : cfg.suites) {
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw std::invalid_argument("config: unknown suite '" + s + "'");
    // The contact volume is a 5-form at most; larger signatures have no
    // contact verification.
    if (s == "contact" && 2 * (cfg.plus + cfg.minus) - 3 > 5)
      throw std::invalid_argument(
          "config: the contact suite supports at most signature (3,1)");
  }
}

bool Report::overall_pass() const {
  for (const SuiteResult& s : suites)
    if (!s.pass()) return false;
  return true;
}

namespace {

nlohmann::json failure_json(const std::optional<CheckFailure>& f) {
  if (!f) return nullptr;
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [k, v] : f->inputs) inputs[k] = v;
  return nlohmann::json{{"check", f->check}, {"inputs", inputs}, {"message", f->message}};
}

}  // namespace

nlohmann::json to_json(const Report& r) {
  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteResult& s : r.suites) {
    nlohmann::json details = nlohmann::json::object();
    for (const auto& [k, v] : s.details) details[k] = v;
    suites.push_back({{"name", s.name},
                      {"checks_attempted", s.checks_attempted},
                      {"checks_passed", s.checks_passed},
                      {"first_counterexample", failure_json(s.first_failure)},
                      {"details", details},
                      {"pass", s.pass()}});
  }
  nlohmann::json cfg = {
      {"signature", {r.config.plus, r.config.minus}},
      {"mode", to_string(r.config.mode)},
      {"samples", r.config.samples},
      {"seed", r.config.seed},
      {"tol", r.config.mode == ScalarMode::Float ? nlohmann::json(r.config.tol)
                                                 : nlohmann::json(nullptr)},
      {"suites", r.config.suites},
  };
  return nlohmann::json{
      {"config", cfg}, {"suites", suites}, {"overall_pass", r.overall_pass()}};
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "verify: signature (" << r.config.plus << "," << r.config.minus << "), mode "
     << to_string(r.config.mode) << ", samples " << r.config.samples << ", seed "
     << r.config.seed;
  if (r.config.mode == ScalarMode::Float) os << ", tol " << r.config.tol;
  os << "\n";
  for (const SuiteResult& s : r.suites) {
    os << "  " << s.name;
    for (std::size_t pad = s.name.size(); pad < 10; ++pad) os << ' ';
    os << s.checks_passed << "/" << s.checks_attempted << " checks  "
       << (s.pass() ? "PASS" : "FAIL") << "  (" << s.wall_ms << " ms)\n";
    for (const auto& [k, v] : s.details) os << "      " << k << " = " << v << "\n";
    if (s.first_failure) {
      os << "      first counterexample: " << s.first_failure->check << "\n";
      for (const auto& [k, v] : s.first_failure->inputs)
        os << "        " << k << " = " << v << "\n";
      if (!s.first_failure->message.empty())
        os << "        " << s.first_failure->message << "\n";
      const auto it = s.first_failure->inputs.find("gamma");
      if (it != s.first_failure->inputs.end())
        os << "        replay: cosym inspect --gamma \"" << it->second << "\"\n";
    }
  }
  os << "overall: " << (r.overall_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace cosym
