#pragma once

#include "cosym/report.hpp"

namespace cosym {

/// Run the configured property suites and aggregate their results.
/// Deterministic for a fixed config: every suite owns a named substream of
/// the seed. Throws std::invalid_argument on a bad config (before anything
/// runs); never throws on falsification — that is reported in the Report.
Report run_suites(const RunConfig& cfg);

}  // namespace cosym
