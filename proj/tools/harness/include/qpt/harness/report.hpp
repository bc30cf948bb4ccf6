#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qpt/harness/config.hpp"
#include "qpt/harness/runner.hpp"

namespace qpt::harness {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// json: one object (verdicts[], acceptance_rate, stderr, mean_calls,
/// schedule{m,steps,rounds}, seed, distance, ...).
/// csv: header "trial,decision,calls,stage", one row per trial, then
/// "# aggregate:" trailer comments.
/// Output is a pure function of the report minus its duration.
std::string emit_report(const ExperimentReport& report, Format format);

/// Writes to `path`, or stdout when empty. Throws OutputError.
void write_report(const std::string& text, const std::optional<std::string>& path);

}  // namespace qpt::harness
