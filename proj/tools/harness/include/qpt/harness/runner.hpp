#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpt/harness/config.hpp"
#include "qpt/quantum_tests.hpp"
#include "qpt/truth_table.hpp"

namespace qpt::harness {

struct TrialRecord {
  std::uint64_t trial;
  double eps;  // 0 for bv
  std::string decision;
  bool accepted;
  std::uint64_t calls;  // read from the OracleHandle counter
  std::string stage;
};

struct ScheduleEcho {
  std::uint64_t m;
  std::uint64_t steps;
  std::uint64_t rounds;
  std::uint64_t predicted_total_calls;
  bool guarantees_void;
};

struct DistanceEcho {
  Index disagreements;
  Index domain;
  std::string witness;  // coefficient string, or weight values v0..vn
};

struct CampaignPoint {
  double eps;
  ScheduleEcho schedule;
  std::uint64_t accepted;
  double acceptance_rate;
  double standard_error;
  double mean_calls;
  // every accepting trial used exactly schedule.predicted_total_calls calls
  bool accounting_identity;
};

struct ExperimentReport {
  Mode mode;
  Mode tester;  // equals mode except for campaigns
  std::string function;
  int n;
  std::optional<double> eps;
  std::uint64_t trials;
  std::uint64_t seed;

  std::vector<TrialRecord> verdicts;
  std::uint64_t accepted;
  double acceptance_rate;
  double standard_error;  // binomial, sqrt(p (1 - p) / trials)
  std::uint64_t total_calls;
  double mean_calls;

  std::optional<ScheduleEcho> schedule;
  DistanceEcho linear_distance;
  DistanceEcho symmetric_distance;

  std::vector<CampaignPoint> campaign;
  std::optional<double> slope;  // least-squares d log(mean calls) / d log(eps)
  std::optional<bool> slope_within_band;

  std::chrono::duration<double> duration{};  // not serialized
};

inline constexpr double kSlopeBandLow = -0.75;
inline constexpr double kSlopeBandHigh = -0.6;

/// Throws qpt::ParseError / qpt::InvalidArgument on input problems.
ExperimentReport run(const ExperimentConfig& config);

/// Runs `trials` trials of one tester on a fixed table. Trial t draws from
/// stream first_stream + t of `seed`.
std::vector<TrialRecord> run_trials(const TruthTable& table, Mode tester,
                                    std::optional<double> eps, std::uint64_t trials,
                                    std::uint64_t seed, std::uint64_t first_stream,
                                    unsigned threads);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

ScheduleEcho echo(const TestSchedule& schedule);

}  // namespace qpt::harness
