#include "qpt/harness/runner.hpp"

#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "qpt/classical_tests.hpp"
#include "qpt/errors.hpp"
#include "qpt/oracle.hpp"
#include "qpt/rng.hpp"

namespace qpt::harness {

ScheduleEcho echo(const TestSchedule& schedule) {
  return {schedule.m_first_stage, schedule.grover_steps, schedule.rounds,
          schedule.predicted_total_calls, schedule.guarantees_void};
}

namespace {

std::string round_stage(const char* prefix, std::uint64_t round) {
  return std::string(prefix) + ":" + std::to_string(round);
}

TrialRecord run_one(const TruthTable& table, Mode tester, std::optional<double> eps,
                    Index bv_target, Rng& rng) {
  OracleHandle oracle(table);
  TrialRecord record{0, eps.value_or(0.0), "", false, 0, ""};
  switch (tester) {
    case Mode::kLin:
    case Mode::kSym: {
      const QuantumVerdict verdict = tester == Mode::kLin
                                         ? quantum_linearity_test(oracle, *eps, rng)
                                         : quantum_symmetry_test(oracle, *eps, rng);
      record.accepted = verdict.accepted();
      record.decision = to_string(verdict.decision);
      if (verdict.coefficients) {
        record.decision += "(" + format_bitstring(*verdict.coefficients, table.arity()) + ")";
      }
      record.stage = verdict.stage == StageKind::kComplete
                         ? to_string(verdict.stage)
                         : round_stage(to_string(verdict.stage).c_str(), verdict.round);
      break;
    }
    case Mode::kBlr:
    case Mode::kCsym: {
      const ClassicalVerdict verdict = tester == Mode::kBlr
                                           ? blr_test(oracle, *eps, rng)
                                           : classical_symmetry_test(oracle, *eps, rng);
      record.accepted = verdict.accepted;
      if (tester == Mode::kBlr) {
        record.decision = verdict.accepted ? "linear" : "not-linear";
      } else {
        record.decision = verdict.accepted ? "symmetric" : "not-symmetric";
      }
      record.stage = verdict.accepted ? "complete" : round_stage("round", verdict.rounds_run);
      break;
    }
    case Mode::kBv: {
      const Index output = bernstein_vazirani(oracle, rng);
      record.accepted = output == bv_target;
      record.decision = format_bitstring(output, table.arity());
      record.stage = "single";
      break;
    }
    case Mode::kCampaign:
      throw InvalidArgument("campaign is not a single-trial tester");
  }
  record.calls = oracle.calls();
  return record;
}

}  // namespace

std::vector<TrialRecord> run_trials(const TruthTable& table, Mode tester,
                                    std::optional<double> eps, std::uint64_t trials,
                                    std::uint64_t seed, std::uint64_t first_stream,
                                    unsigned threads) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (tester != Mode::kBv && !eps) throw InvalidArgument("eps required for this tester");
  const Index bv_target =
      tester == Mode::kBv ? distance_to_linear(table).coefficients : Index{0};

  std::vector<TrialRecord> records(trials);
  auto work = [&](std::uint64_t begin, std::uint64_t stride) {
    for (std::uint64_t t = begin; t < trials; t += stride) {
      Rng rng = derive_stream(seed, first_stream + t);
      records[t] = run_one(table, tester, eps, bv_target, rng);
      records[t].trial = first_stream + t;
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(threads, 1u), trials));
  if (workers == 1) {
    work(0, 1);
    return records;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgument("slope fit needs at least two matching points");
  }
  const double count = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

namespace {

struct Aggregate {
  std::uint64_t accepted = 0;
  std::uint64_t total_calls = 0;
  double rate = 0;
  double standard_error = 0;
  double mean_calls = 0;
};

Aggregate aggregate(const std::vector<TrialRecord>& records, std::size_t begin,
                    std::size_t end) {
  Aggregate a;
  for (std::size_t i = begin; i < end; ++i) {
    a.accepted += records[i].accepted ? 1 : 0;
    a.total_calls += records[i].calls;
  }
  const double count = static_cast<double>(end - begin);
  a.rate = static_cast<double>(a.accepted) / count;
  a.standard_error = std::sqrt(a.rate * (1.0 - a.rate) / count);
  a.mean_calls = static_cast<double>(a.total_calls) / count;
  return a;
}

DistanceEcho linear_echo(const TruthTable& table) {
  const auto d = distance_to_linear(table);
  return {d.disagreements, d.domain, format_bitstring(d.coefficients, table.arity())};
}

DistanceEcho symmetric_echo(const TruthTable& table) {
  const auto d = distance_to_symmetric(table);
  std::string values;
  for (auto v : d.values) values.push_back(v ? '1' : '0');
  return {d.disagreements, d.domain, values};
}

std::optional<TestSchedule> schedule_for(Mode tester, std::optional<double> eps) {
  if (!eps) return std::nullopt;
  switch (tester) {
    case Mode::kLin: return linearity_schedule(*eps);
    case Mode::kSym: return symmetry_schedule(*eps);
    case Mode::kBlr:
    case Mode::kCsym: {
      // m rounds of 3 (BLR) or 2 (symmetry) point queries; echoed as m = rounds.
      const auto m = classical_repetitions(*eps);
      const std::uint64_t per_round = tester == Mode::kBlr ? 3 : 2;
      return TestSchedule{*eps, m, 0, m, m * per_round, false};
    }
    default: return std::nullopt;
  }
}

}  // namespace

ExperimentReport run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const TruthTable table = build_function(config.source, config.seed, config.n_max);

  ExperimentReport report{};
  report.mode = config.mode;
  report.tester = config.mode == Mode::kCampaign ? config.campaign_test : config.mode;
  report.function = describe(config.source);
  report.n = table.arity();
  report.eps = config.mode == Mode::kCampaign ? std::nullopt : config.eps;
  report.trials = config.trials;
  report.seed = config.seed;
  report.linear_distance = linear_echo(table);
  report.symmetric_distance = symmetric_echo(table);

  if (config.mode != Mode::kCampaign) {
    const std::optional<double> eps = config.mode == Mode::kBv ? std::nullopt : config.eps;
    report.verdicts =
        run_trials(table, config.mode, eps, config.trials, config.seed, 0, config.threads);
    if (auto s = schedule_for(config.mode, eps)) report.schedule = echo(*s);
  } else {
    std::vector<double> eps_values, mean_calls;
    for (std::size_t p = 0; p < config.grid.size(); ++p) {
      const double eps = config.grid[p];
      const auto points = run_trials(table, config.campaign_test, eps, config.trials,
                                     config.seed, p * config.trials, config.threads);
      const TestSchedule schedule = *schedule_for(config.campaign_test, eps);
      const Aggregate a = aggregate(points, 0, points.size());
      bool identity = true;
      for (const auto& r : points) {
        if (r.accepted && r.calls != schedule.predicted_total_calls) identity = false;
      }
      report.campaign.push_back({eps, echo(schedule), a.accepted, a.rate, a.standard_error,
                                 a.mean_calls, identity});
      eps_values.push_back(eps);
      mean_calls.push_back(a.mean_calls);
      report.verdicts.insert(report.verdicts.end(), points.begin(), points.end());
    }
    report.slope = log_log_slope(eps_values, mean_calls);
    report.slope_within_band = *report.slope >= kSlopeBandLow && *report.slope <= kSlopeBandHigh;
  }

  const Aggregate total = aggregate(report.verdicts, 0, report.verdicts.size());
  report.accepted = total.accepted;
  report.acceptance_rate = total.rate;
  report.standard_error = total.standard_error;
  report.total_calls = total.total_calls;
  report.mean_calls = total.mean_calls;
  report.duration = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace qpt::harness
