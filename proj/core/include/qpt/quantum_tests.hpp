#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpt/oracle.hpp"
#include "qpt/rng.hpp"
#include "qpt/state_vector.hpp"

namespace qpt {

/// Repetition and step counts for one tester at a given eps.
///
/// predicted_total_calls is the oracle count of a run that accepts:
/// m_first_stage + rounds * (1 + 2 * grover_steps).
struct TestSchedule {
  double eps;
  std::uint64_t m_first_stage;
  std::uint64_t grover_steps;
  std::uint64_t rounds;
  std::uint64_t predicted_total_calls;
  // eps >= 1/8: the soundness analysis does not cover this regime.
  bool guarantees_void;
};

inline constexpr double kGuaranteedEpsBound = 0.125;

/// m = ceil(ln 3 / (2 eps^(2/3))),
/// steps = max(1, round((pi / (sqrt(2) eps^(1/3)) - 1) / 2)),
/// rounds = ceil(8 ln 3 / (pi^2 eps^(1/3))).
/// Throws InvalidArgument unless 0 < eps < 1.
TestSchedule linearity_schedule(double eps);

/// m = ceil(ln 3 / (2 eps^(2/3))),
/// steps = max(1, round(3 pi / (10 eps^(1/3)))),
/// rounds = ceil(ln 3 / (4 eps^(1/3))).
TestSchedule symmetry_schedule(double eps);

enum class Decision { kLinear, kNotLinear, kSymmetric, kNotSymmetric };

enum class StageKind {
  kComplete,       // every stage passed
  kFirstStage,     // BV mismatch, or P_S measured 0 before amplification
  kAmplification,  // an amplification round measured 0
};

struct RoundRecord {
  StageKind stage;
  bool passed;
  std::optional<Index> bv_output;  // first-stage linearity rounds only
};

struct QuantumVerdict {
  Decision decision;
  std::optional<Index> coefficients;  // set for kLinear
  StageKind stage;
  std::uint64_t round;  // 1-based round of the rejection; 0 on acceptance
  std::vector<RoundRecord> trace;
  std::uint64_t oracle_calls;
  TestSchedule schedule;

  bool accepted() const {
    return decision == Decision::kLinear || decision == Decision::kSymmetric;
  }
};

std::string to_string(Decision decision);
std::string to_string(StageKind stage);

/// One BV run: prepare |v_f> (1 call), H on every qubit, sample.
Index bernstein_vazirani(OracleHandle& oracle, Rng& rng);

/// |v_f> followed by `steps` applications of
/// M = (I - 2|v_f><v_f|)(2|v_g><v_g| - I). Costs 1 + 2 steps calls.
StateVector amplify_linearity(OracleHandle& oracle, const StateVector& candidate,
                              std::uint64_t steps);

/// |v_f> followed by `steps` Grover iterations for the symmetric subspace.
/// Each iteration reflects through |v_f> first and then applies I - 2 P_S;
/// in the basis {P_S v_f, (I - P_S) v_f} (normalized) this is the rotation
///   [ 2mu^2-1           2mu(1-mu^2)^1/2 ]
///   [ -2mu(1-mu^2)^1/2  2mu^2-1         ]
/// whose P_S survival probability after n steps is cos^2((n - 1/2) theta).
/// Costs 1 + 2 steps calls.
StateVector amplify_symmetry(OracleHandle& oracle, std::uint64_t steps);

/// Returns the P_g outcome: true when the state is still found on |v_g>.
bool grover_linearity_round(OracleHandle& oracle, Index candidate,
                            std::uint64_t steps, Rng& rng);

/// Returns the P_S outcome: true when the state is found in S.
bool grover_symmetry_round(OracleHandle& oracle, std::uint64_t steps, Rng& rng);

QuantumVerdict quantum_linearity_test(OracleHandle& oracle, double eps, Rng& rng);
QuantumVerdict quantum_symmetry_test(OracleHandle& oracle, double eps, Rng& rng);

enum class Convention {
  kLinearity,  // cos theta = 1 - 2a^2
  kSymmetry,   // cos theta = 2mu^2 - 1
};

struct AngleReport {
  double overlap;
  double theta;                       // in [0, pi]
  std::optional<double> delta_theta;  // pi - theta, linearity only
};

/// Eigenphase of the 2x2 Grover rotation; its eigenvalues are e^(+-i theta).
AngleReport grover_eigenphase(double overlap, Convention convention);

/// Closed-form probability that a round reports a violation (measures 0):
///   linearity: 1/2 (1 + cos((2n+1) theta))
///   symmetry:  1 - cos^2((n - 1/2) theta)
double predicted_rejection(double overlap, std::uint64_t steps, Convention convention);

}  // namespace qpt
