#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "qpt/bits.hpp"
#include "qpt/rng.hpp"
#include "qpt/truth_table.hpp"

namespace qpt {

using Amplitude = std::complex<double>;

/// Dense n-qubit pure state. The |-> ancilla of the f-controlled-NOT oracle is
/// never stored; the oracle acts as a diagonal +-1 phase on this register.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(int n);

  static StateVector basis(int n, Index x);
  /// Throws InvalidArgument if amplitudes.size() != 2^n.
  static StateVector from_amplitudes(int n, std::vector<Amplitude> amplitudes);

  int qubits() const { return n_; }
  Index dimension() const { return amps_.size(); }

  Amplitude& operator[](Index x) { return amps_[x]; }
  const Amplitude& operator[](Index x) const { return amps_[x]; }
  std::span<Amplitude> amplitudes() { return amps_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }

  double norm_sq() const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(Amplitude factor);

 private:
  StateVector(int n, std::vector<Amplitude> amps) : n_(n), amps_(std::move(amps)) {}

  int n_;
  std::vector<Amplitude> amps_;
};

/// <bra|ket>, conjugate-linear in bra.
Amplitude inner_product(const StateVector& bra, const StateVector& ket);

/// amps[x] = (-1)^f(x) / sqrt(N). Uncounted; OracleHandle::phase_state is the
/// counted path.
StateVector phase_state(const TruthTable& table);

/// H on every qubit: in-place Walsh-Hadamard transform scaled by 1/sqrt(N).
StateVector& hadamard_all(StateVector& s);

enum class Reflection {
  kAboutAxis,    // 2|axis><axis| - I
  kThroughAxis,  // I - 2|axis><axis|
};

/// Axis must be normalized.
StateVector& reflect_about_state(StateVector& s, const StateVector& axis,
                                 Reflection orientation);

/// Unnormalized P_S: each amplitude replaced by the mean over its Hamming
/// weight class.
StateVector& project_symmetric(StateVector& s);

/// I - 2 P_S
StateVector& reflect_symmetric(StateVector& s);

/// Hamming weight of every index in [0, 2^n), built once per n and shared.
std::span<const std::uint8_t> weight_table(int n);

struct SymmetricSubspace {};
struct SingleState {
  std::reference_wrapper<const StateVector> axis;
};
using ProjectorSpec = std::variant<SymmetricSubspace, SingleState>;

/// ||P s||^2
double projector_probability(const StateVector& s, const ProjectorSpec& projector);

/// P s (unnormalized).
StateVector apply_projector(StateVector s, const ProjectorSpec& projector);

struct Measurement {
  bool outcome;  // 1: s was found in the range of P
  StateVector collapsed;
};

/// Projective measurement {P, I - P}. Throws NumericalDegeneracy when the
/// observed branch has probability below 1e-15.
Measurement measure_projector(StateVector s, const ProjectorSpec& projector,
                              Rng& rng);

/// Bernoulli draw with probability `p_one` of returning true. Probabilities
/// within kProbabilitySnap of 0 or 1 are treated as exact.
bool draw_outcome(double p_one, Rng& rng);

inline constexpr double kProbabilitySnap = 1e-12;
inline constexpr double kDegenerateBranch = 1e-15;

/// Computational-basis sample: returns x with probability |amps[x]|^2.
Index sample_computational(const StateVector& s, Rng& rng);

}  // namespace qpt
