#include "qpt/state_vector.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include "qpt/errors.hpp"

namespace qpt {

StateVector::StateVector(int n) : n_(n), amps_(domain_size(n)) {
  check_arity(n, kHardMaxArity);
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int n, Index x) {
  StateVector s(n);
  if (x >= s.dimension()) throw InvalidArgument("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[x] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int n, std::vector<Amplitude> amplitudes) {
  check_arity(n, kHardMaxArity);
  if (amplitudes.size() != domain_size(n)) {
    throw InvalidArgument("amplitude count " + std::to_string(amplitudes.size()) +
                          " does not match 2^" + std::to_string(n));
  }
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm_sq() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  for (Index x = 0; x < dimension(); ++x) amps_[x] += other.amps_[x];
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  for (Index x = 0; x < dimension(); ++x) amps_[x] -= other.amps_[x];
  return *this;
}

StateVector& StateVector::operator*=(Amplitude factor) {
  for (auto& a : amps_) a *= factor;
  return *this;
}

Amplitude inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.dimension() != ket.dimension()) throw InvalidArgument("dimension mismatch");
  Amplitude total = 0.0;
  const auto b = bra.amplitudes();
  const auto k = ket.amplitudes();
  for (Index x = 0; x < b.size(); ++x) total += std::conj(b[x]) * k[x];
  return total;
}

StateVector phase_state(const TruthTable& table) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(table.size()));
  std::vector<Amplitude> amps(table.size());
  for (Index x = 0; x < table.size(); ++x) amps[x] = table(x) ? -amp : amp;
  return StateVector::from_amplitudes(table.arity(), std::move(amps));
}

StateVector& hadamard_all(StateVector& s) {
  fast_walsh_hadamard(s.amplitudes());
  s *= 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  return s;
}

StateVector& reflect_about_state(StateVector& s, const StateVector& axis,
                                 Reflection orientation) {
  const Amplitude overlap = inner_product(axis, s);
  auto amps = s.amplitudes();
  const auto ax = axis.amplitudes();
  if (orientation == Reflection::kAboutAxis) {
    for (Index x = 0; x < amps.size(); ++x) amps[x] = 2.0 * overlap * ax[x] - amps[x];
  } else {
    for (Index x = 0; x < amps.size(); ++x) amps[x] -= 2.0 * overlap * ax[x];
  }
  return s;
}

std::span<const std::uint8_t> weight_table(int n) {
  check_arity(n, kHardMaxArity);
  static std::array<std::once_flag, kHardMaxArity + 1> once;
  static std::array<std::vector<std::uint8_t>, kHardMaxArity + 1> tables;
  std::call_once(once[n], [n] {
    auto& t = tables[n];
    t.resize(domain_size(n));
    for (Index x = 0; x < t.size(); ++x) {
      t[x] = static_cast<std::uint8_t>(hamming_weight(x));
    }
  });
  return tables[n];
}

namespace {

std::vector<Amplitude> class_means(const StateVector& s) {
  const int n = s.qubits();
  const auto weights = weight_table(n);
  std::vector<Amplitude> sums(n + 1, 0.0);
  const auto amps = s.amplitudes();
  for (Index x = 0; x < amps.size(); ++x) sums[weights[x]] += amps[x];
  for (int m = 0; m <= n; ++m) sums[m] /= static_cast<double>(binomial(n, m));
  return sums;
}

}  // namespace

StateVector& project_symmetric(StateVector& s) {
  const auto means = class_means(s);
  const auto weights = weight_table(s.qubits());
  auto amps = s.amplitudes();
  for (Index x = 0; x < amps.size(); ++x) amps[x] = means[weights[x]];
  return s;
}

StateVector& reflect_symmetric(StateVector& s) {
  const auto means = class_means(s);
  const auto weights = weight_table(s.qubits());
  auto amps = s.amplitudes();
  for (Index x = 0; x < amps.size(); ++x) amps[x] -= 2.0 * means[weights[x]];
  return s;
}

double projector_probability(const StateVector& s, const ProjectorSpec& projector) {
  if (const auto* single = std::get_if<SingleState>(&projector)) {
    return std::norm(inner_product(single->axis.get(), s));
  }
  // ||P_S s||^2 = sum_m C(n,m) |mean_m|^2
  const auto means = class_means(s);
  double total = 0.0;
  for (std::size_t m = 0; m < means.size(); ++m) {
    total += static_cast<double>(binomial(s.qubits(), static_cast<int>(m))) *
             std::norm(means[m]);
  }
  return total;
}

StateVector apply_projector(StateVector s, const ProjectorSpec& projector) {
  if (const auto* single = std::get_if<SingleState>(&projector)) {
    const StateVector& axis = single->axis.get();
    const Amplitude overlap = inner_product(axis, s);
    StateVector out = axis;
    out *= overlap;
    return out;
  }
  project_symmetric(s);
  return s;
}

bool draw_outcome(double p_one, Rng& rng) {
  if (p_one >= 1.0 - kProbabilitySnap) return true;
  if (p_one <= kProbabilitySnap) return false;
  return uniform_unit(rng) < p_one;
}

Measurement measure_projector(StateVector s, const ProjectorSpec& projector,
                              Rng& rng) {
  StateVector projected = apply_projector(s, projector);
  const bool outcome = draw_outcome(projected.norm_sq(), rng);
  if (!outcome) {
    s -= projected;
    projected = std::move(s);
  }
  // Branch weight from the collapsed vector itself, not 1 - p.
  const double p_observed = projected.norm_sq();
  if (p_observed < kDegenerateBranch) {
    throw NumericalDegeneracy("measured branch has probability " +
                              std::to_string(p_observed));
  }
  projected *= 1.0 / std::sqrt(p_observed);
  return {outcome, std::move(projected)};
}

Index sample_computational(const StateVector& s, Rng& rng) {
  const double u = uniform_unit(rng) * s.norm_sq();
  const auto amps = s.amplitudes();
  double cumulative = 0.0;
  Index last_nonzero = 0;
  for (Index x = 0; x < amps.size(); ++x) {
    const double p = std::norm(amps[x]);
    if (p == 0.0) continue;
    cumulative += p;
    last_nonzero = x;
    if (u < cumulative) return x;
  }
  return last_nonzero;
}

}  // namespace qpt
