#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qpt/bits.hpp"
#include "qpt/rng.hpp"

namespace qpt {

/// Exhaustive table of a Boolean function on n-bit inputs.
///
/// Entry x holds f(x) where x is the big-endian encoding of the input string
/// (x1 is the most significant bit). Immutable once built.
class TruthTable {
 public:
  /// Throws InvalidArgument on length mismatch, non-0/1 entries, or an arity
  /// outside [1, max_arity].
  static TruthTable from_bits(int n, std::vector<std::uint8_t> bits,
                              int max_arity = kDefaultMaxArity);

  int arity() const { return n_; }
  Index size() const { return bits_.size(); }
  bool operator()(Index x) const { return bits_[x] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  // Number of inputs on which the two tables differ. Arity must match.
  Index disagreements(const TruthTable& other) const;

  bool operator==(const TruthTable&) const = default;

 private:
  TruthTable(int n, std::vector<std::uint8_t> bits)
      : n_(n), bits_(std::move(bits)) {}

  int n_;
  std::vector<std::uint8_t> bits_;
};

/// Overlaps of |v_f> with the phase states of all linear functions:
/// coeffs[a] = (1/N) sum_x (-1)^(f(x) + a.x).
struct WalshSpectrum {
  int n;
  std::vector<double> coeffs;
};

/// ones[m] = number of weight-m inputs with f(x) = 1; class_sizes[m] = C(n,m).
struct WeightClassProfile {
  int n;
  std::vector<Index> ones;
  std::vector<Index> class_sizes;
};

/// Exact distance from a function to a property, kept as a count of
/// disagreeing inputs over the domain size.
struct DistanceReport {
  Index disagreements;
  Index domain;
  TruthTable witness;

  double epsilon() const {
    return static_cast<double>(disagreements) / static_cast<double>(domain);
  }
  // 1 - 2 epsilon, formed from the integer numerator so it is exact for N <= 2^52.
  double overlap() const {
    return (static_cast<double>(domain) - 2.0 * static_cast<double>(disagreements)) /
           static_cast<double>(domain);
  }
};

struct LinearDistance : DistanceReport {
  Index coefficients;
};

struct SymmetricDistance : DistanceReport {
  std::vector<std::uint8_t> values;  // witness value per Hamming weight 0..n
};

TruthTable linear_fn(int n, Index coefficients, int max_arity = kDefaultMaxArity);

/// f(x) = values[weight(x)]; arity is values.size() - 1.
TruthTable symmetric_fn(std::span<const std::uint8_t> values,
                        int max_arity = kDefaultMaxArity);

/// Uniformly random table.
TruthTable random_fn(int n, Rng& rng, int max_arity = kDefaultMaxArity);

/// O(N log N) via the fast Walsh-Hadamard transform of (-1)^f(x).
WalshSpectrum walsh_spectrum(const TruthTable& table);

/// Nearest linear function a.x; ties go to the smallest a.
LinearDistance distance_to_linear(const TruthTable& table);

WeightClassProfile weight_profile(const TruthTable& table);

/// Nearest symmetric function: weight class m maps to 1 exactly when
/// l_m > C(n,m)/2.
SymmetricDistance distance_to_symmetric(const TruthTable& table);

/// ||P_S v_f||^2 = sum_m (C(n,m) - 2 l_m)^2 / (N C(n,m)).
double symmetric_weight(const WeightClassProfile& profile);

/// Flips exactly `flips` distinct entries chosen uniformly at random.
TruthTable perturb(const TruthTable& base, Index flips, Rng& rng);

Index binomial(int n, int k);

/// Text format: decimal n on the first line, then 2^n characters '0'/'1' in
/// index order. Trailing whitespace is ignored; anything else is a ParseError.
TruthTable read_truth_table(std::istream& in, int max_arity = kDefaultMaxArity);
TruthTable load_truth_table(const std::string& path,
                            int max_arity = kDefaultMaxArity);
void write_truth_table(std::ostream& out, const TruthTable& table);

}  // namespace qpt
