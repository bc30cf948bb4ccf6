#include "qpt/truth_table.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <iterator>
#include <numeric>
#include <string>

#include "qpt/errors.hpp"

namespace qpt {

Index parse_bitstring(std::string_view text) {
  if (text.empty() || text.size() > 63) {
    throw ParseError("bit string must have 1..63 characters, got " +
                     std::to_string(text.size()));
  }
  Index value = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("invalid character '" + std::string(1, c) +
                       "' in bit string");
    }
    value = (value << 1) | static_cast<Index>(c - '0');
  }
  return value;
}

std::string format_bitstring(Index value, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) {
    if ((value >> (n - 1 - j)) & 1) out[static_cast<std::size_t>(j)] = '1';
  }
  return out;
}

void check_arity(int n, int max_arity) {
  const int limit = std::min(max_arity, kHardMaxArity);
  if (n < 1 || n > limit) {
    throw InvalidArgument("arity " + std::to_string(n) + " outside [1, " +
                          std::to_string(limit) + "]");
  }
}

TruthTable TruthTable::from_bits(int n, std::vector<std::uint8_t> bits,
                                 int max_arity) {
  check_arity(n, max_arity);
  if (bits.size() != domain_size(n)) {
    throw InvalidArgument("table length " + std::to_string(bits.size()) +
                          " does not match 2^" + std::to_string(n));
  }
  if (std::ranges::any_of(bits, [](std::uint8_t b) { return b > 1; })) {
    throw InvalidArgument("table entries must be 0 or 1");
  }
  return TruthTable(n, std::move(bits));
}

Index TruthTable::disagreements(const TruthTable& other) const {
  if (other.n_ != n_) throw InvalidArgument("arity mismatch");
  Index count = 0;
  for (Index x = 0; x < size(); ++x) count += bits_[x] != other.bits_[x];
  return count;
}

TruthTable linear_fn(int n, Index coefficients, int max_arity) {
  check_arity(n, max_arity);
  if (coefficients >= domain_size(n)) {
    throw InvalidArgument("coefficient string wider than arity");
  }
  std::vector<std::uint8_t> bits(domain_size(n));
  for (Index x = 0; x < bits.size(); ++x) {
    bits[x] = static_cast<std::uint8_t>(dot_parity(coefficients, x));
  }
  return TruthTable::from_bits(n, std::move(bits), max_arity);
}

TruthTable symmetric_fn(std::span<const std::uint8_t> values, int max_arity) {
  if (values.size() < 2) {
    throw InvalidArgument("symmetric_fn needs n+1 >= 2 weight values");
  }
  const int n = static_cast<int>(values.size()) - 1;
  check_arity(n, max_arity);
  std::vector<std::uint8_t> bits(domain_size(n));
  for (Index x = 0; x < bits.size(); ++x) {
    bits[x] = values[static_cast<std::size_t>(hamming_weight(x))];
  }
  return TruthTable::from_bits(n, std::move(bits), max_arity);
}

TruthTable random_fn(int n, Rng& rng, int max_arity) {
  check_arity(n, max_arity);
  std::vector<std::uint8_t> bits(domain_size(n));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
  return TruthTable::from_bits(n, std::move(bits), max_arity);
}

WalshSpectrum walsh_spectrum(const TruthTable& table) {
  std::vector<double> coeffs(table.size());
  for (Index x = 0; x < table.size(); ++x) coeffs[x] = table(x) ? -1.0 : 1.0;
  fast_walsh_hadamard(std::span<double>(coeffs));
  const double scale = 1.0 / static_cast<double>(table.size());
  for (double& c : coeffs) c *= scale;
  return {table.arity(), std::move(coeffs)};
}

LinearDistance distance_to_linear(const TruthTable& table) {
  // Integer transform keeps the argmax and the distance exact.
  std::vector<std::int64_t> sums(table.size());
  for (Index x = 0; x < table.size(); ++x) sums[x] = table(x) ? -1 : 1;
  fast_walsh_hadamard(std::span<std::int64_t>(sums));

  // max_element returns the first maximum, i.e. the smallest index.
  const auto best = std::ranges::max_element(sums);
  const Index a = static_cast<Index>(best - sums.begin());
  const auto n_points = static_cast<std::int64_t>(table.size());
  // agreements - disagreements = sum, agreements + disagreements = N
  const auto disagreements = static_cast<Index>((n_points - *best) / 2);
  return {{disagreements, table.size(), linear_fn(table.arity(), a, kHardMaxArity)},
          a};
}

Index binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Index result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<Index>(n - k + i) / static_cast<Index>(i);
  }
  return result;
}

WeightClassProfile weight_profile(const TruthTable& table) {
  const int n = table.arity();
  WeightClassProfile profile{n, std::vector<Index>(n + 1, 0),
                             std::vector<Index>(n + 1, 0)};
  for (int m = 0; m <= n; ++m) profile.class_sizes[m] = binomial(n, m);
  for (Index x = 0; x < table.size(); ++x) {
    if (table(x)) ++profile.ones[hamming_weight(x)];
  }
  return profile;
}

SymmetricDistance distance_to_symmetric(const TruthTable& table) {
  const auto profile = weight_profile(table);
  std::vector<std::uint8_t> values(profile.ones.size(), 0);
  Index disagreements = 0;
  for (std::size_t m = 0; m < values.size(); ++m) {
    const Index ones = profile.ones[m];
    const Index zeros = profile.class_sizes[m] - ones;
    // l_m <= C/2 maps to 0, including the tie.
    values[m] = 2 * ones > profile.class_sizes[m] ? 1 : 0;
    disagreements += std::min(ones, zeros);
  }
  auto witness = symmetric_fn(values, kHardMaxArity);
  return {{disagreements, table.size(), std::move(witness)}, std::move(values)};
}

double symmetric_weight(const WeightClassProfile& profile) {
  const double n_points = static_cast<double>(domain_size(profile.n));
  double total = 0.0;
  for (std::size_t m = 0; m < profile.ones.size(); ++m) {
    const double size = static_cast<double>(profile.class_sizes[m]);
    const double diff = size - 2.0 * static_cast<double>(profile.ones[m]);
    total += diff * diff / size;
  }
  return total / n_points;
}

TruthTable perturb(const TruthTable& base, Index flips, Rng& rng) {
  if (flips > base.size()) {
    throw InvalidArgument("flip count " + std::to_string(flips) +
                          " exceeds table size " + std::to_string(base.size()));
  }
  std::vector<Index> all(base.size());
  std::iota(all.begin(), all.end(), Index{0});
  std::vector<Index> chosen;
  chosen.reserve(flips);
  std::ranges::sample(all, std::back_inserter(chosen), static_cast<std::ptrdiff_t>(flips),
                      rng);
  std::vector<std::uint8_t> bits(base.bits().begin(), base.bits().end());
  for (Index x : chosen) bits[x] ^= 1;
  return TruthTable::from_bits(base.arity(), std::move(bits), kHardMaxArity);
}

namespace {

std::string strip_trailing(std::string line) {
  while (!line.empty() &&
         std::isspace(static_cast<unsigned char>(line.back()))) {
    line.pop_back();
  }
  return line;
}

}  // namespace

TruthTable read_truth_table(std::istream& in, int max_arity) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("missing arity line");
  header = strip_trailing(header);
  if (header.empty() ||
      !std::ranges::all_of(header, [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("arity line must be a decimal integer, got '" + header + "'");
  }
  if (header.size() > 3) throw ParseError("arity '" + header + "' out of range");
  const int n = std::stoi(header);
  if (n < 1 || n > std::min(max_arity, kHardMaxArity)) {
    throw ParseError("arity " + header + " outside [1, " +
                     std::to_string(std::min(max_arity, kHardMaxArity)) + "]");
  }

  std::string body;
  if (!std::getline(in, body)) throw ParseError("missing truth-table line");
  body = strip_trailing(body);
  if (body.size() != domain_size(n)) {
    throw ParseError("expected " + std::to_string(domain_size(n)) +
                     " table characters, got " + std::to_string(body.size()));
  }
  std::vector<std::uint8_t> bits(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '0' && body[i] != '1') {
      throw ParseError("invalid table character at position " + std::to_string(i));
    }
    bits[i] = static_cast<std::uint8_t>(body[i] - '0');
  }

  std::string rest;
  while (std::getline(in, rest)) {
    if (!strip_trailing(rest).empty()) {
      throw ParseError("unexpected content after truth-table line");
    }
  }
  return TruthTable::from_bits(n, std::move(bits), max_arity);
}

TruthTable load_truth_table(const std::string& path, int max_arity) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open truth-table file '" + path + "'");
  return read_truth_table(in, max_arity);
}

void write_truth_table(std::ostream& out, const TruthTable& table) {
  out << table.arity() << '\n';
  for (auto b : table.bits()) out << (b ? '1' : '0');
  out << '\n';
}

}  // namespace qpt
