#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace qpt {

// Integer encoding of an n-bit string x1 x2 ... xn, with x1 the most
// significant bit. Used for inputs, coefficient strings and table indices.
using Index = std::uint64_t;

inline constexpr int kDefaultMaxArity = 20;
// Dense simulation is refused beyond this, whatever the caller asks for.
inline constexpr int kHardMaxArity = 26;

constexpr Index domain_size(int n) { return Index{1} << n; }

constexpr int hamming_weight(Index x) { return std::popcount(x); }

// a . x mod 2
constexpr int dot_parity(Index a, Index x) { return std::popcount(a & x) & 1; }

// Parses "x1x2...xn" (characters '0'/'1'); throws ParseError otherwise.
Index parse_bitstring(std::string_view text);

std::string format_bitstring(Index value, int n);

// Validates 1 <= n <= min(max_arity, kHardMaxArity); throws InvalidArgument.
void check_arity(int n, int max_arity = kDefaultMaxArity);

// Unnormalized in-place Walsh-Hadamard butterfly. data.size() must be a power
// of two. Applying it twice multiplies every entry by data.size().
template <typename T>
void fast_walsh_hadamard(std::span<T> data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += half << 1) {
      for (std::size_t i = block; i < block + half; ++i) {
        const T u = data[i];
        const T v = data[i + half];
        data[i] = u + v;
        data[i + half] = u - v;
      }
    }
  }
}

}  // namespace qpt
