#pragma once

#include <cstdint>
#include <random>

namespace qpt {

using Rng = std::mt19937_64;

// Stream id reserved for instance generation (perturbations, random tables),
// disjoint from every trial index.
inline constexpr std::uint64_t kInstanceStream = ~std::uint64_t{0};

std::uint64_t splitmix64(std::uint64_t x);

// Counter-mode stream derivation: the engine for stream t depends only on
// (master_seed, t), so trial results do not depend on scheduling.
Rng derive_stream(std::uint64_t master_seed, std::uint64_t stream);

// Uniform in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

// Uniform in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

}  // namespace qpt
