#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qfs {

using Rng = std::mt19937_64;

// splitmix64 step (Steele/Lea/Flood). Used to derive independent sub-stream
// seeds from a (seed, id...) tuple so parallel fan-out stays reproducible.
std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic seed for a named sub-stream: chains every part through splitmix64.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

Rng make_rng(std::initializer_list<std::uint64_t> parts);

// Uniform double in [0,1) from the top 53 bits; avoids std::uniform_real_distribution
// so sequences do not depend on the standard library implementation.
double uniform01(Rng& rng);

// Standard normal via Box-Muller (two uniforms per call, no cached state).
double standard_normal(Rng& rng);

}  // namespace qfs
