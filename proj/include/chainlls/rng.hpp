// Deterministic randomness. Every random choice in the project flows from
// one user seed through mt19937_64; integer draws use plain modulo on the
// raw 64-bit output so results are identical across platforms. Independent
// streams (one per grid cell, per retry, per purpose) are derived with the
// splitmix64-based derive() rule below.
#pragma once

#include <cstdint>
#include <random>

#include "chainlls/scalar.hpp"

namespace chainlls {

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform-enough integer in [lo, hi] via modulo; the slight bias is
    // irrelevant here, determinism is what matters.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Field element with integer value drawn from [lo, hi] (reduced mod p
    // in prime mode). Integer values keep rational eliminations small.
    Scalar small_scalar(const Field& f, std::int64_t lo = -5, std::int64_t hi = 5);

    Scalar nonzero_small_scalar(const Field& f, std::int64_t lo = -5,
                                std::int64_t hi = 5);

    // Stream-splitting rule: derive(seed, a, b, c) =
    // splitmix64(splitmix64(splitmix64(seed ^ GOLDEN*a) ^ GOLDEN*b) ^ GOLDEN*c)
    // with GOLDEN = 0x9e3779b97f4a7c15.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t a,
                                std::uint64_t b, std::uint64_t c);

  private:
    std::mt19937_64 gen_;
};

}  // namespace chainlls
