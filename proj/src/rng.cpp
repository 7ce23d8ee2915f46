#include "chainlls/rng.hpp"

namespace chainlls {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw InternalError("empty range in uniform_int");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
}

Scalar Rng::small_scalar(const Field& f, std::int64_t lo, std::int64_t hi) {
    return Scalar(f, uniform_int(lo, hi));
}

Scalar Rng::nonzero_small_scalar(const Field& f, std::int64_t lo, std::int64_t hi) {
    for (int tries = 0; tries < 256; ++tries) {
        Scalar s = small_scalar(f, lo, hi);
        if (!s.is_zero()) return s;
    }
    throw InternalError("could not draw a nonzero scalar");
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
    std::uint64_t x = splitmix64(seed ^ (kGolden * a));
    x = splitmix64(x ^ (kGolden * b));
    return splitmix64(x ^ (kGolden * c));
}

}  // namespace chainlls
