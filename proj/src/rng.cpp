#include "ordturan/rng.hpp"

#include "ordturan/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ordturan {

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("SeededRng::below(0)");
    // Rejection sampling over the largest multiple of bound.
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    for (;;) {
        std::uint64_t v = engine_();
        if (v < limit) return v % bound;
    }
}

std::vector<std::uint32_t> SeededRng::sample_without_replacement(std::uint32_t universe,
                                                                 std::uint32_t count) {
    if (count > universe) throw PreconditionError("sample size exceeds universe");
    std::vector<std::uint32_t> pool(universe);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::uint32_t i = 0; i < count; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(below(universe - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace ordturan
