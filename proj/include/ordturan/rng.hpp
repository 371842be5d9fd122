#ifndef ORDTURAN_RNG_HPP
#define ORDTURAN_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace ordturan {

// Seeded generator with portable bounded draws. std::mt19937_64 output is
// fully specified by the standard; the distributions are not, so bounded
// values are produced here by rejection sampling. Identical seeds give
// identical streams on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform value in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform k-subset of {0, ..., universe-1}, ascending.
    std::vector<std::uint32_t> sample_without_replacement(std::uint32_t universe,
                                                          std::uint32_t count);

private:
    std::mt19937_64 engine_;
};

/// Deterministic child seed for a tagged subtask (recursion nodes, retries,
/// per-instance streams). splitmix64-style mixing.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

} // namespace ordturan

#endif
