#ifndef KERNDICT_RANDOM_DICTIONARY_HPP
#define KERNDICT_RANDOM_DICTIONARY_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "kerndict/gram.hpp"
#include "kerndict/kernels.hpp"

namespace kerndict {

/// Seeded generator whose output depends only on the mt19937_64 bit stream,
/// not on the standard library's distribution implementations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi) {
        return lo + static_cast<long>(uniform() * static_cast<double>(hi - lo + 1));
    }
    /// Standard normal by Box-Muller.
    double normal();

private:
    std::mt19937_64 engine_;
};

struct RandomDictionaryRanges {
    long min_atoms = 2;
    long max_atoms = 20;
    long min_dim = 1;
    long max_dim = 5;
    double min_spread = 0.5;
    double max_spread = 5.0;
    double min_sigma = 0.3;
    double max_sigma = 3.0;
};

/**
 * Atoms i.i.d. standard normal times a random spread. Without a kernel, a
 * gaussian kernel with a random bandwidth is drawn.
 */
Dictionary<double> random_dictionary(std::uint64_t seed, const std::optional<KernelSpec<double>>& kernel = {},
                                     const RandomDictionaryRanges& ranges = {});

}  // namespace kerndict

#endif  // KERNDICT_RANDOM_DICTIONARY_HPP
