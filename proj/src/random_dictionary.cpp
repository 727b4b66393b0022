#include "random_dictionary.hpp"

#include <cmath>
#include <numbers>

namespace kerndict {

double SeededRng::normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Dictionary<double> random_dictionary(std::uint64_t seed, const std::optional<KernelSpec<double>>& kernel,
                                     const RandomDictionaryRanges& ranges) {
    SeededRng rng(seed);
    const auto n = rng.integer(ranges.min_atoms, ranges.max_atoms);
    const auto d = rng.integer(ranges.min_dim, ranges.max_dim);
    const double spread = rng.uniform(ranges.min_spread, ranges.max_spread);
    const double sigma = rng.uniform(ranges.min_sigma, ranges.max_sigma);
    MatrixXd atoms(n, d);
    for (Eigen::Index i = 0; i < atoms.rows(); ++i) {
        for (Eigen::Index j = 0; j < atoms.cols(); ++j) {
            atoms(i, j) = spread * rng.normal();
        }
    }
    return {std::move(atoms), kernel.value_or(KernelSpec<double>::gaussian(sigma))};
}

}  // namespace kerndict
