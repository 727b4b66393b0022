#ifndef KERNDICT_TESTS_SUPPORT_HPP
#define KERNDICT_TESTS_SUPPORT_HPP

#include <initializer_list>

#include "kerndict/kerndict.hpp"
#include "random_dictionary.hpp"

namespace kt {

using kerndict::MatrixXd;
using kerndict::VectorXd;

inline VectorXd vec(std::initializer_list<double> values) {
    VectorXd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v(i++) = x;
    return v;
}

/// Rows of a matrix from nested lists.
inline MatrixXd rows(std::initializer_list<std::initializer_list<double>> data) {
    MatrixXd m(static_cast<Eigen::Index>(data.size()), static_cast<Eigen::Index>(data.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : data) {
        Eigen::Index j = 0;
        for (double x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline kerndict::Dictionary<double> gauss_dict(MatrixXd atoms, double sigma = 1.0) {
    return {std::move(atoms), kerndict::KernelSpec<double>::gaussian(sigma)};
}

inline MatrixXd random_points(kerndict::SeededRng& rng, Eigen::Index n, Eigen::Index d, double scale = 1.0) {
    MatrixXd m(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = scale * rng.normal();
    return m;
}

inline std::vector<kerndict::KernelSpec<double>> all_families() {
    using K = kerndict::KernelSpec<double>;
    return {K::linear(),
            K::polynomial(2, 1),
            K::polynomial(3, 0.5),
            K::projective_exponential(),
            K::inverse_multiquadratic(2, 1),
            K::inverse_multiquadratic(0.5, 1.5),
            K::radial_exponential(0.7),
            K::gaussian(1.3)};
}

}  // namespace kt

#endif
