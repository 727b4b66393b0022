#ifndef KERNDICT_DIVERSITY_HPP
#define KERNDICT_DIVERSITY_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "kerndict/error.hpp"
#include "kerndict/gram.hpp"

namespace kerndict {

namespace detail {

template <typename Scalar>
void require_pairwise(const GramMatrix<Scalar>& K) {
    require(K.size() >= 2, "pairwise measure undefined for fewer than two atoms");
}

template <typename Scalar>
Scalar clamped_sqrt(Scalar value) {
    return std::sqrt(std::max(value, Scalar(0)));
}

}  // namespace detail

/// Residual of projecting atom i onto atom j: kappa_ii - kappa_ij^2 / kappa_jj.
template <typename Scalar>
Scalar scaled_distance_squared(const GramMatrix<Scalar>& K, Eigen::Index i, Eigen::Index j) {
    return K(i, i) - K(i, j) * K(i, j) / K(j, j);
}

template <typename Scalar = double>
struct DistanceAnalysis {
    Scalar delta = Scalar(0);
    /// kappa_ii and kappa_ij^2 / kappa_jj of the minimizing pair, so that
    /// R^2 - delta^2 = (R^2 - anchor) + projection without cancellation.
    Scalar anchor = Scalar(0);
    Scalar projection = Scalar(0);
};

template <typename Scalar>
DistanceAnalysis<Scalar> distance_analysis(const GramMatrix<Scalar>& K) {
    detail::require_pairwise(K);
    Scalar best = std::numeric_limits<Scalar>::infinity();
    DistanceAnalysis<Scalar> out;
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        for (Eigen::Index j = 0; j < K.size(); ++j) {
            if (i == j) {
                continue;
            }
            const Scalar value = scaled_distance_squared(K, i, j);
            const Scalar projection = K(i, j) * K(i, j) / K(j, j);
            // near-orthogonal pairs all round to kappa_ii; keep the closest one
            if (value < best || (value == best && projection > out.projection)) {
                best = value;
                out.anchor = K(i, i);
                out.projection = projection;
            }
        }
    }
    out.delta = detail::clamped_sqrt(best);
    return out;
}

/// Smallest scaled-projection distance over ordered pairs i != j.
template <typename Scalar>
Scalar distance_measure(const GramMatrix<Scalar>& K) {
    return distance_analysis(K).delta;
}

/// Unscaled min_{i != j} |k(x_i,.) - k(x_j,.)|.
template <typename Scalar>
Scalar min_feature_distance(const GramMatrix<Scalar>& K) {
    detail::require_pairwise(K);
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        for (Eigen::Index j = i + 1; j < K.size(); ++j) {
            best = std::min(best, K.feature_distance_squared(i, j));
        }
    }
    return detail::clamped_sqrt(best);
}

template <typename Scalar = double>
struct ApproximationAnalysis {
    Scalar delta = Scalar(0);
    /// Largest jitter any of the leave-one-out solves had to apply.
    Scalar jitter_used = Scalar(0);
    /// Unclamped squared residual per atom.
    Vector<Scalar> residuals_squared;
};

template <typename Scalar>
ApproximationAnalysis<Scalar> approximation_analysis(const GramMatrix<Scalar>& K,
                                                     Scalar jitter = Scalar(kDefaultJitter)) {
    detail::require_pairwise(K);
    ApproximationAnalysis<Scalar> out;
    out.residuals_squared.resize(K.size());
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        const auto solution = loo_solve(K, i, jitter);
        out.residuals_squared(i) = loo_residual_squared(K, i, solution);
        out.jitter_used = std::max(out.jitter_used, solution.jitter_applied);
    }
    out.delta = detail::clamped_sqrt(out.residuals_squared.minCoeff());
    return out;
}

/// Smallest residual of projecting any atom onto the span of all the others.
template <typename Scalar>
Scalar approximation_measure(const GramMatrix<Scalar>& K, Scalar jitter = Scalar(kDefaultJitter)) {
    return approximation_analysis(K, jitter).delta;
}

/// Largest normalized correlation |K_ij| / sqrt(K_ii K_jj) over i != j.
template <typename Scalar>
Scalar coherence(const GramMatrix<Scalar>& K) {
    detail::require_pairwise(K);
    Scalar best(0);
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        for (Eigen::Index j = i + 1; j < K.size(); ++j) {
            best = std::max(best, std::abs(K(i, j)) / std::sqrt(K(i, i) * K(j, j)));
        }
    }
    // Cauchy-Schwarz holds only up to round-off.
    return std::min(best, Scalar(1));
}

/// Unnormalized Babel measure: largest off-diagonal absolute row sum.
template <typename Scalar>
Scalar babel(const GramMatrix<Scalar>& K) {
    detail::require_pairwise(K);
    Scalar best(0);
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        Scalar row(0);
        for (Eigen::Index j = 0; j < K.size(); ++j) {
            if (j != i) {
                row += std::abs(K(i, j));
            }
        }
        best = std::max(best, row);
    }
    return best;
}

template <typename Scalar = double>
struct DiversityReport {
    Eigen::Index cardinality = 0;
    Scalar distance_delta = Scalar(0);
    Scalar approximation_delta = Scalar(0);
    Scalar coherence_gamma = Scalar(0);
    Scalar babel_gamma = Scalar(0);
    Scalar jitter_used = Scalar(0);
    /// Minimizing pair of the distance measure; see DistanceAnalysis.
    Scalar distance_anchor = Scalar(0);
    Scalar distance_projection = Scalar(0);

    /// R^2 - distance_delta^2, clamped at 0.
    Scalar distance_slack(Scalar R2) const {
        if (distance_anchor > 0) {
            return std::max(R2 - distance_anchor + distance_projection, Scalar(0));
        }
        return std::max(R2 - distance_delta * distance_delta, Scalar(0));
    }
};

template <typename Scalar>
DiversityReport<Scalar> diversity_report(const GramMatrix<Scalar>& K,
                                         Scalar jitter = Scalar(kDefaultJitter)) {
    detail::require_pairwise(K);
    const auto approx = approximation_analysis(K, jitter);
    const auto dist = distance_analysis(K);
    return {K.size(), dist.delta,  approx.delta,  coherence(K), babel(K),
            approx.jitter_used, dist.anchor, dist.projection};
}

template <typename Scalar>
DiversityReport<Scalar> diversity_report(const Dictionary<Scalar>& dict,
                                         Scalar jitter = Scalar(kDefaultJitter)) {
    detail::require(dict.size() >= 2, "pairwise measure undefined for fewer than two atoms");
    return diversity_report(build_gram(dict), jitter);
}

}  // namespace kerndict

#endif  // KERNDICT_DIVERSITY_HPP
