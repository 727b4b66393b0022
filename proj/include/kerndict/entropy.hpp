#ifndef KERNDICT_ENTROPY_HPP
#define KERNDICT_ENTROPY_HPP

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kerndict/diversity.hpp"
#include "kerndict/error.hpp"
#include "kerndict/gram.hpp"
#include "kerndict/kernels.hpp"

namespace kerndict {

enum class WindowFamily { gaussian, radial_exponential, inverse_multiquadratic };

constexpr std::string_view to_string(WindowFamily family) {
    switch (family) {
        case WindowFamily::gaussian: return "gaussian";
        case WindowFamily::radial_exponential: return "radial-exponential";
        case WindowFamily::inverse_multiquadratic: return "inverse-multiquadratic";
    }
    return "unknown";
}

/**
 * Radial Parzen window w(t), t >= 0 a distance, scaled to integrate to one
 * over R^dim when the profile is integrable there.
 *
 *   gaussian                 exp(-t^2 / sigma^2),  scale (sqrt(pi) sigma)^-d
 *   radial-exponential       exp(-t / sigma)
 *   inverse-multiquadratic   (t^2 + sigma)^-p,     integrable only for p > d/2
 */
template <typename Scalar = double>
struct WindowSpec {
    WindowFamily family = WindowFamily::gaussian;
    Scalar sigma = Scalar(1);
    Scalar p = Scalar(1);
    Eigen::Index dim = 1;
    Scalar normalization = Scalar(1);
    /// False when the profile is not integrable over R^dim and normalization is left at 1.
    bool normalized = true;

    static WindowSpec make(WindowFamily family, Scalar sigma, Eigen::Index dim, Scalar p = Scalar(1)) {
        using std::pow;
        using std::tgamma;
        detail::require(std::isfinite(sigma) && sigma > 0, "window sigma must be positive");
        detail::require(std::isfinite(p) && p > 0, "window exponent p must be positive");
        detail::require(dim >= 1, "window dimension must be at least 1");
        WindowSpec w{family, sigma, p, dim, Scalar(1), true};
        const Scalar d = Scalar(dim);
        const Scalar pi = std::numbers::pi_v<Scalar>;
        switch (family) {
            case WindowFamily::gaussian:
                w.normalization = pow(std::sqrt(pi) * sigma, -d);
                break;
            case WindowFamily::radial_exponential:
                // integral of exp(-|x|/sigma) over R^d = 2 pi^{d/2} / Gamma(d/2) * Gamma(d) * sigma^d
                w.normalization = tgamma(d / 2) / (Scalar(2) * pow(pi, d / 2) * tgamma(d) * pow(sigma, d));
                break;
            case WindowFamily::inverse_multiquadratic:
                if (p > d / 2) {
                    // integral of (|x|^2 + sigma)^-p = pi^{d/2} Gamma(p - d/2) / Gamma(p) * sigma^{d/2 - p}
                    w.normalization = tgamma(p) / (pow(pi, d / 2) * tgamma(p - d / 2) * pow(sigma, d / 2 - p));
                } else {
                    w.normalized = false;
                }
                break;
        }
        return w;
    }

    static WindowSpec gaussian(Scalar sigma, Eigen::Index dim) {
        return make(WindowFamily::gaussian, sigma, dim);
    }

    Scalar operator()(Scalar distance) const {
        using std::exp;
        using std::pow;
        switch (family) {
            case WindowFamily::gaussian:
                return normalization * exp(-distance * distance / (sigma * sigma));
            case WindowFamily::radial_exponential:
                return normalization * exp(-distance / sigma);
            case WindowFamily::inverse_multiquadratic:
                return normalization * pow(distance * distance + sigma, -p);
        }
        throw Error("unknown window family");
    }
};

/// Parzen estimate (1/n) sum_j w(|x - x_j|) in the input space.
template <typename Scalar, typename Derived>
Scalar parzen_input(const Dictionary<Scalar>& dict, const WindowSpec<Scalar>& window,
                    const Eigen::MatrixBase<Derived>& x) {
    detail::require(window.dim == dict.dim(), "window dimension does not match the dictionary");
    detail::require(x.size() == dict.dim(), "dimension mismatch between point and dictionary");
    detail::require(x.allFinite(), "non-finite point coordinate");
    Scalar sum(0);
    for (Eigen::Index j = 0; j < dict.size(); ++j) {
        sum += window(std::sqrt(detail::squared_distance<Scalar>(x, dict.atom(j))));
    }
    return sum / Scalar(dict.size());
}

/// Plug-in values P(x_j) for every atom.
template <typename Scalar>
Vector<Scalar> parzen_input_at_atoms(const Dictionary<Scalar>& dict, const WindowSpec<Scalar>& window) {
    Vector<Scalar> values(dict.size());
    for (Eigen::Index j = 0; j < dict.size(); ++j) {
        values(j) = parzen_input(dict, window, dict.atom(j));
    }
    return values;
}

template <typename Scalar>
Scalar gram_sum(const GramMatrix<Scalar>& K) {
    return K.matrix().sum();
}

/// H2 of the gaussian Parzen estimate, closed form through the Gram sum of the
/// gaussian kernel with the same sigma: (d/2) log(2 pi sigma^2) - log(sum K / n^2).
template <typename Scalar>
Scalar quadratic_entropy_gaussian(const Dictionary<Scalar>& dict, Scalar sigma) {
    const Dictionary<Scalar> gaussian(dict.atoms(), KernelSpec<Scalar>::gaussian(sigma));
    const Scalar n = Scalar(dict.size());
    const Scalar d = Scalar(dict.dim());
    const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
    return d / 2 * std::log(two_pi * sigma * sigma) - std::log(gram_sum(build_gram(gaussian)) / (n * n));
}

/// -log |P|^2_H = -log(sum K / n^2) with the dictionary's own kernel.
template <typename Scalar>
Scalar quadratic_entropy_general(const GramMatrix<Scalar>& K) {
    const Scalar n = Scalar(K.size());
    const Scalar sum = gram_sum(K);
    detail::require(sum > 0, "estimator undefined for this Gram sum");
    return -std::log(sum / (n * n));
}

template <typename Scalar>
Scalar quadratic_entropy_general(const Dictionary<Scalar>& dict) {
    return quadratic_entropy_general(build_gram(dict));
}

namespace detail {

template <typename Derived>
auto checked_probabilities(const Eigen::MatrixBase<Derived>& p, bool normalize) {
    using Scalar = typename Derived::Scalar;
    require(p.size() >= 1, "entropy of an empty distribution");
    require(p.allFinite() && (p.array() > 0).all(), "probabilities must be positive");
    Vector<Scalar> out = p.reshaped();
    if (normalize) {
        out /= out.sum();
    }
    return out;
}

}  // namespace detail

/**
 * Discrete Renyi entropy (1/(1-alpha)) log sum_j p_j^alpha, natural log.
 *
 * alpha = 0 gives log n, alpha = 1 the Shannon entropy -sum p log p and
 * alpha = +inf the min-entropy min_j -log p_j, each by its own branch.
 * Plug-in Parzen values are used as given unless `normalize` is set.
 */
template <typename Derived>
typename Derived::Scalar renyi_entropy(const Eigen::MatrixBase<Derived>& p, typename Derived::Scalar alpha,
                                       bool normalize = false) {
    using Scalar = typename Derived::Scalar;
    detail::require(alpha >= 0, "Renyi order must be nonnegative");
    const auto probs = detail::checked_probabilities(p, normalize);
    if (alpha == 0) {
        return std::log(Scalar(probs.size()));
    }
    if (alpha == 1) {
        return -(probs.array() * probs.array().log()).sum();
    }
    if (std::isinf(alpha)) {
        return -std::log(probs.maxCoeff());
    }
    return std::log(probs.array().pow(alpha).sum()) / (Scalar(1) - alpha);
}

/// Tsallis entropy (1/(q-1)) (1 - sum_j p_j^q).
template <typename Derived>
typename Derived::Scalar tsallis_entropy(const Eigen::MatrixBase<Derived>& p, typename Derived::Scalar q,
                                         bool normalize = false) {
    using Scalar = typename Derived::Scalar;
    detail::require(std::isfinite(q), "Tsallis index must be finite");
    detail::require(q != 1, "Tsallis index q = 1 is the Shannon entropy; use the Renyi order 1");
    const auto probs = detail::checked_probabilities(p, normalize);
    return (Scalar(1) - probs.array().pow(q).sum()) / (q - Scalar(1));
}

enum class DiversityMeasure { distance, approximation, coherence, babel };

constexpr std::string_view to_string(DiversityMeasure measure) {
    switch (measure) {
        case DiversityMeasure::distance: return "distance";
        case DiversityMeasure::approximation: return "approximation";
        case DiversityMeasure::coherence: return "coherence";
        case DiversityMeasure::babel: return "babel";
    }
    return "unknown";
}

template <typename Scalar = double>
struct EntropyFloor {
    DiversityMeasure measure = DiversityMeasure::babel;
    Scalar floor = Scalar(0);
};

/// Either the gaussian Parzen setting (dimension and bandwidth known) or any kernel.
template <typename Scalar = double>
struct EntropyContext {
    bool gaussian = false;
    Eigen::Index dim = 0;
    Scalar sigma = Scalar(0);

    static EntropyContext general() { return {}; }
    static EntropyContext gaussian_window(Eigen::Index dim, Scalar sigma) { return {true, dim, sigma}; }
};

/**
 * Lower bounds on the quadratic entropy implied by each diversity measure.
 *
 * Gaussian context (unit-norm kernel), each added to (d/2) log(2 pi sigma^2) + log n:
 *   babel -log(1 + gamma), coherence -log(1 + (n-1) gamma),
 *   distance as coherence with gamma = sqrt(1 - delta^2), approximation -log(2 - delta^2).
 * General context:
 *   distance      log n - log(R^2 + (n-1) R sqrt(R^2 - delta^2))
 *   approximation log n - log(2 R^2 - delta^2)
 *   coherence     log n - log(R^2 + (n-1) gamma R^2)
 *   babel         log n - log(R^2 + gamma)
 *
 * The approximation floors inherit the approximation ceiling of
 * bounds_from_approximation and can exceed the entropy.
 */
template <typename Scalar>
std::vector<EntropyFloor<Scalar>> entropy_floors_input(const DiversityReport<Scalar>& report,
                                                        const NormBounds<Scalar>& nb, Eigen::Index n,
                                                        const EntropyContext<Scalar>& context) {
    using std::log;
    using std::sqrt;
    detail::require(n >= 1, "entropy floors need at least one atom");
    detail::require(nb.r2 > 0 && nb.R2 >= nb.r2, "norm bounds must satisfy 0 < r^2 <= R^2");
    const Scalar R2 = nb.R2;
    const Scalar R = sqrt(R2);
    const Scalar dist = report.distance_delta;
    const Scalar approx = report.approximation_delta;
    detail::require(dist * dist <= R2 * (Scalar(1) + Scalar(1e-12)),
                    "distance measure exceeds R; distance floor undefined");
    const Scalar dist_slack = report.distance_slack(R2);
    const Scalar log_n = log(Scalar(n));
    const Scalar m = Scalar(n - 1);

    if (context.gaussian) {
        detail::require(context.dim >= 1 && std::isfinite(context.sigma) && context.sigma > 0,
                        "gaussian context needs a dimension and a positive sigma");
        const Scalar base = Scalar(context.dim) / 2 *
                                log(Scalar(2) * std::numbers::pi_v<Scalar> * context.sigma * context.sigma) +
                            log_n;
        const Scalar gamma_from_distance = sqrt(report.distance_slack(Scalar(1)));
        return {
            {DiversityMeasure::distance, base - log(Scalar(1) + m * gamma_from_distance)},
            {DiversityMeasure::approximation, base - log(Scalar(2) - approx * approx)},
            {DiversityMeasure::coherence, base - log(Scalar(1) + m * report.coherence_gamma)},
            {DiversityMeasure::babel, base - log(Scalar(1) + report.babel_gamma)},
        };
    }
    return {
        {DiversityMeasure::distance, log_n - log(R2 + m * R * sqrt(dist_slack))},
        {DiversityMeasure::approximation, log_n - log(Scalar(2) * R2 - approx * approx)},
        {DiversityMeasure::coherence, log_n - log(R2 + m * report.coherence_gamma * R2)},
        {DiversityMeasure::babel, log_n - log(R2 + report.babel_gamma)},
    };
}

template <typename Scalar = double>
struct CorollaryFloors {
    Scalar shannon = Scalar(0);
    Scalar hartley = Scalar(0);
    Scalar min_entropy = Scalar(0);
};

/// A quadratic-entropy floor zeta also bounds H1 and H0 by zeta and H_inf by zeta / 2.
template <typename Scalar>
CorollaryFloors<Scalar> corollary_floors(Scalar zeta) {
    detail::require(std::isfinite(zeta), "entropy floor must be finite");
    return {zeta, zeta, zeta / 2};
}

/// Squared feature-space distance between k(x,.) and k(y,.), clamped at 0 for
/// round-off and rejected when clearly negative.
template <typename Scalar>
Scalar feature_radicand(Scalar kxx, Scalar kxy, Scalar kyy) {
    const Scalar radicand = kxx - Scalar(2) * kxy + kyy;
    detail::require(radicand >= -Scalar(1e-12), "negative feature distance; kernel is not positive definite");
    return std::max(radicand, Scalar(0));
}

/// Parzen estimate in feature space: (1/n) sum_j w(|k(x,.) - k(x_j,.)|).
template <typename Scalar, typename Derived>
Scalar parzen_feature(const Dictionary<Scalar>& dict, const WindowSpec<Scalar>& window,
                      const Eigen::MatrixBase<Derived>& x) {
    detail::require(x.size() == dict.dim(), "dimension mismatch between point and dictionary");
    const auto& spec = dict.spec();
    const Scalar kxx = evaluate(spec, x, x);
    Scalar sum(0);
    for (Eigen::Index j = 0; j < dict.size(); ++j) {
        const auto xj = dict.atom(j);
        sum += window(std::sqrt(feature_radicand(kxx, evaluate(spec, x, xj), evaluate(spec, xj, xj))));
    }
    return sum / Scalar(dict.size());
}

/// Feature-space Parzen values at every atom, read off the Gram matrix.
template <typename Scalar>
Vector<Scalar> parzen_feature_at_atoms(const GramMatrix<Scalar>& K, const WindowSpec<Scalar>& window) {
    const Eigen::Index n = K.size();
    Vector<Scalar> values(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Scalar sum(0);
        for (Eigen::Index j = 0; j < n; ++j) {
            sum += window(std::sqrt(feature_radicand(K(i, i), K(i, j), K(j, j))));
        }
        values(i) = sum / Scalar(n);
    }
    return values;
}

template <typename Scalar = double>
struct FeatureEntropyFloors {
    Scalar shannon = Scalar(0);
    Scalar renyi = Scalar(0);
    Scalar window_at_floor = Scalar(0);
    /// -u log u is increasing only for u <= 1/e; outside it the Shannon floor is not implied.
    bool monotone_regime = true;
};

/// Floors -n w(eps) log w(eps) (Shannon) and (1/(1-alpha)) log(n w(eps)^alpha) for alpha > 1.
template <typename Scalar>
FeatureEntropyFloors<Scalar> feature_entropy_floors(Eigen::Index n, Scalar epsilon,
                                                    const WindowSpec<Scalar>& window, Scalar alpha) {
    using std::log;
    detail::require(n >= 1, "entropy floors need at least one atom");
    detail::require(std::isfinite(epsilon) && epsilon > 0, "distance floor must be positive");
    detail::require(alpha > 1 && std::isfinite(alpha), "feature-space Renyi floor needs a finite order above 1");
    const Scalar w = window(epsilon);
    FeatureEntropyFloors<Scalar> out;
    out.window_at_floor = w;
    out.shannon = -Scalar(n) * w * log(w);
    out.renyi = log(Scalar(n) * std::pow(w, alpha)) / (Scalar(1) - alpha);
    out.monotone_regime = w <= std::exp(Scalar(-1));
    return out;
}

enum class Estimator { quadratic_gaussian, quadratic_general, renyi, shannon, hartley, min_entropy, tsallis };

constexpr std::string_view to_string(Estimator estimator) {
    switch (estimator) {
        case Estimator::quadratic_gaussian: return "quadratic_gaussian";
        case Estimator::quadratic_general: return "quadratic_general";
        case Estimator::renyi: return "renyi";
        case Estimator::shannon: return "shannon";
        case Estimator::hartley: return "hartley";
        case Estimator::min_entropy: return "min_entropy";
        case Estimator::tsallis: return "tsallis";
    }
    return "unknown";
}

enum class Space { input, feature };

constexpr std::string_view to_string(Space space) { return space == Space::input ? "input" : "feature"; }

/// One bound checked against an estimate. Unasserted checks are reported but do not gate `all_bounds_met`.
template <typename Scalar = double>
struct BoundCheck {
    std::string measure;
    Scalar bound = Scalar(0);
    Scalar measured = Scalar(0);
    bool met = false;
    bool asserted = true;
    std::string note;
};

template <typename Scalar = double>
struct EntropyReport {
    Estimator estimator = Estimator::quadratic_general;
    /// Renyi order or Tsallis index where applicable.
    std::optional<Scalar> order;
    Space space = Space::input;
    Scalar value = Scalar(0);
    std::vector<BoundCheck<Scalar>> lower_bounds;
    /// Ceilings on the feature-space Parzen estimate at the atoms.
    std::vector<BoundCheck<Scalar>> upper_bounds;
    std::vector<std::string> warnings;

    bool all_bounds_met() const {
        for (const auto* list : {&lower_bounds, &upper_bounds}) {
            for (const auto& check : *list) {
                if (check.asserted && !check.met) {
                    return false;
                }
            }
        }
        return true;
    }
};

}  // namespace kerndict

#endif  // KERNDICT_ENTROPY_HPP
