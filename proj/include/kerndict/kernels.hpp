#ifndef KERNDICT_KERNELS_HPP
#define KERNDICT_KERNELS_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "kerndict/error.hpp"

namespace kerndict {

enum class KernelFamily {
    linear,
    polynomial,
    projective_exponential,
    inverse_multiquadratic,
    radial_exponential,
    gaussian,
};

enum class Provenance { analytic, empirical };

constexpr std::string_view to_string(KernelFamily family) {
    switch (family) {
        case KernelFamily::linear: return "linear";
        case KernelFamily::polynomial: return "polynomial";
        case KernelFamily::projective_exponential: return "projective-exponential";
        case KernelFamily::inverse_multiquadratic: return "inverse-multiquadratic";
        case KernelFamily::radial_exponential: return "radial-exponential";
        case KernelFamily::gaussian: return "gaussian";
    }
    return "unknown";
}

constexpr std::string_view to_string(Provenance provenance) {
    return provenance == Provenance::analytic ? "analytic" : "empirical";
}

/**
 * A positive definite kernel from the usual projective/radial families.
 *
 *   linear                  <x,y>
 *   polynomial              (<x,y> + c)^p
 *   projective-exponential  exp(<x,y>)
 *   inverse-multiquadratic  (|x-y|^2 + sigma)^-p
 *   radial-exponential      exp(-|x-y| / sigma)
 *   gaussian                exp(-|x-y|^2 / (2 sigma^2))
 *
 * For inverse-multiquadratic, sigma is an additive constant rather than a
 * bandwidth. Values are immutable once validated.
 */
template <typename Scalar = double>
struct KernelSpec {
    KernelFamily family = KernelFamily::gaussian;
    Scalar p = Scalar(1);
    Scalar c = Scalar(0);
    Scalar sigma = Scalar(1);

    static KernelSpec linear() { return {KernelFamily::linear}; }
    static KernelSpec polynomial(Scalar p, Scalar c) {
        return {KernelFamily::polynomial, p, c};
    }
    static KernelSpec projective_exponential() {
        return {KernelFamily::projective_exponential};
    }
    static KernelSpec inverse_multiquadratic(Scalar sigma, Scalar p) {
        return {KernelFamily::inverse_multiquadratic, p, Scalar(0), sigma};
    }
    static KernelSpec radial_exponential(Scalar sigma) {
        return {KernelFamily::radial_exponential, Scalar(1), Scalar(0), sigma};
    }
    static KernelSpec gaussian(Scalar sigma) {
        return {KernelFamily::gaussian, Scalar(1), Scalar(0), sigma};
    }

    void validate() const {
        detail::require(std::isfinite(p) && p > 0, "kernel parameter p must be positive");
        detail::require(std::isfinite(c) && c >= 0, "kernel parameter c must be nonnegative");
        detail::require(std::isfinite(sigma) && sigma > 0,
                        "kernel parameter sigma must be positive");
    }

    /// kappa(x,x) == 1 everywhere.
    bool unit_norm() const {
        return family == KernelFamily::gaussian || family == KernelFamily::radial_exponential;
    }

    bool radial() const {
        return family == KernelFamily::inverse_multiquadratic ||
               family == KernelFamily::radial_exponential || family == KernelFamily::gaussian;
    }

    friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

namespace detail {

template <typename DerivedX, typename DerivedY>
void check_points(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
    require((x.rows() == 1 || x.cols() == 1) && (y.rows() == 1 || y.cols() == 1),
            "points must be vectors");
    require(x.size() >= 1, "points must have dimension at least 1");
    require(x.size() == y.size(), "dimension mismatch between points");
    require(x.allFinite() && y.allFinite(), "non-finite point coordinate");
}

// Coordinates are read through linear indexing so row and column vectors mix freely.
template <typename Scalar, typename DerivedX, typename DerivedY>
Scalar inner(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
    Scalar sum(0);
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        sum += Scalar(x(k)) * Scalar(y(k));
    }
    return sum;
}

template <typename Scalar, typename DerivedX, typename DerivedY>
Scalar squared_distance(const Eigen::MatrixBase<DerivedX>& x,
                        const Eigen::MatrixBase<DerivedY>& y) {
    Scalar sum(0);
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        const Scalar diff = Scalar(x(k)) - Scalar(y(k));
        sum += diff * diff;
    }
    return sum;
}

template <typename Scalar>
Scalar polynomial_power(Scalar base, Scalar p) {
    require(base >= 0 || std::trunc(p) == p,
            "polynomial kernel undefined for a negative base with non-integer exponent");
    return std::pow(base, p);
}

}  // namespace detail

/// Kernel value kappa(x, y). Throws on invalid parameters, dimension mismatch or non-finite coordinates.
template <typename Scalar, typename DerivedX, typename DerivedY>
Scalar evaluate(const KernelSpec<Scalar>& spec, const Eigen::MatrixBase<DerivedX>& x,
                const Eigen::MatrixBase<DerivedY>& y) {
    using std::exp;
    using std::pow;
    using std::sqrt;
    spec.validate();
    detail::check_points(x, y);
    switch (spec.family) {
        case KernelFamily::linear:
            return detail::inner<Scalar>(x, y);
        case KernelFamily::polynomial:
            return detail::polynomial_power(detail::inner<Scalar>(x, y) + spec.c, spec.p);
        case KernelFamily::projective_exponential:
            return exp(detail::inner<Scalar>(x, y));
        case KernelFamily::inverse_multiquadratic:
            return pow(detail::squared_distance<Scalar>(x, y) + spec.sigma, -spec.p);
        case KernelFamily::radial_exponential:
            return exp(-sqrt(detail::squared_distance<Scalar>(x, y)) / spec.sigma);
        case KernelFamily::gaussian:
            return exp(-detail::squared_distance<Scalar>(x, y) / (Scalar(2) * spec.sigma * spec.sigma));
    }
    throw Error("unknown kernel family");
}

/// Infimum r^2 and supremum R^2 of kappa(x,x).
template <typename Scalar = double>
struct NormBounds {
    Scalar r2 = Scalar(1);
    Scalar R2 = Scalar(1);
    Provenance provenance = Provenance::analytic;
};

/// Analytic bounds for diagonal-constant families; throws for the others.
template <typename Scalar>
NormBounds<Scalar> norm_bounds(const KernelSpec<Scalar>& spec) {
    spec.validate();
    if (spec.unit_norm()) {
        return {Scalar(1), Scalar(1), Provenance::analytic};
    }
    if (spec.family == KernelFamily::inverse_multiquadratic) {
        const Scalar diag = std::pow(spec.sigma, -spec.p);
        return {diag, diag, Provenance::analytic};
    }
    throw Error("norm bounds for kernel family '" + std::string(to_string(spec.family)) +
                "' need a data set");
}

/**
 * Norm bounds over a point set (one point per row).
 *
 * Diagonal-constant families ignore the data and return analytic bounds.
 * Otherwise r^2 and R^2 are the extremes of kappa(x_i, x_i) over the rows
 * and hold only on the observed data.
 */
template <typename Scalar, typename Derived>
NormBounds<Scalar> norm_bounds(const KernelSpec<Scalar>& spec,
                               const Eigen::MatrixBase<Derived>& data) {
    spec.validate();
    if (spec.unit_norm() || spec.family == KernelFamily::inverse_multiquadratic) {
        return norm_bounds(spec);
    }
    detail::require(data.rows() >= 1, "empirical norm bounds need a nonempty data set");
    NormBounds<Scalar> bounds{std::numeric_limits<Scalar>::infinity(), Scalar(0),
                              Provenance::empirical};
    for (Eigen::Index i = 0; i < data.rows(); ++i) {
        const Scalar diag = evaluate(spec, data.row(i), data.row(i));
        bounds.r2 = std::min(bounds.r2, diag);
        bounds.R2 = std::max(bounds.R2, diag);
    }
    detail::require(bounds.r2 > 0, "r^2 = 0 on the data; coherence bounds are undefined");
    detail::require(std::isfinite(bounds.R2), "kernel diagonal overflows on the data");
    return bounds;
}

}  // namespace kerndict

#endif  // KERNDICT_KERNELS_HPP
