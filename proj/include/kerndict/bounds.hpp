#ifndef KERNDICT_BOUNDS_HPP
#define KERNDICT_BOUNDS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kerndict/diversity.hpp"
#include "kerndict/error.hpp"
#include "kerndict/gram.hpp"
#include "kerndict/kernels.hpp"

namespace kerndict {

/// Absolute slack allowed when checking a certificate.
inline constexpr double kCertificateTolerance = 1e-9;

enum class Direction { upper, lower };

constexpr std::string_view to_string(Direction direction) {
    return direction == Direction::upper ? "upper" : "lower";
}

/// One checked inequality: `measured <= bound` (upper) or `measured >= bound` (lower).
template <typename Scalar = double>
struct BoundCertificate {
    std::string name;
    Scalar bound_value = Scalar(0);
    Scalar measured_value = Scalar(0);
    Direction direction = Direction::upper;
    bool satisfied = false;
    Provenance provenance = Provenance::analytic;
};

template <typename Scalar>
BoundCertificate<Scalar> make_certificate(std::string name, Direction direction, Scalar bound,
                                          Scalar measured, Provenance provenance) {
    const Scalar tol = Scalar(kCertificateTolerance);
    const bool ok = direction == Direction::upper ? measured <= bound + tol : measured >= bound - tol;
    return {std::move(name), bound, measured, direction, ok, provenance};
}

/// A gamma-coherent dictionary of n atoms has Babel at most (n-1) gamma R^2.
template <typename Scalar>
Scalar babel_bound_from_coherence(Scalar gamma, Eigen::Index n, Scalar R2) {
    detail::require(gamma >= 0 && gamma <= 1, "coherence must lie in [0, 1]");
    detail::require(n >= 2, "bound needs at least two atoms");
    detail::require(R2 > 0, "R^2 must be positive");
    return Scalar(n - 1) * gamma * R2;
}

/// A gamma-Babel dictionary has coherence at most gamma / r^2.
template <typename Scalar>
Scalar coherence_bound_from_babel(Scalar babel_gamma, Scalar r2) {
    detail::require(babel_gamma >= 0, "Babel measure must be nonnegative");
    detail::require(r2 > 0, "r^2 must be positive; coherence bound undefined");
    return babel_gamma / r2;
}

template <typename Scalar = double>
struct ApproximationBounds {
    Scalar babel_bound = Scalar(0);
    Scalar coherence_bound = Scalar(0);
};

/**
 * Babel and coherence ceilings for a delta-approximate dictionary:
 * R^2 - delta^2 and (R^2 - delta^2) / r^2.
 *
 * NOTE: these ceilings do not hold in general. The two-atom gaussian
 * dictionary {0, 1} with sigma = 1 has delta^2 = 1 - e^-1 and Babel e^-1/2,
 * above R^2 - delta^2 = e^-1. They are computed as stated and the
 * certificates built from them report the violations.
 */
template <typename Scalar>
ApproximationBounds<Scalar> bounds_from_approximation(Scalar delta, Scalar r2, Scalar R2) {
    detail::require(delta >= 0, "approximation measure must be nonnegative");
    detail::require(r2 > 0 && R2 >= r2, "norm bounds must satisfy 0 < r^2 <= R^2");
    const Scalar slack = R2 - delta * delta;
    detail::require(slack >= -Scalar(1e-12) * R2, "delta^2 exceeds R^2; inconsistent inputs");
    const Scalar babel_bound = std::max(slack, Scalar(0));
    return {babel_bound, babel_bound / r2};
}

/// Box [gamma / R^2, gamma / r^2] enclosing the normalized Babel measure.
template <typename Scalar>
std::pair<Scalar, Scalar> normalized_babel_box(Scalar babel_gamma, Scalar r2, Scalar R2) {
    detail::require(babel_gamma >= 0, "Babel measure must be nonnegative");
    detail::require(r2 > 0 && R2 >= r2, "norm bounds must satisfy 0 < r^2 <= R^2");
    return {babel_gamma / R2, babel_gamma / r2};
}

enum class FloorMeasure { approximation, coherence, babel };

constexpr std::string_view to_string(FloorMeasure measure) {
    switch (measure) {
        case FloorMeasure::approximation: return "approximation";
        case FloorMeasure::coherence: return "coherence";
        case FloorMeasure::babel: return "babel";
    }
    return "unknown";
}

/**
 * Lower bound on every pairwise feature-space distance |k(x_i,.) - k(x_j,.)|.
 *
 *   approximation  eps = delta
 *   babel          eps = sqrt(2 r^2 - 2 gamma),       needs gamma < r^2
 *   coherence      eps = sqrt(2 r^2 (1 - gamma)),     needs gamma < 1
 *
 * The coherence floor is the minimum of u^2 - 2 gamma u v + v^2 over
 * u, v in [r, R], reached at u = v = r.
 */
template <typename Scalar>
Scalar feature_distance_floor(FloorMeasure measure, Scalar value, Scalar r2, Scalar R2) {
    detail::require(r2 > 0 && R2 >= r2, "norm bounds must satisfy 0 < r^2 <= R^2");
    switch (measure) {
        case FloorMeasure::approximation:
            detail::require(value >= 0, "approximation measure must be nonnegative");
            return value;
        case FloorMeasure::babel:
            detail::require(value >= 0, "Babel measure must be nonnegative");
            detail::require(value < r2, "floor degenerate: Babel measure is not below r^2");
            return std::sqrt(Scalar(2) * r2 - Scalar(2) * value);
        case FloorMeasure::coherence:
            detail::require(value >= 0, "coherence must be nonnegative");
            detail::require(value < 1, "floor degenerate: coherence is not below 1");
            return std::sqrt(Scalar(2) * r2 * (Scalar(1) - value));
    }
    throw Error("unknown floor measure");
}

struct SkippedCertificate {
    std::string name;
    std::string reason;
};

template <typename Scalar = double>
struct CertificateSet {
    DiversityReport<Scalar> report;
    NormBounds<Scalar> bounds;
    Scalar min_feature_distance = Scalar(0);
    std::vector<BoundCertificate<Scalar>> certificates;
    std::vector<SkippedCertificate> skipped;

    bool all_satisfied() const {
        for (const auto& cert : certificates) {
            if (!cert.satisfied) {
                return false;
            }
        }
        return true;
    }
};

/// Measures a Gram matrix and checks every cross-measure bound and feature-distance floor.
template <typename Scalar>
CertificateSet<Scalar> certify(const GramMatrix<Scalar>& K, const NormBounds<Scalar>& nb,
                               Scalar jitter = Scalar(kDefaultJitter)) {
    CertificateSet<Scalar> out;
    out.report = diversity_report(K, jitter);
    out.bounds = nb;
    out.min_feature_distance = min_feature_distance(K);

    const auto& rep = out.report;
    const auto prov = nb.provenance;
    auto& certs = out.certificates;

    certs.push_back(make_certificate("babel_from_coherence", Direction::upper,
                                     babel_bound_from_coherence(rep.coherence_gamma, rep.cardinality, nb.R2),
                                     rep.babel_gamma, prov));
    certs.push_back(make_certificate("coherence_from_babel", Direction::upper,
                                     coherence_bound_from_babel(rep.babel_gamma, nb.r2),
                                     rep.coherence_gamma, prov));

    const auto approx = bounds_from_approximation(rep.approximation_delta, nb.r2, nb.R2);
    certs.push_back(make_certificate("babel_from_approximation", Direction::upper, approx.babel_bound,
                                     rep.babel_gamma, prov));
    certs.push_back(make_certificate("coherence_from_approximation", Direction::upper,
                                     approx.coherence_bound, rep.coherence_gamma, prov));

    if (rep.approximation_delta > 0) {
        certs.push_back(make_certificate(
            "feature_floor_approximation", Direction::lower,
            feature_distance_floor(FloorMeasure::approximation, rep.approximation_delta, nb.r2, nb.R2),
            out.min_feature_distance, prov));
    } else {
        out.skipped.push_back({"feature_floor_approximation", "approximation measure is zero"});
    }
    if (rep.babel_gamma < nb.r2) {
        certs.push_back(make_certificate(
            "feature_floor_babel", Direction::lower,
            feature_distance_floor(FloorMeasure::babel, rep.babel_gamma, nb.r2, nb.R2),
            out.min_feature_distance, prov));
    } else {
        out.skipped.push_back({"feature_floor_babel", "Babel measure is not below r^2"});
    }
    if (rep.coherence_gamma < 1) {
        certs.push_back(make_certificate(
            "feature_floor_coherence", Direction::lower,
            feature_distance_floor(FloorMeasure::coherence, rep.coherence_gamma, nb.r2, nb.R2),
            out.min_feature_distance, prov));
    } else {
        out.skipped.push_back({"feature_floor_coherence", "coherence is 1"});
    }
    return out;
}

template <typename Scalar>
CertificateSet<Scalar> certify(const Dictionary<Scalar>& dict, Scalar jitter = Scalar(kDefaultJitter)) {
    detail::require(dict.size() >= 2, "pairwise measure undefined for fewer than two atoms");
    return certify(build_gram(dict), norm_bounds(dict.spec(), dict.atoms()), jitter);
}

}  // namespace kerndict

#endif  // KERNDICT_BOUNDS_HPP
