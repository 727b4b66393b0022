#include "entropy_report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace kerndict::reports {

namespace {

constexpr double kFloorTolerance = kCertificateTolerance;
constexpr double kCeilingTolerance = 1e-12;

BoundCheck<double> lower_check(std::string measure, double floor, double value, bool asserted = true,
                               std::string note = {}) {
    return {std::move(measure), floor, value, value >= floor - kFloorTolerance, asserted, std::move(note)};
}

EntropyContext<double> context_for(const Dictionary<double>& dict) {
    if (dict.spec().family == KernelFamily::gaussian) {
        return EntropyContext<double>::gaussian_window(dict.dim(), dict.spec().sigma);
    }
    return EntropyContext<double>::general();
}

Estimator renyi_estimator(double alpha) {
    if (alpha == 0) {
        return Estimator::hartley;
    }
    if (alpha == 1) {
        return Estimator::shannon;
    }
    if (std::isinf(alpha)) {
        return Estimator::min_entropy;
    }
    return Estimator::renyi;
}

}  // namespace

WindowSpec<double> default_window(const KernelSpec<double>& spec, Eigen::Index dim) {
    switch (spec.family) {
        case KernelFamily::gaussian:
            return WindowSpec<double>::make(WindowFamily::gaussian, spec.sigma, dim);
        case KernelFamily::radial_exponential:
            return WindowSpec<double>::make(WindowFamily::radial_exponential, spec.sigma, dim);
        case KernelFamily::inverse_multiquadratic:
            return WindowSpec<double>::make(WindowFamily::inverse_multiquadratic, spec.sigma, dim, spec.p);
        default:
            return WindowSpec<double>::gaussian(1.0, dim);
    }
}

EntropyReport<double> quadratic_report(const Dictionary<double>& dict, bool gaussian_identity, double jitter) {
    detail::require(dict.size() >= 2, "pairwise measure undefined for fewer than two atoms");
    const auto K = build_gram(dict);
    const auto diversity = diversity_report(K, jitter);
    const auto nb = norm_bounds(dict.spec(), dict.atoms());

    EntropyReport<double> out;
    EntropyContext<double> context = EntropyContext<double>::general();
    if (gaussian_identity) {
        detail::require(dict.spec().family == KernelFamily::gaussian,
                        "the gaussian entropy identity needs a gaussian kernel");
        out.estimator = Estimator::quadratic_gaussian;
        out.value = quadratic_entropy_gaussian(dict, dict.spec().sigma);
        context = EntropyContext<double>::gaussian_window(dict.dim(), dict.spec().sigma);
    } else {
        out.estimator = Estimator::quadratic_general;
        out.value = quadratic_entropy_general(K);
    }
    out.order = 2.0;
    for (const auto& floor : entropy_floors_input(diversity, nb, dict.size(), context)) {
        out.lower_bounds.push_back(lower_check(std::string(to_string(floor.measure)), floor.floor, out.value));
    }
    if (nb.provenance == Provenance::empirical) {
        out.warnings.emplace_back("norm bounds are empirical; floors hold on the observed data only");
    }
    return out;
}

EntropyReport<double> order_report(const Dictionary<double>& dict, const WindowSpec<double>& window,
                                   const OrderRequest& request, bool normalize, double jitter) {
    const auto p = parzen_input_at_atoms(dict, window);
    EntropyReport<double> out;
    out.order = request.order;
    if (request.tsallis) {
        out.estimator = Estimator::tsallis;
        out.value = tsallis_entropy(p, request.order, normalize);
    } else {
        out.estimator = renyi_estimator(request.order);
        out.value = renyi_entropy(p, request.order, normalize);
    }
    if (!normalize) {
        out.warnings.emplace_back("plug-in Parzen values are not normalized");
    }
    if (dict.size() < 2) {
        return out;
    }

    // Floors chained from the largest quadratic floor; informational only since the
    // plug-in estimate differs from the quadratic estimate those floors bound.
    const auto diversity = diversity_report(build_gram(dict), jitter);
    const auto nb = norm_bounds(dict.spec(), dict.atoms());
    double zeta = -std::numeric_limits<double>::infinity();
    for (const auto& floor : entropy_floors_input(diversity, nb, dict.size(), context_for(dict))) {
        zeta = std::max(zeta, floor.floor);
    }
    const auto chained = corollary_floors(zeta);
    const std::string note = "informational: chained from the largest quadratic-entropy floor";
    switch (out.estimator) {
        case Estimator::hartley:
            out.lower_bounds.push_back(lower_check("hartley", chained.hartley, out.value, false, note));
            break;
        case Estimator::shannon:
            out.lower_bounds.push_back(lower_check("shannon", chained.shannon, out.value, false, note));
            break;
        case Estimator::min_entropy:
            out.lower_bounds.push_back(lower_check("min_entropy", chained.min_entropy, out.value, false, note));
            break;
        case Estimator::tsallis:
            if (request.order == 2.0) {
                out.lower_bounds.push_back(lower_check("tsallis", 1.0 - std::exp(-zeta), out.value, false, note));
            }
            break;
        default:
            break;
    }
    return out;
}

EntropyReport<double> feature_report(const Dictionary<double>& dict, const WindowSpec<double>& window, double alpha,
                                     double jitter) {
    detail::require(dict.size() >= 2, "pairwise measure undefined for fewer than two atoms");
    const auto K = build_gram(dict);
    const auto diversity = diversity_report(K, jitter);
    const auto nb = norm_bounds(dict.spec(), dict.atoms());
    const auto p = parzen_feature_at_atoms(K, window);
    const double peak = p.maxCoeff();

    EntropyReport<double> out;
    out.space = Space::feature;
    out.order = alpha;
    out.estimator = renyi_estimator(alpha);
    out.value = renyi_entropy(p, alpha);

    const struct {
        FloorMeasure measure;
        double value;
    } sources[] = {
        {FloorMeasure::approximation, diversity.approximation_delta},
        {FloorMeasure::babel, diversity.babel_gamma},
        {FloorMeasure::coherence, diversity.coherence_gamma},
    };
    for (const auto& source : sources) {
        const std::string name(to_string(source.measure));
        double epsilon = 0.0;
        std::string degenerate;
        try {
            epsilon = feature_distance_floor(source.measure, source.value, nb.r2, nb.R2);
        } catch (const Error& e) {
            degenerate = e.what();
        }
        if (degenerate.empty() && !(epsilon > 0)) {
            degenerate = "distance floor is zero";
        }
        if (!degenerate.empty()) {
            out.warnings.push_back("degenerate floor (" + name + "): " + degenerate);
            out.lower_bounds.push_back({name, 0.0, out.value, true, false, "degenerate"});
            continue;
        }
        const double ceiling = window(epsilon);
        out.upper_bounds.push_back({name, ceiling, peak, peak < ceiling + kCeilingTolerance, true, {}});
        if (alpha == 1) {
            const auto floors = feature_entropy_floors(dict.size(), epsilon, window, 2.0);
            if (floors.monotone_regime) {
                out.lower_bounds.push_back(lower_check(name, floors.shannon, out.value));
            } else {
                out.lower_bounds.push_back(
                    lower_check(name, floors.shannon, out.value, false, "outside monotone regime"));
                out.warnings.push_back("shannon floor (" + name + ") outside monotone regime: w(eps) > 1/e");
            }
        } else if (alpha > 1 && std::isfinite(alpha)) {
            const auto floors = feature_entropy_floors(dict.size(), epsilon, window, alpha);
            out.lower_bounds.push_back(lower_check(name, floors.renyi, out.value));
        }
    }
    if (nb.provenance == Provenance::empirical) {
        out.warnings.emplace_back("norm bounds are empirical; floors hold on the observed data only");
    }
    return out;
}

}  // namespace kerndict::reports
