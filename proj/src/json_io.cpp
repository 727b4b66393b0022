#include "json_io.hpp"

#include <cmath>
#include <string>

namespace kerndict::io {

namespace {

json number(double value) {
    // JSON has no infinity; the seed score of a sparsification run is +inf.
    return std::isfinite(value) ? json(value) : json(nullptr);
}

json to_json(const BoundCheck<double>& check, const char* bound_key) {
    json out = {{"measure", check.measure}, {bound_key, check.bound}, {"measured", check.measured},
                {"met", check.met},         {"asserted", check.asserted}};
    if (!check.note.empty()) {
        out["note"] = check.note;
    }
    return out;
}

}  // namespace

json to_json(const DiversityReport<double>& report) {
    return {{"cardinality", report.cardinality},
            {"distance_delta", report.distance_delta},
            {"approximation_delta", report.approximation_delta},
            {"coherence_gamma", report.coherence_gamma},
            {"babel_gamma", report.babel_gamma},
            {"jitter_used", report.jitter_used}};
}

json to_json(const NormBounds<double>& bounds) {
    return {{"r2", bounds.r2}, {"R2", bounds.R2}, {"provenance", to_string(bounds.provenance)}};
}

json to_json(const BoundCertificate<double>& certificate) {
    return {{"name", certificate.name},
            {"direction", to_string(certificate.direction)},
            {"bound", certificate.bound_value},
            {"measured", certificate.measured_value},
            {"satisfied", certificate.satisfied},
            {"provenance", to_string(certificate.provenance)}};
}

json certificates_json(const CertificateSet<double>& set) {
    json out = json::array();
    for (const auto& certificate : set.certificates) {
        out.push_back(to_json(certificate));
    }
    return out;
}

json to_json(const EntropyReport<double>& report) {
    json out = {{"estimator", to_string(report.estimator)},
                {"space", to_string(report.space)},
                {"value", report.value}};
    if (report.order) {
        out[report.estimator == Estimator::tsallis ? "q" : "alpha"] = number(*report.order);
    }
    json lower = json::array();
    bool degenerate = false;
    for (const auto& check : report.lower_bounds) {
        lower.push_back(to_json(check, "floor"));
        degenerate = degenerate || check.note == "degenerate";
    }
    out["lower_bounds"] = std::move(lower);
    if (report.space == Space::feature) {
        json upper = json::array();
        for (const auto& check : report.upper_bounds) {
            upper.push_back(to_json(check, "ceiling"));
        }
        out["parzen_ceilings"] = std::move(upper);
        out["degenerate"] = degenerate;
    }
    out["all_bounds_met"] = report.all_bounds_met();
    out["warnings"] = report.warnings;
    return out;
}

json to_json(const SparsifyTrace<double>& trace) {
    json rejected = json::array();
    for (const auto& [index, score] : trace.rejected) {
        rejected.push_back({{"index", index}, {"score", number(score)}});
    }
    json scores = json::array();
    for (double score : trace.per_step_scores) {
        scores.push_back(number(score));
    }
    return {{"criterion", to_string(trace.criterion.kind)},
            {"threshold", trace.criterion.threshold},
            {"admitted", trace.admitted},
            {"admitted_count", trace.admitted.size()},
            {"rejected", std::move(rejected)},
            {"per_step_scores", std::move(scores)},
            {"final_report", trace.final_report ? to_json(*trace.final_report) : json(nullptr)}};
}

}  // namespace kerndict::io
