#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "csv.hpp"
#include "entropy_report.hpp"
#include "json_io.hpp"
#include "parse.hpp"
#include "verify.hpp"

namespace kerndict::cli {

namespace {

using io::json;

constexpr const char* kDefaultKernel = "gaussian:sigma=1";
constexpr double kPsdTolerance = 1e-8;

KernelSpec<double> kernel_of(const RunConfig& config) {
    return io::parse_kernel_spec(config.kernel.value_or(kDefaultKernel));
}

Dictionary<double> load_dictionary(const RunConfig& config) {
    detail::require(!config.input_path.empty(), "missing --input");
    return {io::read_csv(config.input_path).rows, kernel_of(config)};
}

json envelope(const char* command) {
    return {{"schema_version", io::kSchemaVersion}, {"command", command}};
}

std::string csv_bool(bool value) { return value ? "true" : "false"; }

std::string csv_quote(const std::string& text) {
    std::string out = "\"";
    for (char ch : text) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

void emit(const RunConfig& config, std::ostream& out, const std::string& body) {
    if (config.output.empty()) {
        out << body;
        return;
    }
    std::ofstream file(config.output);
    if (!file) {
        throw io::IoError("cannot write '" + config.output + "'");
    }
    file << body;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

double jitter_from_env() {
    const char* raw = std::getenv("KERNDICT_JITTER");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultJitter;
    }
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    detail::require(end != raw && *end == '\0' && std::isfinite(value) && value >= 0,
                    std::string("KERNDICT_JITTER must be a nonnegative number, got '") + raw + "'");
    return value;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream&) {
    std::optional<GramMatrix<double>> gram;
    NormBounds<double> nb;
    json doc = envelope("analyze");
    if (config.gram_path) {
        gram = GramMatrix<double>::from_matrix(io::read_csv(*config.gram_path).rows);
        detail::require(gram->min_eigenvalue() >= -kPsdTolerance, "Gram matrix is not positive semidefinite");
        const auto spec = config.kernel ? std::optional(kernel_of(config)) : std::nullopt;
        if (spec && (spec->unit_norm() || spec->family == KernelFamily::inverse_multiquadratic)) {
            nb = norm_bounds(*spec);
        } else {
            nb = {gram->diag().minCoeff(), gram->diag().maxCoeff(), Provenance::empirical};
        }
        doc["input"] = *config.gram_path;
        doc["kernel"] = spec ? json(io::format_kernel_spec(*spec)) : json(nullptr);
    } else {
        const auto dict = load_dictionary(config);
        detail::require(dict.size() >= 2, "pairwise measure undefined for fewer than two atoms");
        gram = build_gram(dict);
        nb = norm_bounds(dict.spec(), dict.atoms());
        if (config.export_gram) {
            io::write_csv(*config.export_gram, gram->matrix());
        }
        doc["input"] = config.input_path;
        doc["kernel"] = io::format_kernel_spec(dict.spec());
    }
    detail::require(gram->size() >= 2, "pairwise measure undefined for fewer than two atoms");
    const auto set = certify(*gram, nb, config.jitter);

    if (config.format == Format::csv) {
        std::ostringstream csv;
        csv << "record,name,direction,bound,measured,satisfied,provenance\n";
        const auto& r = set.report;
        const std::pair<const char*, double> fields[] = {
            {"cardinality", static_cast<double>(r.cardinality)}, {"distance_delta", r.distance_delta},
            {"approximation_delta", r.approximation_delta},       {"coherence_gamma", r.coherence_gamma},
            {"babel_gamma", r.babel_gamma},                       {"jitter_used", r.jitter_used},
            {"r2", nb.r2},                                         {"R2", nb.R2},
        };
        for (const auto& [name, value] : fields) {
            csv << fmt::format("measure,{},,,{},,\n", name, value);
        }
        for (const auto& c : set.certificates) {
            csv << fmt::format("certificate,{},{},{},{},{},{}\n", c.name, to_string(c.direction), c.bound_value,
                               c.measured_value, csv_bool(c.satisfied), to_string(c.provenance));
        }
        for (const auto& s : set.skipped) {
            csv << fmt::format("skipped,{},,,,,{}\n", s.name, csv_quote(s.reason));
        }
        emit(config, out, csv.str());
    } else {
        doc["norm_bounds"] = io::to_json(nb);
        doc["report"] = io::to_json(set.report);
        doc["min_feature_distance"] = set.min_feature_distance;
        doc["certificates"] = io::certificates_json(set);
        json skipped = json::array();
        for (const auto& s : set.skipped) {
            skipped.push_back({{"name", s.name}, {"reason", s.reason}});
        }
        doc["skipped"] = std::move(skipped);
        doc["all_satisfied"] = set.all_satisfied();
        emit(config, out, dump(doc));
    }
    return set.all_satisfied() ? kSuccess : kViolation;
}

int cmd_entropy(const RunConfig& config, std::ostream& out, std::ostream&) {
    const auto dict = load_dictionary(config);
    detail::require(!(config.alpha && config.q), "--alpha and --q are mutually exclusive");
    const auto window = config.window ? io::parse_window_spec(*config.window, dict.dim())
                                      : reports::default_window(dict.spec(), dict.dim());

    EntropyReport<double> report;
    if (config.space == Space::feature) {
        detail::require(!config.q, "the feature-space estimate supports Renyi orders only");
        report = reports::feature_report(dict, window, config.alpha.value_or(2.0), config.jitter);
    } else if (config.alpha || config.q) {
        const reports::OrderRequest request{config.q.has_value(), config.q ? *config.q : *config.alpha};
        report = reports::order_report(dict, window, request, config.normalize, config.jitter);
    } else {
        bool gaussian_identity = dict.spec().family == KernelFamily::gaussian;
        if (config.estimator == "quadratic-gaussian") {
            gaussian_identity = true;
        } else if (config.estimator == "quadratic-general") {
            gaussian_identity = false;
        } else {
            detail::require(config.estimator == "auto", "unknown estimator '" + config.estimator + "'");
        }
        report = reports::quadratic_report(dict, gaussian_identity, config.jitter);
    }

    if (config.format == Format::csv) {
        std::ostringstream csv;
        csv << "record,measure,bound,measured,met,asserted,note\n";
        csv << fmt::format("estimate,{},,{},,,\n", to_string(report.estimator), report.value);
        for (const auto& check : report.lower_bounds) {
            csv << fmt::format("floor,{},{},{},{},{},{}\n", check.measure, check.bound, check.measured,
                               csv_bool(check.met), csv_bool(check.asserted), csv_quote(check.note));
        }
        for (const auto& check : report.upper_bounds) {
            csv << fmt::format("ceiling,{},{},{},{},{},{}\n", check.measure, check.bound, check.measured,
                               csv_bool(check.met), csv_bool(check.asserted), csv_quote(check.note));
        }
        emit(config, out, csv.str());
    } else {
        json doc = envelope("entropy");
        doc["input"] = config.input_path;
        doc["kernel"] = io::format_kernel_spec(dict.spec());
        doc["window"] = {{"family", to_string(window.family)},
                         {"sigma", window.sigma},
                         {"dim", window.dim},
                         {"normalization", window.normalization}};
        doc["report"] = io::to_json(report);
        emit(config, out, dump(doc));
    }
    return report.all_bounds_met() ? kSuccess : kViolation;
}

int cmd_sparsify(const RunConfig& config, std::ostream& out, std::ostream&) {
    detail::require(config.criterion.has_value(), "sparsify needs --criterion");
    detail::require(config.threshold.has_value(), "sparsify needs --threshold");
    detail::require(!config.input_path.empty(), "missing --input");
    const Criterion<double> criterion{io::parse_criterion_kind(*config.criterion), *config.threshold};
    const auto stream = io::read_csv(config.input_path).rows;
    const auto trace = run_stream(criterion, stream, kernel_of(config), config.jitter);

    if (config.format == Format::csv) {
        std::ostringstream csv;
        csv << "index,score,admitted\n";
        std::size_t next_admitted = 0;
        for (std::size_t t = 0; t < trace.per_step_scores.size(); ++t) {
            const bool admitted = next_admitted < trace.admitted.size() &&
                                  trace.admitted[next_admitted] == static_cast<Eigen::Index>(t);
            next_admitted += admitted ? 1 : 0;
            const double score = trace.per_step_scores[t];
            csv << t << ',' << (std::isfinite(score) ? fmt::format("{}", score) : std::string("inf")) << ','
                << csv_bool(admitted) << '\n';
        }
        emit(config, out, csv.str());
    } else {
        json doc = envelope("sparsify");
        doc["input"] = config.input_path;
        doc["kernel"] = io::format_kernel_spec(kernel_of(config));
        doc["trace"] = io::to_json(trace);
        emit(config, out, dump(doc));
    }
    return kSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
    verify::VerifyConfig vc;
    vc.trials = config.trials;
    vc.seed = config.seed;
    vc.jitter = config.jitter;
    vc.threads = config.threads;
    vc.window = config.window;
    if (config.kernel) {
        vc.kernel = kernel_of(config);
    }
    if (!config.input_path.empty()) {
        vc.fixed_atoms = io::read_csv(config.input_path).rows;
    }
    const auto summary = verify::run_verify(vc);

    if (config.format == Format::csv) {
        std::ostringstream csv;
        csv << "check,evaluated,violations,skipped,excluded,worst_excess\n";
        for (const auto& [name, t] : summary.checks) {
            csv << fmt::format("{},{},{},{},{},{}\n", name, t.evaluated, t.violations, t.skipped, t.excluded,
                               t.worst_excess);
        }
        emit(config, out, csv.str());
    } else {
        json doc = envelope("verify");
        doc.update(verify::to_json(summary));
        emit(config, out, dump(doc));
    }
    return summary.total_violations() == 0 ? kSuccess : kViolation;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::analyze: return cmd_analyze(config, out, err);
            case Command::entropy: return cmd_entropy(config, out, err);
            case Command::sparsify: return cmd_sparsify(config, out, err);
            case Command::verify: return cmd_verify(config, out, err);
        }
    } catch (const std::exception& e) {
        err << "kerndict: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace kerndict::cli
