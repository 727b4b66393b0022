#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "entropy_report.hpp"
#include "parse.hpp"
#include "random_dictionary.hpp"

namespace kerndict::verify {

namespace {

constexpr double kOrderTolerance = 1e-12;

CheckOutcome compare(std::string name, bool ok, double excess) {
    return {std::move(name), ok ? Outcome::pass : Outcome::violation, ok ? 0.0 : excess};
}

void add_entropy_checks(std::vector<CheckOutcome>& out, const std::string& prefix,
                        const std::vector<BoundCheck<double>>& checks, bool lower) {
    for (const auto& check : checks) {
        const std::string name = prefix + check.measure;
        if (check.note == "degenerate") {
            out.push_back({name, Outcome::skipped});
        } else if (!check.asserted) {
            out.push_back({name, Outcome::excluded});
        } else {
            out.push_back(compare(name, check.met, lower ? check.bound - check.measured : check.measured - check.bound));
        }
    }
}

WindowSpec<double> window_for(const VerifyConfig& config, const Dictionary<double>& dict) {
    return config.window ? io::parse_window_spec(*config.window, dict.dim())
                         : reports::default_window(dict.spec(), dict.dim());
}

}  // namespace

std::size_t VerifySummary::total_violations() const {
    std::size_t total = 0;
    for (const auto& [name, tally] : checks) {
        total += tally.violations;
    }
    return total;
}

std::vector<CheckOutcome> check_dictionary(const Dictionary<double>& dict, const WindowSpec<double>& window,
                                           double jitter) {
    std::vector<CheckOutcome> out;

    const auto certs = certify(dict, jitter);
    for (const auto& cert : certs.certificates) {
        const double excess = cert.direction == Direction::upper ? cert.measured_value - cert.bound_value
                                                                 : cert.bound_value - cert.measured_value;
        out.push_back(compare(cert.name, cert.satisfied, excess));
    }
    for (const auto& skip : certs.skipped) {
        out.push_back({skip.name, Outcome::skipped});
    }

    if (dict.spec().family == KernelFamily::gaussian) {
        add_entropy_checks(out, "entropy_gaussian.", reports::quadratic_report(dict, true, jitter).lower_bounds, true);
    }
    add_entropy_checks(out, "entropy_general.", reports::quadratic_report(dict, false, jitter).lower_bounds, true);

    const auto p = parzen_input_at_atoms(dict, window);
    const double h0 = renyi_entropy(p, 0.0, true);
    const double h1 = renyi_entropy(p, 1.0, true);
    const double h2 = renyi_entropy(p, 2.0, true);
    const double hinf = renyi_entropy(p, std::numeric_limits<double>::infinity(), true);
    const double order_gap = std::max({h1 - h0, h2 - h1, hinf - h2});
    out.push_back(compare("renyi_order_monotone", order_gap <= kOrderTolerance, order_gap));
    out.push_back(compare("quadratic_le_twice_min", h2 <= 2 * hinf + kOrderTolerance, h2 - 2 * hinf));

    const auto quadratic = reports::feature_report(dict, window, 2.0, jitter);
    add_entropy_checks(out, "parzen_ceiling.", quadratic.upper_bounds, false);
    for (const auto& check : quadratic.lower_bounds) {
        if (check.note == "degenerate") {
            out.push_back({"parzen_ceiling." + check.measure, Outcome::skipped});
        }
    }
    add_entropy_checks(out, "feature_renyi2_floor.", quadratic.lower_bounds, true);
    add_entropy_checks(out, "feature_shannon_floor.", reports::feature_report(dict, window, 1.0, jitter).lower_bounds,
                       true);
    return out;
}

VerifySummary run_verify(const VerifyConfig& config) {
    detail::require(config.trials >= 1, "verify needs at least one trial");
    VerifySummary summary;
    summary.seed = config.seed;
    summary.kernel = config.kernel ? io::format_kernel_spec(*config.kernel) : "gaussian:sigma=random[0.3,3]";

    const std::size_t trials = config.fixed_atoms ? 1 : config.trials;
    summary.trials = trials;
    std::vector<std::vector<CheckOutcome>> results(trials);

    auto run_trial = [&](std::size_t t) {
        const auto dict = config.fixed_atoms
                              ? Dictionary<double>(*config.fixed_atoms,
                                                   config.kernel.value_or(KernelSpec<double>::gaussian(1.0)))
                              : random_dictionary(config.seed + t, config.kernel);
        results[t] = check_dictionary(dict, window_for(config, dict), config.jitter);
    };

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
    if (threads <= 1) {
        for (std::size_t t = 0; t < trials; ++t) {
            run_trial(t);
        }
    } else {
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t t = w; t < trials; t += threads) {
                            run_trial(t);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& error : errors) {
            if (error) {
                std::rethrow_exception(error);
            }
        }
    }

    for (const auto& trial : results) {
        for (const auto& check : trial) {
            auto& tally = summary.checks[check.name];
            switch (check.outcome) {
                case Outcome::pass:
                    ++tally.evaluated;
                    break;
                case Outcome::violation:
                    ++tally.evaluated;
                    ++tally.violations;
                    tally.worst_excess = std::max(tally.worst_excess, check.excess);
                    break;
                case Outcome::skipped:
                    ++tally.skipped;
                    break;
                case Outcome::excluded:
                    ++tally.excluded;
                    break;
            }
        }
    }
    return summary;
}

nlohmann::json to_json(const VerifySummary& summary) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, tally] : summary.checks) {
        checks[name] = {{"evaluated", tally.evaluated},
                        {"violations", tally.violations},
                        {"skipped", tally.skipped},
                        {"excluded", tally.excluded},
                        {"worst_excess", tally.worst_excess}};
    }
    return {{"trials", summary.trials},
            {"seed", summary.seed},
            {"kernel", summary.kernel},
            {"checks", std::move(checks)},
            {"total_violations", summary.total_violations()}};
}

}  // namespace kerndict::verify
