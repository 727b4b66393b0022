#ifndef KERNDICT_VERIFY_HPP
#define KERNDICT_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "kerndict/kerndict.hpp"

namespace kerndict::verify {

struct VerifyConfig {
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    /// Random gaussian bandwidth per trial when absent.
    std::optional<KernelSpec<double>> kernel;
    /// Window spec string for the Parzen checks; the kernel's own profile when absent.
    std::optional<std::string> window;
    /// Check this dictionary once instead of random ones.
    std::optional<MatrixXd> fixed_atoms;
    double jitter = kDefaultJitter;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

enum class Outcome { pass, violation, skipped, excluded };

struct CheckOutcome {
    std::string name;
    Outcome outcome = Outcome::pass;
    /// Amount by which the inequality fails (violations only).
    double excess = 0.0;
};

struct CheckTally {
    std::size_t evaluated = 0;
    std::size_t violations = 0;
    std::size_t skipped = 0;
    std::size_t excluded = 0;
    double worst_excess = 0.0;
};

struct VerifySummary {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string kernel;
    std::map<std::string, CheckTally> checks;

    std::size_t total_violations() const;
};

/**
 * Every bound on one dictionary: the cross-measure certificates and
 * feature-distance floors, the quadratic entropy floors, Renyi order
 * monotonicity on the normalized plug-in, and the feature-space Parzen
 * ceilings and entropy floors. The Shannon feature floor is `excluded`
 * outside the monotone regime w(eps) <= 1/e.
 */
std::vector<CheckOutcome> check_dictionary(const Dictionary<double>& dict, const WindowSpec<double>& window,
                                           double jitter = kDefaultJitter);

/// Trial t uses seed + t, so the summary does not depend on the thread count.
VerifySummary run_verify(const VerifyConfig& config);

nlohmann::json to_json(const VerifySummary& summary);

}  // namespace kerndict::verify

#endif  // KERNDICT_VERIFY_HPP
