#ifndef KERNDICT_COMMANDS_HPP
#define KERNDICT_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "kerndict/kerndict.hpp"

namespace kerndict::cli {

enum class Command { analyze, entropy, sparsify, verify };
enum class Format { json, csv };

/// Stable process exit codes.
enum ExitCode : int { kSuccess = 0, kViolation = 1, kUsageError = 2 };

struct RunConfig {
    Command command = Command::analyze;
    std::string input_path;
    /// analyze only: read a precomputed Gram matrix instead of points.
    std::optional<std::string> gram_path;
    /// analyze only: also write the Gram matrix of the input points.
    std::optional<std::string> export_gram;
    std::optional<std::string> kernel;
    std::optional<std::string> criterion;
    std::optional<double> threshold;
    std::optional<double> alpha;
    std::optional<double> q;
    Space space = Space::input;
    /// entropy only: "auto", "quadratic-gaussian" or "quadratic-general".
    std::string estimator = "auto";
    std::optional<std::string> window;
    bool normalize = false;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::string output;
    Format format = Format::json;
    double jitter = kDefaultJitter;
    unsigned threads = 0;
};

/// KERNDICT_JITTER when set and valid, otherwise the default solve jitter.
double jitter_from_env();

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_entropy(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sparsify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command; library and input errors map to exit code 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace kerndict::cli

#endif  // KERNDICT_COMMANDS_HPP
