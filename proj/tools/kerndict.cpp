#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace kerndict::cli;
    CLI::App app{"Diversity measures, bound certificates and entropy floors for kernel dictionaries"};
    app.require_subcommand(1);

    RunConfig config;
    std::string kernel;
    std::string criterion;
    std::string window;
    std::string gram;
    std::string export_gram;
    double threshold = 0;
    double alpha = 0;
    double q = 0;

    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--kernel", kernel, "kernel spec, e.g. gaussian:sigma=0.5 or poly:p=3,c=1");
        sub->add_option("--format", config.format, "output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--output", config.output, "write to FILE instead of stdout");
    };

    auto* analyze = app.add_subcommand("analyze", "measure a dictionary and check every bound");
    analyze->add_option("--input", config.input_path, "CSV of atoms, one per row");
    analyze->add_option("--gram", gram, "CSV Gram matrix to analyze instead of points");
    analyze->add_option("--export-gram", export_gram, "write the Gram matrix of --input to FILE");
    add_common(analyze);

    auto* entropy = app.add_subcommand("entropy", "entropy estimate with diversity-based floors");
    entropy->add_option("--input", config.input_path, "CSV of atoms, one per row")->required();
    auto* alpha_opt = entropy->add_option("--alpha", alpha, "Renyi order");
    auto* q_opt = entropy->add_option("--q", q, "Tsallis order");
    alpha_opt->excludes(q_opt);
    std::string space = "input";
    entropy->add_option("--space", space, "input or feature")
        ->check(CLI::IsMember({"input", "feature"}, CLI::ignore_case));
    entropy->add_option("--estimator", config.estimator, "auto, quadratic-gaussian or quadratic-general");
    entropy->add_option("--window", window, "Parzen window spec, e.g. gaussian:sigma=1");
    entropy->add_flag("--normalize", config.normalize, "normalize the plug-in probabilities");
    add_common(entropy);

    auto* sparsify = app.add_subcommand("sparsify", "greedy online sparsification of a stream");
    sparsify->add_option("--input", config.input_path, "CSV stream, one point per row")->required();
    sparsify->add_option("--criterion", criterion, "novelty, ald, coherence or babel")->required();
    sparsify->add_option("--threshold", threshold, "admission threshold")->required();
    add_common(sparsify);

    auto* verify = app.add_subcommand("verify", "check every bound on random dictionaries");
    verify->add_option("--input", config.input_path, "check this dictionary instead of random ones");
    verify->add_option("--trials", config.trials, "number of random dictionaries")->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "base seed; trial t uses seed + t");
    verify->add_option("--window", window, "Parzen window spec");
    verify->add_option("--threads", config.threads, "worker threads (0 = hardware)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        config.jitter = jitter_from_env();
    } catch (const std::exception& e) {
        std::cerr << "kerndict: " << e.what() << '\n';
        return kUsageError;
    }
    if (analyze->parsed()) {
        config.command = Command::analyze;
    } else if (entropy->parsed()) {
        config.command = Command::entropy;
    } else if (sparsify->parsed()) {
        config.command = Command::sparsify;
    } else {
        config.command = Command::verify;
    }
    if (!kernel.empty()) config.kernel = kernel;
    if (!criterion.empty()) config.criterion = criterion;
    if (!window.empty()) config.window = window;
    if (!gram.empty()) config.gram_path = gram;
    if (!export_gram.empty()) config.export_gram = export_gram;
    if (sparsify->parsed()) config.threshold = threshold;
    if (CLI::detail::to_lower(space) == "feature") config.space = kerndict::Space::feature;
    if (*alpha_opt) config.alpha = alpha;
    if (*q_opt) config.q = q;

    return run(config, std::cout, std::cerr);
}
