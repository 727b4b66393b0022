#include "parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <fmt/format.h>

namespace kerndict::io {

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
    out.erase(std::remove_if(out.begin(), out.end(), [](unsigned char ch) { return std::isspace(ch); }),
              out.end());
    return out;
}

struct SpecText {
    std::string family;
    std::map<std::string, double> params;
};

SpecText split_spec(std::string_view raw) {
    const std::string text = lower(raw);
    SpecText out;
    const auto colon = text.find(':');
    out.family = text.substr(0, colon);
    if (out.family.empty()) {
        throw Error("empty family in '" + std::string(raw) + "'");
    }
    if (colon == std::string::npos) {
        return out;
    }
    std::string_view rest = std::string_view(text).substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw Error("expected key=value in '" + std::string(raw) + "'");
        }
        const auto key = std::string(item.substr(0, eq));
        const auto value_text = item.substr(eq + 1);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
        if (value_text.empty() || ec != std::errc() || ptr != value_text.data() + value_text.size()) {
            throw Error("bad value for '" + key + "' in '" + std::string(raw) + "'");
        }
        if (!out.params.emplace(key, value).second) {
            throw Error("duplicate key '" + key + "' in '" + std::string(raw) + "'");
        }
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return out;
}

void check_keys(const SpecText& spec, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : spec.params) {
        if (!allowed.contains(key)) {
            throw Error("unknown key '" + key + "' for family '" + spec.family + "'");
        }
    }
}

double get(const SpecText& spec, const std::string& key, double fallback) {
    const auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

KernelSpec<double> parse_kernel_spec(std::string_view text) {
    const auto spec = split_spec(text);
    KernelSpec<double> out;
    const auto& f = spec.family;
    if (f == "linear") {
        check_keys(spec, {});
        out = KernelSpec<double>::linear();
    } else if (f == "polynomial" || f == "poly") {
        check_keys(spec, {"p", "c"});
        out = KernelSpec<double>::polynomial(get(spec, "p", 2.0), get(spec, "c", 1.0));
    } else if (f == "projective-exponential" || f == "projective_exponential" || f == "exponential") {
        check_keys(spec, {});
        out = KernelSpec<double>::projective_exponential();
    } else if (f == "inverse-multiquadratic" || f == "inverse_multiquadratic" || f == "imq") {
        check_keys(spec, {"sigma", "p"});
        out = KernelSpec<double>::inverse_multiquadratic(get(spec, "sigma", 1.0), get(spec, "p", 1.0));
    } else if (f == "radial-exponential" || f == "radial_exponential" || f == "laplacian") {
        check_keys(spec, {"sigma"});
        out = KernelSpec<double>::radial_exponential(get(spec, "sigma", 1.0));
    } else if (f == "gaussian" || f == "rbf") {
        check_keys(spec, {"sigma"});
        out = KernelSpec<double>::gaussian(get(spec, "sigma", 1.0));
    } else {
        throw Error("unknown kernel family '" + f + "'");
    }
    out.validate();
    return out;
}

std::string format_kernel_spec(const KernelSpec<double>& spec) {
    const auto family = std::string(to_string(spec.family));
    switch (spec.family) {
        case KernelFamily::linear:
        case KernelFamily::projective_exponential:
            return family;
        case KernelFamily::polynomial:
            return fmt::format("{}:p={},c={}", family, spec.p, spec.c);
        case KernelFamily::inverse_multiquadratic:
            return fmt::format("{}:sigma={},p={}", family, spec.sigma, spec.p);
        case KernelFamily::radial_exponential:
        case KernelFamily::gaussian:
            return fmt::format("{}:sigma={}", family, spec.sigma);
    }
    return family;
}

WindowSpec<double> parse_window_spec(std::string_view text, Eigen::Index dim) {
    const auto spec = split_spec(text);
    const auto& f = spec.family;
    if (f == "gaussian") {
        check_keys(spec, {"sigma"});
        return WindowSpec<double>::make(WindowFamily::gaussian, get(spec, "sigma", 1.0), dim);
    }
    if (f == "radial-exponential" || f == "radial_exponential") {
        check_keys(spec, {"sigma"});
        return WindowSpec<double>::make(WindowFamily::radial_exponential, get(spec, "sigma", 1.0), dim);
    }
    if (f == "inverse-multiquadratic" || f == "inverse_multiquadratic" || f == "imq") {
        check_keys(spec, {"sigma", "p"});
        return WindowSpec<double>::make(WindowFamily::inverse_multiquadratic, get(spec, "sigma", 1.0), dim,
                                        get(spec, "p", 1.0));
    }
    throw Error("unknown window family '" + f + "'");
}

CriterionKind parse_criterion_kind(std::string_view text) {
    const auto kind = lower(text);
    if (kind == "novelty_distance" || kind == "novelty" || kind == "distance") {
        return CriterionKind::novelty_distance;
    }
    if (kind == "approximation_ald" || kind == "ald" || kind == "approximation") {
        return CriterionKind::approximation_ald;
    }
    if (kind == "coherence") {
        return CriterionKind::coherence;
    }
    if (kind == "babel") {
        return CriterionKind::babel;
    }
    throw Error("unknown criterion '" + std::string(text) + "'");
}

}  // namespace kerndict::io
