#ifndef KERNDICT_PARSE_HPP
#define KERNDICT_PARSE_HPP

#include <string>
#include <string_view>

#include "kerndict/entropy.hpp"
#include "kerndict/kernels.hpp"
#include "kerndict/sparsify.hpp"

namespace kerndict::io {

/**
 * Parses "family[:key=value,...]", e.g. "gaussian:sigma=1.0" or
 * "polynomial:p=2,c=1". Case-insensitive. Keys are p, c and sigma; a key
 * the family does not use is an error.
 */
KernelSpec<double> parse_kernel_spec(std::string_view text);

std::string format_kernel_spec(const KernelSpec<double>& spec);

/// Same grammar for a Parzen window: "gaussian|radial-exponential|inverse-multiquadratic[:sigma=..,p=..]".
WindowSpec<double> parse_window_spec(std::string_view text, Eigen::Index dim);

CriterionKind parse_criterion_kind(std::string_view text);

}  // namespace kerndict::io

#endif  // KERNDICT_PARSE_HPP
