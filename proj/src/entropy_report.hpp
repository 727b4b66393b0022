#ifndef KERNDICT_ENTROPY_REPORT_HPP
#define KERNDICT_ENTROPY_REPORT_HPP

#include "kerndict/kerndict.hpp"

namespace kerndict::reports {

/// Window used when none is given: the kernel's own radial profile and
/// bandwidth, or a unit gaussian window for projective kernels.
WindowSpec<double> default_window(const KernelSpec<double>& spec, Eigen::Index dim);

/// Quadratic entropy with every diversity floor asserted. With
/// `gaussian_identity` the closed-form gaussian estimate and its floors are
/// used, which requires a gaussian kernel; otherwise the kernel-agnostic ones.
EntropyReport<double> quadratic_report(const Dictionary<double>& dict, bool gaussian_identity,
                                       double jitter = kDefaultJitter);

struct OrderRequest {
    bool tsallis = false;
    /// Renyi alpha (may be +inf) or Tsallis q.
    double order = 2.0;
};

/// Renyi or Tsallis entropy of the input-space plug-in Parzen values.
/// Floors derived from the quadratic floors are reported without being asserted.
EntropyReport<double> order_report(const Dictionary<double>& dict, const WindowSpec<double>& window,
                                   const OrderRequest& request, bool normalize, double jitter = kDefaultJitter);

/// Renyi entropy (alpha = 1 Shannon) of the feature-space plug-in Parzen values,
/// with the Parzen ceiling w(eps) and the entropy floors for every nondegenerate distance floor eps.
///
/// NOTE: the estimate at an atom contains that atom's own term w(0) / n, so the
/// ceiling w(eps) fails whenever w(0) > n w(eps). It is checked as stated.
EntropyReport<double> feature_report(const Dictionary<double>& dict, const WindowSpec<double>& window, double alpha,
                                     double jitter = kDefaultJitter);

}  // namespace kerndict::reports

#endif  // KERNDICT_ENTROPY_REPORT_HPP
