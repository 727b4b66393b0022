#ifndef KERNDICT_SPARSIFY_HPP
#define KERNDICT_SPARSIFY_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kerndict/diversity.hpp"
#include "kerndict/error.hpp"
#include "kerndict/gram.hpp"
#include "kerndict/kernels.hpp"

namespace kerndict {

enum class CriterionKind { novelty_distance, approximation_ald, coherence, babel };

constexpr std::string_view to_string(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::novelty_distance: return "novelty_distance";
        case CriterionKind::approximation_ald: return "approximation_ald";
        case CriterionKind::coherence: return "coherence";
        case CriterionKind::babel: return "babel";
    }
    return "unknown";
}

/**
 * Online admission rule. The threshold is a minimum admissible score for the
 * distance and approximation kinds, and a maximum for coherence and Babel.
 */
template <typename Scalar = double>
struct Criterion {
    CriterionKind kind = CriterionKind::coherence;
    Scalar threshold = Scalar(0.5);

    void validate() const {
        detail::require(std::isfinite(threshold), "criterion threshold must be finite");
        switch (kind) {
            case CriterionKind::novelty_distance:
            case CriterionKind::approximation_ald:
                detail::require(threshold > 0, "distance/approximation threshold must be positive");
                break;
            case CriterionKind::coherence:
                detail::require(threshold >= 0 && threshold < 1, "coherence threshold must lie in [0, 1)");
                break;
            case CriterionKind::babel:
                detail::require(threshold >= 0, "Babel threshold must be nonnegative");
                break;
        }
    }

    /// True when larger scores mean more diversity.
    bool lower_bounded() const {
        return kind == CriterionKind::novelty_distance || kind == CriterionKind::approximation_ald;
    }
};

template <typename Scalar = double>
struct AdmitDecision {
    bool admitted = false;
    Scalar score = Scalar(0);
    /// Seed atom of an empty dictionary.
    bool first = false;
};

/**
 * Scores `candidate` against the current atoms (one per row, possibly none)
 * and decides admission. An empty dictionary admits anything; the recorded
 * score is then +inf for the distance kinds and 0 for the correlation kinds.
 */
template <typename Scalar, typename DerivedA, typename DerivedX>
AdmitDecision<Scalar> admit(const Criterion<Scalar>& criterion, const KernelSpec<Scalar>& spec,
                            const Eigen::MatrixBase<DerivedA>& atoms, const Eigen::MatrixBase<DerivedX>& candidate,
                            Scalar jitter = Scalar(kDefaultJitter)) {
    criterion.validate();
    spec.validate();
    detail::require(candidate.size() >= 1, "candidate must have dimension at least 1");
    detail::require(atoms.rows() == 0 || atoms.cols() == candidate.size(),
                    "dimension mismatch between candidate and dictionary");
    detail::require(candidate.allFinite(), "non-finite candidate coordinate");

    if (atoms.rows() == 0) {
        const Scalar seed = criterion.lower_bounded() ? std::numeric_limits<Scalar>::infinity() : Scalar(0);
        return {true, seed, true};
    }

    const Eigen::Index n = atoms.rows();
    const Scalar kxx = evaluate(spec, candidate, candidate);
    Vector<Scalar> kx(n);
    Vector<Scalar> diag(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        kx(j) = evaluate(spec, atoms.row(j), candidate);
        diag(j) = evaluate(spec, atoms.row(j), atoms.row(j));
    }

    Scalar score(0);
    switch (criterion.kind) {
        case CriterionKind::novelty_distance: {
            Scalar best = std::numeric_limits<Scalar>::infinity();
            for (Eigen::Index j = 0; j < n; ++j) {
                best = std::min(best, kxx - kx(j) * kx(j) / diag(j));
            }
            score = std::sqrt(std::max(best, Scalar(0)));
            break;
        }
        case CriterionKind::approximation_ald: {
            Matrix<Scalar> K(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                K(i, i) = diag(i);
                for (Eigen::Index j = i + 1; j < n; ++j) {
                    K(i, j) = evaluate(spec, atoms.row(i), atoms.row(j));
                    K(j, i) = K(i, j);
                }
            }
            const auto solution = regularized_solve(K, kx, jitter);
            score = std::sqrt(std::max(kxx - solution.projection_squared, Scalar(0)));
            break;
        }
        case CriterionKind::coherence:
            for (Eigen::Index j = 0; j < n; ++j) {
                score = std::max(score, std::abs(kx(j)) / std::sqrt(kxx * diag(j)));
            }
            break;
        case CriterionKind::babel:
            score = kx.cwiseAbs().sum();
            break;
    }
    const bool ok = criterion.lower_bounded() ? score >= criterion.threshold : score <= criterion.threshold;
    return {ok, score, false};
}

template <typename Scalar, typename DerivedX>
AdmitDecision<Scalar> admit(const Criterion<Scalar>& criterion, const Dictionary<Scalar>& current,
                            const Eigen::MatrixBase<DerivedX>& candidate, Scalar jitter = Scalar(kDefaultJitter)) {
    return admit(criterion, current.spec(), current.atoms(), candidate, jitter);
}

template <typename Scalar = double>
struct SparsifyTrace {
    Criterion<Scalar> criterion;
    std::vector<Eigen::Index> admitted;
    std::vector<std::pair<Eigen::Index, Scalar>> rejected;
    /// Score of every stream point, in stream order.
    std::vector<Scalar> per_step_scores;
    /// Admitted atoms in admission order.
    Matrix<Scalar> atoms;
    /// Absent when fewer than two atoms were admitted.
    std::optional<DiversityReport<Scalar>> final_report;
};

/// Greedy single pass over the stream rows; the first point seeds the dictionary.
template <typename Scalar, typename Derived>
SparsifyTrace<Scalar> run_stream(const Criterion<Scalar>& criterion, const Eigen::MatrixBase<Derived>& stream,
                                 const KernelSpec<Scalar>& spec, Scalar jitter = Scalar(kDefaultJitter)) {
    criterion.validate();
    detail::require(stream.rows() >= 1, "stream must contain at least one point");
    detail::require(stream.cols() >= 1, "stream points must have dimension at least 1");

    SparsifyTrace<Scalar> trace;
    trace.criterion = criterion;
    trace.per_step_scores.reserve(static_cast<std::size_t>(stream.rows()));
    Matrix<Scalar> atoms(stream.rows(), stream.cols());
    Eigen::Index count = 0;
    for (Eigen::Index t = 0; t < stream.rows(); ++t) {
        const auto decision = admit(criterion, spec, atoms.topRows(count), stream.row(t), jitter);
        trace.per_step_scores.push_back(decision.score);
        if (decision.admitted) {
            atoms.row(count++) = stream.row(t);
            trace.admitted.push_back(t);
        } else {
            trace.rejected.emplace_back(t, decision.score);
        }
    }
    trace.atoms = atoms.topRows(count);
    if (count >= 2) {
        trace.final_report = diversity_report(Dictionary<Scalar>(trace.atoms, spec), jitter);
    }
    return trace;
}

}  // namespace kerndict

#endif  // KERNDICT_SPARSIFY_HPP
