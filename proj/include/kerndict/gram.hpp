#ifndef KERNDICT_GRAM_HPP
#define KERNDICT_GRAM_HPP

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "kerndict/error.hpp"
#include "kerndict/kernels.hpp"

namespace kerndict {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXd = Matrix<double>;
using VectorXd = Vector<double>;

/// Default regularization used when a leave-one-out system cannot be factorized.
inline constexpr double kDefaultJitter = 1e-10;

/// Ordered atoms x_1..x_n (one per row) and the kernel mapping them to feature space.
template <typename Scalar = double>
class Dictionary {
public:
    Dictionary(Matrix<Scalar> atoms, KernelSpec<Scalar> spec)
        : atoms_(std::move(atoms)), spec_(spec) {
        spec_.validate();
        detail::require(atoms_.rows() >= 1, "a dictionary needs at least one atom");
        detail::require(atoms_.cols() >= 1, "atoms must have dimension at least 1");
        detail::require(atoms_.allFinite(), "non-finite atom coordinate");
    }

    Eigen::Index size() const { return atoms_.rows(); }
    Eigen::Index dim() const { return atoms_.cols(); }
    const Matrix<Scalar>& atoms() const { return atoms_; }
    auto atom(Eigen::Index i) const { return atoms_.row(i); }
    const KernelSpec<Scalar>& spec() const { return spec_; }

private:
    Matrix<Scalar> atoms_;
    KernelSpec<Scalar> spec_;
};

/// Symmetric matrix of kernel evaluations with a cached diagonal. Immutable.
template <typename Scalar = double>
class GramMatrix {
public:
    /// Wraps an existing matrix (e.g. imported from CSV). The upper triangle is
    /// mirrored onto the lower one after checking approximate symmetry.
    static GramMatrix from_matrix(Matrix<Scalar> entries, Scalar symmetry_tolerance = Scalar(1e-12)) {
        detail::require(entries.rows() >= 1 && entries.rows() == entries.cols(),
                        "Gram matrix must be square and nonempty");
        detail::require(entries.allFinite(), "non-finite Gram entry");
        const Scalar scale = std::max(Scalar(1), entries.cwiseAbs().maxCoeff());
        for (Eigen::Index i = 0; i < entries.rows(); ++i) {
            for (Eigen::Index j = i + 1; j < entries.cols(); ++j) {
                detail::require(std::abs(entries(i, j) - entries(j, i)) <= symmetry_tolerance * scale,
                                "Gram matrix is not symmetric");
                entries(j, i) = entries(i, j);
            }
        }
        return GramMatrix(std::move(entries));
    }

    Eigen::Index size() const { return entries_.rows(); }
    const Matrix<Scalar>& matrix() const { return entries_; }
    const Vector<Scalar>& diag() const { return diag_; }
    Scalar operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

    /// Squared feature-space distance |k(x_i,.) - k(x_j,.)|^2 by the kernel trick.
    Scalar feature_distance_squared(Eigen::Index i, Eigen::Index j) const {
        return diag_(i) - Scalar(2) * entries_(i, j) + diag_(j);
    }

    Scalar min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(entries_, Eigen::EigenvaluesOnly);
        return solver.eigenvalues().minCoeff();
    }

private:
    template <typename S>
    friend GramMatrix<S> build_gram(const Dictionary<S>&);

    explicit GramMatrix(Matrix<Scalar> entries)
        : entries_(std::move(entries)), diag_(entries_.diagonal()) {
        detail::require((diag_.array() > 0).all(), "Gram diagonal must be positive");
    }

    Matrix<Scalar> entries_;
    Vector<Scalar> diag_;
};

/// K[i][j] = kappa(x_i, x_j), evaluated once per unordered pair and mirrored.
template <typename Scalar>
GramMatrix<Scalar> build_gram(const Dictionary<Scalar>& dict) {
    const Eigen::Index n = dict.size();
    Matrix<Scalar> K(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            K(i, j) = evaluate(dict.spec(), dict.atom(i), dict.atom(j));
            K(j, i) = K(i, j);
        }
    }
    return GramMatrix<Scalar>(std::move(K));
}

/// Component j is kappa(x_j, x).
template <typename Scalar, typename Derived>
Vector<Scalar> kernel_vector(const Dictionary<Scalar>& dict, const Eigen::MatrixBase<Derived>& x) {
    detail::require(x.size() == dict.dim(), "dimension mismatch between point and dictionary");
    Vector<Scalar> k(dict.size());
    for (Eigen::Index j = 0; j < dict.size(); ++j) {
        k(j) = evaluate(dict.spec(), dict.atom(j), x);
    }
    return k;
}

enum class SolveMethod { cholesky, regularized_cholesky, least_squares };

template <typename Scalar = double>
struct LooSolution {
    Vector<Scalar> coefficients;
    /// Jitter actually added to the diagonal (0 when the plain factorization succeeded).
    Scalar jitter_applied = Scalar(0);
    SolveMethod method = SolveMethod::cholesky;
    /// b^T xi, computed as |L^-1 b|^2 on the Cholesky paths.
    Scalar projection_squared = Scalar(0);
};

namespace detail {

inline std::vector<Eigen::Index> all_but(Eigen::Index n, Eigen::Index skip) {
    std::vector<Eigen::Index> keep;
    keep.reserve(static_cast<std::size_t>(n - 1));
    for (Eigen::Index k = 0; k < n; ++k) {
        if (k != skip) {
            keep.push_back(k);
        }
    }
    return keep;
}

template <typename Scalar>
bool usable(const Eigen::LLT<Matrix<Scalar>>& llt) {
    return llt.info() == Eigen::Success && llt.rcond() > std::numeric_limits<Scalar>::epsilon();
}

}  // namespace detail

/**
 * Solves the symmetric system A xi = b without forming an inverse.
 *
 * A plain Cholesky factorization is tried first. If it fails or is
 * numerically singular, `jitter` is added to the diagonal and the
 * factorization retried; as a last resort a rank-revealing least-squares
 * (minimum-norm) solution of the regularized system is returned.
 */
template <typename Scalar, typename DerivedA, typename DerivedB>
LooSolution<Scalar> regularized_solve(const Eigen::MatrixBase<DerivedA>& A,
                                      const Eigen::MatrixBase<DerivedB>& b, Scalar jitter) {
    detail::require(jitter >= 0 && std::isfinite(jitter), "jitter must be nonnegative");
    LooSolution<Scalar> out;
    Eigen::LLT<Matrix<Scalar>> llt(A);
    if (detail::usable(llt)) {
        out.coefficients = llt.solve(b);
        out.projection_squared = llt.matrixL().solve(b).squaredNorm();
        return out;
    }
    Matrix<Scalar> regularized = A;
    if (jitter > 0) {
        regularized.diagonal().array() += jitter;
        out.jitter_applied = jitter;
        llt.compute(regularized);
        if (detail::usable(llt)) {
            out.coefficients = llt.solve(b);
            out.projection_squared = llt.matrixL().solve(b).squaredNorm();
            out.method = SolveMethod::regularized_cholesky;
            return out;
        }
    }
    out.coefficients = regularized.completeOrthogonalDecomposition().solve(b);
    out.projection_squared = b.dot(out.coefficients);
    out.method = SolveMethod::least_squares;
    return out;
}

/// Coefficients projecting atom i onto the span of the others:
/// (K_{\i} + jitter I) xi = kappa_{\i}(x_i), jitter applied only on factorization failure.
template <typename Scalar>
LooSolution<Scalar> loo_solve(const GramMatrix<Scalar>& K, Eigen::Index i,
                              Scalar jitter = Scalar(kDefaultJitter)) {
    const Eigen::Index n = K.size();
    detail::require(n >= 2, "leave-one-out solve needs at least two atoms");
    detail::require(i >= 0 && i < n, "leave-one-out index out of range");
    const auto keep = detail::all_but(n, i);
    const auto& entries = K.matrix();
    return regularized_solve(entries(keep, keep), entries(keep, i), jitter);
}

/// kappa(x_i,x_i) - kappa_{\i}(x_i)^T xi, the squared projection residual (unclamped).
template <typename Scalar>
Scalar loo_residual_squared(const GramMatrix<Scalar>& K, Eigen::Index i,
                            const LooSolution<Scalar>& solution) {
    return K(i, i) - solution.projection_squared;
}

}  // namespace kerndict

#endif  // KERNDICT_GRAM_HPP
