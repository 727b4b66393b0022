#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace kerndict;
using kt::vec;
using K = KernelSpec<double>;

TEST_CASE("evaluate: hand-computed values") {
    CHECK(evaluate(K::gaussian(1), vec({0}), vec({0})) == 1.0);
    CHECK(evaluate(K::gaussian(1), vec({0}), vec({1})) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
    CHECK(evaluate(K::linear(), vec({1, 0}), vec({0, 1})) == 0.0);
    CHECK(evaluate(K::polynomial(2, 1), vec({1}), vec({1})) == 4.0);
    CHECK(evaluate(K::projective_exponential(), vec({1, 2}), vec({0.5, -1})) ==
          doctest::Approx(std::exp(-1.5)));
    CHECK(evaluate(K::inverse_multiquadratic(2, 1), vec({0, 0}), vec({1, 1})) == doctest::Approx(0.25));
    CHECK(evaluate(K::radial_exponential(2), vec({0, 0}), vec({3, 4})) == doctest::Approx(std::exp(-2.5)));
    CHECK(evaluate(K::gaussian(2), vec({1}), vec({3})) == doctest::Approx(std::exp(-0.5)));
}

TEST_CASE("evaluate: row and column vectors mix") {
    Eigen::RowVector2d r(1, 2);
    CHECK(evaluate(K::linear(), r, vec({3, 4})) == 11.0);
}

TEST_CASE("evaluate: errors") {
    CHECK_THROWS_AS(evaluate(K::linear(), vec({1, 2}), vec({1})), Error);
    CHECK_THROWS_AS(evaluate(K::gaussian(1), vec({NAN}), vec({1})), Error);
    CHECK_THROWS_AS(evaluate(K::gaussian(1), vec({INFINITY}), vec({1})), Error);
    CHECK_THROWS_AS(evaluate(K::gaussian(0), vec({0}), vec({1})), Error);
    CHECK_THROWS_AS(evaluate(K::gaussian(-1), vec({0}), vec({1})), Error);
    CHECK_THROWS_AS(evaluate(K::polynomial(0, 1), vec({0}), vec({1})), Error);
    CHECK_THROWS_AS(evaluate(K::polynomial(2, -1), vec({0}), vec({1})), Error);
    // non-integer power of a negative base
    CHECK_THROWS_AS(evaluate(K::polynomial(1.5, 0), vec({-1}), vec({1})), Error);
    CHECK(evaluate(K::polynomial(3, 0), vec({-1}), vec({1})) == -1.0);
}

TEST_CASE("norm_bounds: analytic and empirical") {
    auto g = norm_bounds(K::gaussian(2));
    CHECK(g.r2 == 1.0);
    CHECK(g.R2 == 1.0);
    CHECK(g.provenance == Provenance::analytic);

    auto imq = norm_bounds(K::inverse_multiquadratic(2, 1));
    CHECK(imq.r2 == 0.5);
    CHECK(imq.R2 == 0.5);
    CHECK(imq.provenance == Provenance::analytic);

    auto lin = norm_bounds(K::linear(), kt::rows({{1}, {2}}));
    CHECK(lin.r2 == 1.0);
    CHECK(lin.R2 == 4.0);
    CHECK(lin.provenance == Provenance::empirical);

    // data is ignored by families with analytic bounds
    CHECK(norm_bounds(K::radial_exponential(1), kt::rows({{5}})).provenance == Provenance::analytic);
}

TEST_CASE("norm_bounds: errors") {
    CHECK_THROWS_AS(norm_bounds(K::linear()), Error);
    CHECK_THROWS_AS(norm_bounds(K::linear(), MatrixXd(0, 2)), Error);
    CHECK_THROWS_AS(norm_bounds(K::linear(), kt::rows({{0, 0}, {1, 1}})), Error);
}

TEST_CASE("property: symmetry and Cauchy-Schwarz for every family") {
    SeededRng rng(7);
    for (const auto& spec : kt::all_families()) {
        for (int t = 0; t < 300; ++t) {
            const auto d = rng.integer(1, 4);
            VectorXd x = kt::random_points(rng, d, 1, 0.6).col(0);
            VectorXd y = kt::random_points(rng, d, 1, 0.6).col(0);
            const double kxy = evaluate(spec, x, y);
            CHECK(kxy == evaluate(spec, y, x));
            CHECK(std::abs(kxy) <= std::sqrt(evaluate(spec, x, x) * evaluate(spec, y, y)) * (1 + 1e-12));
        }
    }
}

TEST_CASE("property: unit-norm diagonal") {
    SeededRng rng(8);
    for (const auto& spec : {K::gaussian(0.4), K::radial_exponential(3)}) {
        for (int t = 0; t < 100; ++t) {
            VectorXd x = kt::random_points(rng, 3, 1, 5).col(0);
            CHECK(evaluate(spec, x, x) == 1.0);
        }
    }
}

TEST_CASE("property: radial families are non-increasing in distance") {
    SeededRng rng(9);
    for (const auto& spec : kt::all_families()) {
        if (!spec.radial()) continue;
        for (int t = 0; t < 500; ++t) {
            VectorXd x = kt::random_points(rng, 2, 1).col(0);
            VectorXd y1 = kt::random_points(rng, 2, 1, 2).col(0);
            VectorXd y2 = kt::random_points(rng, 2, 1, 2).col(0);
            if ((x - y1).norm() > (x - y2).norm()) std::swap(y1, y2);
            CHECK(evaluate(spec, x, y1) >= evaluate(spec, x, y2));
        }
    }
}

TEST_CASE("property: Gram matrices are PSD up to 1e-8") {
    SeededRng rng(10);
    for (const auto& spec : kt::all_families()) {
        for (int t = 0; t < 40; ++t) {
            const auto n = rng.integer(2, 12);
            const auto d = rng.integer(1, 4);
            Dictionary<double> dict(kt::random_points(rng, n, d, 0.7), spec);
            const auto K = build_gram(dict);
            CHECK(K.min_eigenvalue() >= -1e-8 * std::max(1.0, K.matrix().cwiseAbs().maxCoeff()));
        }
    }
}
