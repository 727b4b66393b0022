#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "entropy_report.hpp"
#include "support.hpp"

using namespace kerndict;
using kt::rows;
using kt::vec;
using K = KernelSpec<double>;
using W = WindowSpec<double>;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kHalfLog2Pi = 0.5 * std::log(2 * std::numbers::pi);

VectorXd random_pmf(SeededRng& rng, Eigen::Index n) {
    VectorXd p(n);
    for (Eigen::Index i = 0; i < n; ++i) p(i) = rng.uniform(1e-3, 1.0);
    return p / p.sum();
}

}  // namespace

TEST_CASE("window: gaussian normalization and shape") {
    const auto w = W::gaussian(2.0, 3);
    CHECK(w.normalization == std::pow(std::sqrt(std::numbers::pi) * 2.0, -3.0));
    CHECK(w(0) == w.normalization);
    CHECK(w(1) < w(0.5));
    CHECK_THROWS_AS(W::gaussian(0, 1), Error);
    CHECK_THROWS_AS(W::gaussian(1, 0), Error);
}

TEST_CASE("window: every normalized family integrates to one in d = 1") {
    for (const auto& w : {W::make(WindowFamily::gaussian, 0.7, 1), W::make(WindowFamily::radial_exponential, 0.7, 1),
                          W::make(WindowFamily::inverse_multiquadratic, 0.7, 1, 2.0)}) {
        REQUIRE(w.normalized);
        const int panels = 200000;
        const double a = -400, h = 800.0 / panels;
        double s = w(std::abs(a)) + w(std::abs(a + panels * h));
        for (int k = 1; k < panels; ++k) s += (k % 2 ? 4 : 2) * w(std::abs(a + k * h));
        CHECK(s * h / 3 == doctest::Approx(1.0).epsilon(1e-4));
    }
    CHECK_FALSE(W::make(WindowFamily::inverse_multiquadratic, 1, 2, 1.0).normalized);
}

TEST_CASE("parzen_input") {
    const auto one = kt::gauss_dict(rows({{0}}));
    CHECK(parzen_input(one, W::gaussian(1, 1), vec({0})) == doctest::Approx(1 / std::sqrt(std::numbers::pi)));
    double prev = INFINITY;
    for (double x : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        const double v = parzen_input(one, W::gaussian(1, 1), vec({x}));
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 1e-100);
    const auto two = kt::gauss_dict(rows({{-1}, {1}}));
    const auto w = W::gaussian(1, 1);
    CHECK(parzen_input(two, w, vec({0})) == doctest::Approx(w(1.0)));
    CHECK_THROWS_AS(parzen_input(two, W::gaussian(1, 2), vec({0})), Error);
    CHECK_THROWS_AS(parzen_input(two, w, vec({0, 0})), Error);
}

TEST_CASE("quadratic_entropy_gaussian") {
    CHECK(quadratic_entropy_gaussian(kt::gauss_dict(rows({{0}})), 1.0) == doctest::Approx(kHalfLog2Pi).epsilon(1e-15));
    const double expected = kHalfLog2Pi - std::log((2 + 2 * std::exp(-0.5)) / 4);
    CHECK(quadratic_entropy_gaussian(kt::gauss_dict(rows({{0}, {1}})), 1.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected == doctest::Approx(1.1380).epsilon(1e-4));

    SeededRng rng(41);
    const MatrixXd atoms = kt::random_points(rng, 7, 3);
    MatrixXd shifted = atoms;
    shifted.rowwise() += Eigen::RowVector3d(5, -2, 0.25);
    CHECK(quadratic_entropy_gaussian(kt::gauss_dict(atoms), 0.8) ==
          doctest::Approx(quadratic_entropy_gaussian(kt::gauss_dict(shifted), 0.8)).epsilon(1e-12));
}

TEST_CASE("quadratic_entropy_general") {
    CHECK(quadratic_entropy_general(Dictionary<double>(rows({{1, 0}, {0, 1}}), K::linear())) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(quadratic_entropy_general(kt::gauss_dict(rows({{3}}))) == 0.0);
    CHECK(quadratic_entropy_general(kt::gauss_dict(rows({{3}, {3}}))) == 0.0);
    CHECK_THROWS_WITH_AS(quadratic_entropy_general(Dictionary<double>(rows({{1}, {-1}}), K::linear())),
                         doctest::Contains("estimator undefined"), Error);
}

TEST_CASE("property: general = gaussian minus the bandwidth term") {
    SeededRng rng(42);
    for (int t = 0; t < 200; ++t) {
        const auto d = rng.integer(1, 5);
        const double sigma = rng.uniform(0.3, 3);
        const auto dict = kt::gauss_dict(kt::random_points(rng, rng.integer(1, 15), d, 2), sigma);
        const double shift = d / 2.0 * std::log(2 * std::numbers::pi * sigma * sigma);
        CHECK(std::abs(quadratic_entropy_general(dict) - (quadratic_entropy_gaussian(dict, sigma) - shift)) <= 1e-12);
    }
}

TEST_CASE("renyi_entropy: special cases") {
    const VectorXd u = vec({0.25, 0.25, 0.25, 0.25});
    CHECK(renyi_entropy(u, 2.0) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK(renyi_entropy(vec({0.1, 0.2, 0.3}), 0.0) == std::log(3.0));
    CHECK(renyi_entropy(vec({0.5, 0.5}), 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(renyi_entropy(vec({0.7, 0.3}), kInf) == doctest::Approx(0.3566749).epsilon(1e-7));
    CHECK(renyi_entropy(vec({2.0, 2.0}), 2.0, true) == doctest::Approx(std::log(2.0)));
    CHECK_THROWS_AS(renyi_entropy(vec({0.5, 0.0}), 2.0), Error);
    CHECK_THROWS_AS(renyi_entropy(vec({0.5, -0.5}), 2.0), Error);
    CHECK_THROWS_AS(renyi_entropy(VectorXd(0), 2.0), Error);
    CHECK_THROWS_AS(renyi_entropy(vec({0.5, 0.5}), -1.0), Error);
}

TEST_CASE("tsallis_entropy") {
    CHECK(tsallis_entropy(vec({0.5, 0.5}), 2.0) == doctest::Approx(0.5));
    CHECK(tsallis_entropy(vec({1.0}), 2.0) == 0.0);
    CHECK_THROWS_AS(tsallis_entropy(vec({0.5, 0.5}), 1.0), Error);
}

TEST_CASE("property: Renyi order monotonicity and H2 <= 2 Hinf on random pmfs") {
    SeededRng rng(43);
    const double orders[] = {0, 0.5, 1, 2, 8, kInf};
    for (int t = 0; t < 1000; ++t) {
        const VectorXd p = random_pmf(rng, rng.integer(1, 30));
        double prev = INFINITY;
        for (double a : orders) {
            const double h = renyi_entropy(p, a, true);
            CHECK(h <= prev + 1e-12);
            prev = h;
        }
        CHECK(renyi_entropy(p, 2.0, true) <= 2 * renyi_entropy(p, kInf, true) + 1e-12);
    }
}

TEST_CASE("property: uniform pmf maximizes Renyi entropy for alpha in {0.5, 2, inf}") {
    SeededRng rng(44);
    for (int t = 0; t < 500; ++t) {
        const auto n = rng.integer(2, 20);
        const VectorXd p = random_pmf(rng, n);
        const VectorXd u = VectorXd::Constant(n, 1.0 / static_cast<double>(n));
        for (double a : {0.5, 2.0, kInf}) CHECK(renyi_entropy(p, a) <= renyi_entropy(u, a) + 1e-12);
    }
}

TEST_CASE("property: Tsallis-Renyi bridge at q = alpha = 2") {
    SeededRng rng(45);
    for (int t = 0; t < 1000; ++t) {
        const VectorXd p = random_pmf(rng, rng.integer(1, 25));
        CHECK(tsallis_entropy(p, 2.0) >= 1 - std::exp(-renyi_entropy(p, 2.0)) - 1e-12);
    }
}

TEST_CASE("entropy_floors_input: examples") {
    const auto dict = kt::gauss_dict(rows({{0}, {1}}));
    const auto report = diversity_report(dict);
    const auto nb = norm_bounds(dict.spec());
    const auto floors = entropy_floors_input(report, nb, 2, EntropyContext<double>::gaussian_window(1, 1.0));
    REQUIRE(floors.size() == 4);
    CHECK(floors[3].measure == DiversityMeasure::babel);
    const double h2 = quadratic_entropy_gaussian(dict, 1.0);
    CHECK(std::abs(floors[3].floor - h2) <= 1e-12);
    CHECK(floors[3].floor == doctest::Approx(kHalfLog2Pi + std::log(2.0) - std::log(1 + std::exp(-0.5))));

    DiversityReport<double> orth{4, 1.0, 1.0, 0.0, 0.0, 0.0};
    const NormBounds<double> unit{1, 1, Provenance::analytic};
    const auto g = entropy_floors_input(orth, unit, 4, EntropyContext<double>::general());
    CHECK(g[2].measure == DiversityMeasure::coherence);
    CHECK(g[2].floor == doctest::Approx(std::log(4.0)));
    CHECK(g[1].measure == DiversityMeasure::approximation);
    CHECK(g[1].floor == doctest::Approx(std::log(4.0)));
    CHECK(g[0].floor == doctest::Approx(std::log(4.0)));
    CHECK(g[3].floor == doctest::Approx(std::log(4.0)));
}

TEST_CASE("entropy_floors_input: errors") {
    DiversityReport<double> bad{2, 1.5, 1.0, 0.0, 0.0, 0.0};
    const NormBounds<double> unit{1, 1, Provenance::analytic};
    CHECK_THROWS_AS(entropy_floors_input(bad, unit, 2, EntropyContext<double>::general()), Error);
    DiversityReport<double> ok{2, 0.5, 0.5, 0.5, 0.5, 0.0};
    CHECK_THROWS_AS(entropy_floors_input(ok, unit, 2, EntropyContext<double>{true, 0, 1.0}), Error);
    CHECK_THROWS_AS(entropy_floors_input(ok, unit, 2, EntropyContext<double>{true, 1, 0.0}), Error);
}

TEST_CASE("property: distance, coherence and Babel floors hold on random dictionaries") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto dict = random_dictionary(9000 + seed);
        const auto report = diversity_report(dict);
        const auto nb = norm_bounds(dict.spec());
        const auto n = dict.size();
        const auto gauss = entropy_floors_input(report, nb, n,
                                                EntropyContext<double>::gaussian_window(dict.dim(), dict.spec().sigma));
        const auto general = entropy_floors_input(report, nb, n, EntropyContext<double>::general());
        const double hg = quadratic_entropy_gaussian(dict, dict.spec().sigma);
        const double hq = quadratic_entropy_general(dict);
        for (std::size_t k = 0; k < 4; ++k) {
            if (gauss[k].measure == DiversityMeasure::approximation) continue;
            CHECK(gauss[k].floor <= hg + 1e-9);
            CHECK(general[k].floor <= hq + 1e-9);
        }
    }
}

TEST_CASE("corollary_floors") {
    const auto c = corollary_floors(1.1380);
    CHECK(c.shannon == 1.1380);
    CHECK(c.hartley == 1.1380);
    CHECK(c.min_entropy == 0.5690);
    const auto z = corollary_floors(0.0);
    CHECK(z.shannon == 0.0);
    CHECK(z.min_entropy == 0.0);
    CHECK_THROWS_AS(corollary_floors(kInf), Error);
}

TEST_CASE("parzen_feature") {
    const auto w = W::gaussian(1, 1);
    const auto one = kt::gauss_dict(rows({{2}}));
    CHECK(parzen_feature(one, w, vec({2})) == w(0));

    const Dictionary<double> lin(rows({{1, 0}}), K::linear());
    CHECK(parzen_feature(lin, w, vec({0, 1})) == doctest::Approx(w(std::sqrt(2.0))));

    const auto two = kt::gauss_dict(rows({{0}, {3}}));
    double prev = 0;
    for (double x : {-6.0, -4.0, -2.0, -1.0, -0.5, 0.0}) {
        const double v = parzen_feature(two, w, vec({x}));
        CHECK(v >= prev);
        prev = v;
    }
    CHECK_THROWS_AS(feature_radicand(1.0, 1.1, 1.0), Error);
    CHECK(feature_radicand(1.0, 1.0 + 1e-13, 1.0) == 0.0);
}

TEST_CASE("parzen_feature_at_atoms agrees with parzen_feature") {
    SeededRng rng(46);
    const auto dict = kt::gauss_dict(kt::random_points(rng, 6, 2), 0.9);
    const auto w = W::make(WindowFamily::radial_exponential, 0.6, 2);
    const auto at = parzen_feature_at_atoms(build_gram(dict), w);
    for (Eigen::Index i = 0; i < dict.size(); ++i)
        CHECK(at(i) == doctest::Approx(parzen_feature(dict, w, dict.atom(i))).epsilon(1e-14));
}

TEST_CASE("feature_entropy_floors") {
    // a window with w(eps) = 0.1 exactly
    W w;
    w.family = WindowFamily::gaussian;
    w.sigma = 1;
    w.normalization = 0.1 * std::exp(1.0);
    const auto f = feature_entropy_floors<double>(10, 1.0, w, 2.0);
    CHECK(f.window_at_floor == doctest::Approx(0.1));
    CHECK(f.renyi == doctest::Approx(2.3025851).epsilon(1e-7));
    CHECK(f.shannon == doctest::Approx(2.3025851).epsilon(1e-7));
    CHECK(f.monotone_regime);

    w.normalization = std::exp(1.0);
    const auto g = feature_entropy_floors<double>(10, 1.0, w, 2.0);
    CHECK(g.window_at_floor == doctest::Approx(1.0));
    CHECK(std::abs(g.shannon) < 1e-15);
    CHECK_FALSE(g.monotone_regime);

    CHECK_THROWS_AS(feature_entropy_floors<double>(10, 1.0, w, 1.0), Error);
    CHECK_THROWS_AS(feature_entropy_floors<double>(10, 0.0, w, 2.0), Error);
}

TEST_CASE("reports: quadratic report on the two-atom dictionary") {
    const auto dict = kt::gauss_dict(rows({{0}, {1}}));
    const auto r = reports::quadratic_report(dict, true);
    CHECK(r.estimator == Estimator::quadratic_gaussian);
    CHECK(r.value == doctest::Approx(1.1380).epsilon(1e-4));
    bool babel_seen = false;
    for (const auto& b : r.lower_bounds) {
        if (b.measure == "babel") {
            babel_seen = true;
            CHECK(b.met);
            CHECK(std::abs(b.bound - r.value) <= 1e-12);
        }
    }
    CHECK(babel_seen);
    CHECK_THROWS_AS(reports::quadratic_report(Dictionary<double>(rows({{0}, {1}}), K::linear()), true), Error);
}

TEST_CASE("reports: Hartley order gives log n") {
    const auto dict = kt::gauss_dict(rows({{0}, {1}, {5}}));
    const auto r = reports::order_report(dict, reports::default_window(dict.spec(), 1), {false, 0.0}, false);
    CHECK(r.value == std::log(3.0));
    CHECK(r.estimator == Estimator::hartley);
}

TEST_CASE("reports: feature space with degenerate floors warns") {
    // Babel of a crowded unit-norm dictionary is above r^2 = 1
    const auto dict = kt::gauss_dict(rows({{0}, {0.1}, {0.2}}));
    const auto r = reports::feature_report(dict, reports::default_window(dict.spec(), 1), 2.0);
    CHECK_FALSE(r.warnings.empty());
    bool degenerate = false;
    for (const auto& b : r.lower_bounds)
        if (b.note == "degenerate") {
            degenerate = true;
            CHECK_FALSE(b.asserted);
        }
    CHECK(degenerate);
}
