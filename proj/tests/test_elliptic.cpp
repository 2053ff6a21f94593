#include <doctest.h>

#include <random>

#include "horocave/catalog.hpp"
#include "horocave/elliptic.hpp"

using namespace horocave;

namespace {

Eigen::VectorXd lv(std::initializer_list<double> vals) {
    std::vector<double> v(vals);
    return Eigen::Map<Eigen::VectorXd>(v.data(), v.size());
}

// brute-force elementary symmetric polynomial (independent of the recurrence)
double sigma_k_bruteforce(const Eigen::VectorXd& l, int k) {
    const int m = static_cast<int>(l.size());
    double total = 0.0;
    std::vector<int> idx(k);
    // enumerate k-subsets
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        double prod = 1.0;
        for (int i : idx) prod *= l[i];
        total += prod;
        int j = k - 1;
        while (j >= 0 && idx[j] == m - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int i = j + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return total;
}

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
    CHECK(sigma_k(lv({-0.5, 0.5, 0.5}), 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sigma_k(lv({-0.5, 0.5, 0.5, 0.5}), 2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sigma_k(lv({1, 1, 1}), 3) == doctest::Approx(1.0).epsilon(1e-15));

    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int i = 0; i < 200; ++i) {
        Eigen::VectorXd l = Eigen::VectorXd::NullaryExpr(5, [&](int) { return g(rng); });
        for (int k = 1; k <= 5; ++k)
            CHECK(sigma_k(l, k) == doctest::Approx(sigma_k_bruteforce(l, k)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(sigma_k(lv({1, 2, 3}), 0), RangeError);
    CHECK_THROWS_AS(sigma_k(lv({1, 2, 3}), 4), RangeError);
}

TEST_CASE("cone membership") {
    CHECK(cone_contains(ConeSpec::gamma_m(3), lv({1, 1, 1})));
    CHECK(cone_contains(ConeSpec::gamma1(3), lv({-0.5, 0.5, 0.5})));
    CHECK(!cone_contains(ConeSpec::garding(2, 4), lv({-0.5, 0.5, 0.5, 0.5})));  // sigma_2 = 0
    CHECK(cone_contains_closure(ConeSpec::garding(2, 4), lv({-0.5, 0.5, 0.5, 0.5})));

    // nesting Gamma_m within Garding(k) within Gamma_1
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    for (int i = 0; i < 10000; ++i) {
        Eigen::VectorXd l = Eigen::VectorXd::NullaryExpr(4, [&](int) { return g(rng); });
        for (int k = 2; k <= 4; ++k) {
            if (cone_contains(ConeSpec::gamma_m(4), l))
                CHECK(cone_contains(ConeSpec::garding(k, 4), l));
            if (cone_contains(ConeSpec::garding(k, 4), l))
                CHECK(cone_contains(ConeSpec::gamma1(4), l));
        }
    }
}

TEST_CASE("axiom checks") {
    for (int m : {3, 4, 5}) {
        CHECK(check_axioms(sigma1_data(m, 1.0), 200).all_pass());
        for (int k : {1, 2})
            CHECK(check_axioms(sigma_k_root_data(k, m, 1.0), 200).all_pass());
        const AxiomReport raw = check_axioms(raw_sigma_k_data(2, m, 0.0), 200);
        CHECK(!raw["homogeneity"].pass);  // degree-2 polynomial cannot be degree-1 homogeneous
    }
    CHECK_THROWS_AS(check_axioms(sigma1_data(3, 1.0), 50), RangeError);

    // exact permutation invariance via sorted evaluation
    const EllipticData d = sigma_k_root_data(2, 4, 1.0);
    const Eigen::VectorXd a = lv({0.3, 1.7, 0.2, 0.9});
    const Eigen::VectorXd b = lv({1.7, 0.9, 0.3, 0.2});
    CHECK(d.eval(a) == d.eval(b));
}

TEST_CASE("problem residuals") {
    const int m = 3;
    // constant field with sigma_1: residual m e^{-2t}/2 - 1, zero at the
    // dilation t* = log(m/2)/2
    const EllipticData d1 = sigma1_data(m, 1.0);
    const SpherePoint x = SpherePoint::normalized(lv({0.3, -0.2, 0.8, 0.1}));
    for (double t : {0.0, 0.2, 0.5}) {
        const auto F = catalog_field("constant", {{"t", t}, {"m", m}}).field;
        CHECK(problem_residual(F, d1, x)
              == doctest::Approx(m * std::exp(-2.0 * t) / 2.0 - 1.0).epsilon(1e-12));
    }
    const double tstar = 0.5 * std::log(m / 2.0);
    const auto Fstar = catalog_field("constant", {{"t", tstar}, {"m", m}}).field;
    CHECK(std::abs(problem_residual(Fstar, d1, x)) < 1e-12);

    // horosphere field solves every degenerate problem
    const auto horo = catalog_field("horosphere", {{"s", 0.3}, {"m", m}}).field;
    for (int k : {1, 2, 3})
        for (const auto& p : sample_domain(horo.domain(), 10, 7, 0.3))
            CHECK(std::abs(problem_residual(horo, sigma_k_root_data(k, m, 0.0), p)) < 1e-6);

    // annulus field in m = 4 solves the degenerate sigma_2 problem
    const auto ann4 = catalog_field("annulus", {{"m", 4}}).field;
    for (const auto& p : sample_domain(ann4.domain(), 10, 11, 0.05))
        CHECK(std::abs(problem_residual(ann4, raw_sigma_k_data(2, 4, 0.0), p)) < 1e-6);

    // eigenvalues outside the closed cone are reported
    const auto ann3 = catalog_field("annulus", {{"m", 3}}).field;
    EllipticData dm = sigma1_data(3, 0.0);
    dm.cone = ConeSpec::gamma_m(3);  // annulus lambda_1 = -1/2 < 0
    const auto pts = sample_domain(ann3.domain(), 3, 13, 0.05);
    CHECK_THROWS_AS(problem_residual(ann3, dm, pts[0]), ConeViolation);
}

TEST_CASE("dilated data") {
    const EllipticData d = sigma1_data(3, 1.0);
    const Eigen::VectorXd l = lv({0.2, 0.4, 0.9});
    // t0 = 0 is the identity
    CHECK(dilated_data(d, 0.0).eval(l) == doctest::Approx(d.eval(l)).epsilon(1e-15));
    // sigma_1 is linear: f_{t0} = e^{2 t0} sigma_1
    CHECK(dilated_data(d, 0.3).eval(l)
          == doctest::Approx(std::exp(0.6) * d.eval(l)).epsilon(1e-15));

    // transported problem is solved by the dilated field
    const auto F = catalog_field("constant", {{"t", 0.5 * std::log(1.5)}, {"m", 3}}).field;
    const SpherePoint x = SpherePoint::normalized(lv({0.3, -0.2, 0.8, 0.1}));
    REQUIRE(std::abs(problem_residual(F, d, x)) < 1e-12);
    for (double t0 : {0.2, 0.7, -0.4}) {
        CHECK(std::abs(problem_residual(dilate(F, t0), dilated_data(d, t0), x)) < 1e-9);
        // residual-level restatement: transported residual equals original
        const auto G = catalog_field("constant", {{"t", 0.1}, {"m", 3}}).field;
        CHECK(problem_residual(dilate(G, t0), dilated_data(d, t0), x)
              == doctest::Approx(problem_residual(G, d, x)).epsilon(1e-9));
    }
}
