#include <doctest.h>

#include <random>

#include "horocave/catalog.hpp"
#include "horocave/conformal.hpp"

using namespace horocave;

namespace {
constexpr double kPi = 3.14159265358979323846;

SpherePoint sp(std::initializer_list<double> vals) {
    std::vector<double> v(vals);
    return SpherePoint::normalized(Eigen::Map<Eigen::VectorXd>(v.data(), v.size()));
}
}  // namespace

TEST_CASE("schouten of the dilated round metric") {
    const auto F = catalog_field("constant", {{"t", 0.4}, {"m", 3}}).field;
    const SchoutenData sch = schouten(F, sp({0.2, 0.5, -0.3, 0.7}));
    const double want = 0.5 * std::exp(-0.8);
    CHECK((sch.lambda.array() - want).abs().maxCoeff() < 1e-14);
    CHECK(sch.endo.trace() == doctest::Approx(3 * want).epsilon(1e-14));
}

TEST_CASE("schouten of the horosphere field vanishes") {
    const auto entry = catalog_field("horosphere", {{"s", 0.3}, {"m", 3}});
    // finite-difference route (the oracle named by the claim)
    const auto F = entry.field.without_analytic();
    for (const auto& x : sample_domain(F.domain(), 25, 3, 0.3))
        CHECK(schouten(F, x).lambda.cwiseAbs().maxCoeff() < 1e-6);
    // analytic route is exact up to roundoff
    for (const auto& x : sample_domain(entry.field.domain(), 25, 3, 0.3))
        CHECK(schouten(entry.field, x).lambda.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("schouten of the annulus field: cylinder eigenvalues") {
    const auto F = catalog_field("annulus", {{"m", 3}}).field;
    for (const auto& x : sample_domain(F.domain(), 25, 5, 0.05)) {
        const Eigen::VectorXd l = schouten(F, x).lambda;
        CHECK(l[0] == doctest::Approx(-0.5).epsilon(1e-6));
        CHECK(l[1] == doctest::Approx(0.5).epsilon(1e-6));
        CHECK(l[2] == doctest::Approx(0.5).epsilon(1e-6));
    }
}

TEST_CASE("scalar curvature") {
    const auto round3 = catalog_field("constant", {{"t", 0.0}, {"m", 3}}).field;
    CHECK(scalar_curvature(round3, sp({1, 0, 0, 0})) == doctest::Approx(6.0).epsilon(1e-12));

    const auto ann = catalog_field("annulus", {{"m", 3}}).field;
    for (const auto& x : sample_domain(ann.domain(), 10, 7, 0.05))
        CHECK(scalar_curvature(ann, x) == doctest::Approx(2.0).epsilon(1e-5));

    const auto horo = catalog_field("horosphere", {{"s", 0.1}, {"m", 3}}).field;
    for (const auto& x : sample_domain(horo.domain(), 10, 9, 0.3))
        CHECK(std::abs(scalar_curvature(horo, x)) < 1e-5);

    const auto two = catalog_field("constant", {{"t", 0.0}, {"m", 2}}).field;
    CHECK_THROWS_AS(scalar_curvature(two, sp({1, 0, 0})), DimensionError);
}

TEST_CASE("gauss curvature for m = 2") {
    const auto cf = catalog_field("constant", {{"t", 0.4}, {"m", 2}}).field;
    const SpherePoint x = sp({0.3, -0.8, 0.52});
    CHECK(gauss_curvature_2d(cf, x) == doctest::Approx(std::exp(-0.8)).epsilon(1e-12));

    const auto ann = catalog_field("annulus", {{"m", 2}}).field;
    for (const auto& x2 : sample_domain(ann.domain(), 15, 11, 0.05)) {
        CHECK(std::abs(gauss_curvature_2d(ann, x2)) < 1e-8);
        // trace identity: K = lambda_1 + lambda_2
        CHECK(gauss_curvature_2d(ann, x2)
              == doctest::Approx(schouten(ann, x2).lambda.sum()).epsilon(1e-8));
    }
}

TEST_CASE("boundary mean curvature") {
    const int m = 3;
    const SpherePoint n = north_pole(m);
    // constant field on the hemisphere: minimal equator
    const auto hemi = catalog_field("constant", {{"t", 0.4}, {"m", m}, {"domain", 1}}).field;
    for (const auto& x : sample_boundary_sphere(n, kPi / 2, 10, 1))
        CHECK(std::abs(boundary_mean_curvature(hemi, kPi / 2, n, x)) < 1e-14);

    // constant field on a ball: h = e^{-t} cot(r)
    const double r = 0.6, t = 0.4;
    const auto ball = catalog_field("constant",
                                    {{"t", t}, {"m", m}, {"domain", 2}, {"r", r}}).field;
    for (const auto& x : sample_boundary_sphere(n, r, 10, 2))
        CHECK(boundary_mean_curvature(ball, r, n, x)
              == doctest::Approx(std::exp(-t) / std::tan(r)).epsilon(1e-12));

    // annulus at the equator: minimal
    const auto ann = catalog_field("annulus", {{"m", m}}).field;
    for (const auto& x : sample_boundary_sphere(n, kPi / 2, 10, 3))
        CHECK(std::abs(boundary_mean_curvature(ann, kPi / 2, n, x)) < 1e-10);

    CHECK_THROWS_AS(boundary_mean_curvature(ann, 0.9, n, n), BoundaryError);
}

TEST_CASE("dilation scales eigenvalues and boundary curvature") {
    const auto entry = catalog_field("annulus", {{"m", 3}});
    const auto& F = entry.field;
    const SpherePoint n = north_pole(3);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ts(-1.0, 2.0);
    const auto pts = sample_domain(F.domain(), 10, 13, 0.05);
    for (int i = 0; i < 6; ++i) {
        const double t = ts(rng);
        const auto G = dilate(F, t);
        for (const auto& x : pts) {
            const Eigen::VectorXd l0 = schouten(F, x).lambda;
            const Eigen::VectorXd lt = schouten(G, x).lambda;
            CHECK((lt - std::exp(-2.0 * t) * l0).cwiseAbs().maxCoeff() < 1e-10);
        }
        for (const auto& x : sample_boundary_sphere(n, kPi / 2, 5, 14)) {
            const double h0 = boundary_mean_curvature(F, kPi / 2, n, x);
            const double ht = boundary_mean_curvature(G, kPi / 2, n, x);
            CHECK(std::abs(ht - std::exp(-t) * h0) < 1e-10);
        }
    }
    // dilate(F, 0) evaluates identically
    const SpherePoint x = sp({std::sin(0.5), 0, 0, std::cos(0.5)});
    CHECK(dilate(F, 0.0).sigma(x) == F.sigma(x));
    // composing the constant-field rule: rho = 0.3 dilated by 0.4
    const auto cf = dilate(catalog_field("constant", {{"t", 0.3}, {"m", 3}}).field, 0.4);
    CHECK((schouten(cf, x).lambda.array() - 0.5 * std::exp(-1.4)).abs().maxCoeff() < 1e-14);
}

TEST_CASE("sigma-form of the Schouten identity carries a 1/2 on hess(sigma^2)") {
    // g^{-1}Sch(g) + |grad sigma|^2/2 I + grad sigma (x) grad sigma
    //   = sigma^2/2 I + (1/2) hess(sigma^2).
    // The constant field cannot distinguish the 1/2 from a 1; the horosphere
    // and annulus fields can.
    for (const char* name : {"horosphere", "annulus"}) {
        const auto entry = catalog_field(name, {{"m", 3}});
        const auto& F = entry.field;
        for (const auto& x : sample_domain(F.domain(), 15, 19, 0.25)) {
            const FieldJet j = F.jet(x);
            const SchoutenData sch = schouten_from_jet(j);
            const int m = 3;
            const Eigen::MatrixXd hess_sigma2 =
                2.0 * j.sigma * j.hess_sigma + 2.0 * j.grad_sigma * j.grad_sigma.transpose();
            const Eigen::MatrixXd lhs = sch.endo
                                        + 0.5 * j.grad_sigma_sq() * Eigen::MatrixXd::Identity(m, m)
                                        + j.grad_sigma * j.grad_sigma.transpose();
            const Eigen::MatrixXd rhs_half =
                0.5 * j.sigma * j.sigma * Eigen::MatrixXd::Identity(m, m) + 0.5 * hess_sigma2;
            const Eigen::MatrixXd rhs_one =
                0.5 * j.sigma * j.sigma * Eigen::MatrixXd::Identity(m, m) + hess_sigma2;
            CHECK((lhs - rhs_half).cwiseAbs().maxCoeff() < 1e-9);
            CHECK((lhs - rhs_one).cwiseAbs().maxCoeff() > 1e-4);
        }
    }
}

TEST_CASE("euclidean chart Schouten matrix") {
    // u == 1 gives the flat metric
    EuclideanField one{3, [](const Eigen::VectorXd&) { return 1.0; }, nullptr, nullptr};
    CHECK(euclidean_schouten_Au(one, Eigen::VectorXd::Zero(3)).norm() < 1e-9);

    // eigenvalues are invariant under orthogonal conjugation
    EuclideanField bump{3, [](const Eigen::VectorXd& y) { return 1.0 + 0.3 * y[0] * y[1]; },
                        nullptr, nullptr};
    const Eigen::VectorXd y0 = (Eigen::VectorXd(3) << 0.2, -0.1, 0.4).finished();
    const Eigen::MatrixXd A = euclidean_schouten_Au(bump, y0);
    std::mt19937_64 rng(31);
    std::normal_distribution<double> g;
    Eigen::MatrixXd M = Eigen::MatrixXd::NullaryExpr(3, 3, [&](int, int) { return g(rng); });
    const Eigen::MatrixXd O = Eigen::HouseholderQR<Eigen::MatrixXd>(M).householderQ();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(A), eb(O * A * O.transpose());
    CHECK((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);

    // stereographic transfer: u0 realizing the round metric has lambda = 1/2,
    // matching schouten() of the constant field rho = 0. The normalization is
    // the identity (no extra factor).
    const int m = 4;
    auto u0 = [m](const Eigen::VectorXd& y) {
        return std::pow(2.0 / (1.0 + y.squaredNorm()), (m - 2.0) / 2.0);
    };
    EuclideanField round{m, u0, nullptr, nullptr};
    for (const Eigen::VectorXd& y : {Eigen::VectorXd::Zero(m).eval(),
                                     (0.3 * Eigen::VectorXd::Ones(m)).eval(),
                                     (Eigen::VectorXd(4) << 1.2, -0.4, 0.0, 0.7).finished()}) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(euclidean_schouten_Au(round, y));
        CHECK((es.eigenvalues().array() - 0.5).abs().maxCoeff() < 1e-5);
    }

    EuclideanField negative{3, [](const Eigen::VectorXd&) { return -1.0; }, nullptr, nullptr};
    CHECK_THROWS_AS(euclidean_schouten_Au(negative, Eigen::VectorXd::Zero(3)), FieldError);
}

TEST_CASE("yamabe residual") {
    const int m = 3;
    // u == 1 solves the round problem with targetR = m(m-1)
    const auto one = catalog_field("constant", {{"t", 0.0}, {"m", m}}).field;
    const auto u1 = yamabe_u_field(one);  // u = 1
    const SpherePoint x = sp({0.1, 0.7, -0.2, 0.5});
    CHECK(std::abs(yamabe_residual(u1, x, m * (m - 1.0)).interior) < 1e-9);

    // hemisphere, u == 1, minimal boundary
    const auto hemi = catalog_field("constant", {{"t", 0.0}, {"m", m}, {"domain", 1}}).field;
    const auto uh = yamabe_u_field(hemi);
    const SpherePoint eq = sp({1, 0, 0, 0});
    const YamabeBoundary bd{kPi / 2, north_pole(m), 0.0};
    const auto res = yamabe_residual(uh, eq, m * (m - 1.0), bd);
    CHECK(std::abs(*res.boundary) < 1e-9);

    // annulus field: u = e^{rho/2} solves targetR = 2 (m = 3)
    const auto ann = catalog_field("annulus", {{"m", m}}).field;
    const auto ua = yamabe_u_field(ann);
    for (const auto& p : sample_domain(ann.domain(), 15, 37, 0.05))
        CHECK(std::abs(yamabe_residual(ua, p, 2.0).interior) < 1e-5);

    // consistency: residual vanishes when targetR is the measured curvature
    const auto horo = catalog_field("horosphere", {{"s", 0.2}, {"m", m}}).field;
    const auto uo = yamabe_u_field(horo);
    for (const auto& p : sample_domain(horo.domain(), 10, 41, 0.3))
        CHECK(std::abs(yamabe_residual(uo, p, scalar_curvature(horo, p)).interior) < 1e-5);
}
