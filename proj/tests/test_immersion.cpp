#include <doctest.h>

#include <random>

#include "horocave/catalog.hpp"
#include "horocave/immersion.hpp"

using namespace horocave;

namespace {
SpherePoint sp(std::initializer_list<double> vals) {
    std::vector<double> v(vals);
    return SpherePoint::normalized(Eigen::Map<Eigen::VectorXd>(v.data(), v.size()));
}
}  // namespace

TEST_CASE("lambda-kappa correspondence") {
    CHECK(kappa_from_lambda(0.0) == 1.0);
    CHECK(lambda_from_kappa(1.0) == 0.0);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ls(-5.0, 0.49);
    double prev_l = -5.0, prev_k = kappa_from_lambda(-5.0);
    for (int i = 0; i < 1000; ++i) {
        const double l = ls(rng);
        CHECK(std::abs(l - lambda_from_kappa(kappa_from_lambda(l))) < 1e-12);
    }
    // strictly increasing on the admissible range
    for (int i = 1; i <= 100; ++i) {
        const double l = -5.0 + i * (0.49 + 5.0) / 100.0;
        const double k = kappa_from_lambda(l);
        CHECK(k > prev_k);
        prev_k = k;
        prev_l = l;
    }
    (void)prev_l;
}

TEST_CASE("geodesic sphere immersion in closed form") {
    const double t = 0.7;
    const auto F = catalog_field("constant", {{"t", t}, {"m", 3}}).field;
    for (const auto& x : sample_sphere(3, 20, 5)) {
        const ImmersionSample s = immerse(F, x, Model::Poincare);
        CHECK(std::abs(s.phi.x0 - std::cosh(t)) < 1e-14);
        CHECK((s.phi.xs - std::sinh(t) * x.coords()).norm() < 1e-14);
        CHECK((s.kappa.array() - 1.0 / std::tanh(t)).abs().maxCoeff() < 1e-12);
        CHECK(std::abs(mink_inner(s.phi, s.phi) + 1.0) < 1e-12);
        // independent Poincare formula agrees with model conversion
        const Eigen::VectorXd conv =
            convert_model(HyperbolicPoint::hyperboloid(s.phi), Model::Poincare).ball();
        CHECK((*s.model_coords - conv).norm() < 1e-10);
        CHECK(std::abs(s.model_coords->norm() - std::tanh(t / 2)) < 1e-12);
    }
    // Klein form against conversion
    for (const auto& x : sample_sphere(3, 10, 6)) {
        const ImmersionSample s = immerse(F, x, Model::Klein);
        const Eigen::VectorXd conv =
            convert_model(HyperbolicPoint::hyperboloid(s.phi), Model::Klein).ball();
        CHECK((*s.model_coords - conv).norm() < 1e-10);
    }
}

TEST_CASE("horosphere field image lies on one horosphere") {
    const int m = 3;
    const double s0 = 0.3;
    const auto F = catalog_field("horosphere", {{"s", s0}, {"m", m}}).field;
    const MinkowskiVec base{1.0, north_pole(m).coords()};
    double lo = 0.0, hi = 0.0;
    bool started = false;
    for (const auto& x : sample_domain(F.domain(), 40, 9, 0.15)) {
        const double v = mink_inner(immerse(F, x).phi, base);
        if (!started) lo = hi = v, started = true;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo < 1e-10);
    // the support field e^{-s}(1 - <x,q>) realizes <<phi,(1,q)>> = -e^s / 2
    CHECK(hi == doctest::Approx(-std::exp(s0) / 2.0).epsilon(1e-12));
}

TEST_CASE("immersion precondition") {
    // the undilated annulus field has lambda reaching 1/2
    const auto ann = catalog_field("annulus", {{"m", 3}});
    CHECK(ann.representable_after_dilation_only);
    const auto pts = sample_domain(ann.field.domain(), 3, 11, 0.05);
    CHECK_THROWS_AS(immerse(ann.field, pts[0]), HorosphericalConcavityViolated);
    CHECK_NOTHROW(immerse(dilate(ann.field, 0.5), pts[0]));
    // the round metric itself sits exactly at the pole kappa = infinity
    const auto round3 = catalog_field("constant", {{"t", 0.0}, {"m", 3}}).field;
    CHECK_THROWS_AS(immerse(round3, pts[0]), HorosphericalConcavityViolated);
}

TEST_CASE("parallel flow") {
    const int m = 3;
    const double s = 0.4;
    const auto F = catalog_field("constant", {{"t", s}, {"m", m}}).field;
    const SpherePoint x = sp({0.3, 0.1, -0.5, 0.8});

    // t = 0 reproduces the immersion
    const ImmersionSample a = parallel_flow(F, 0.0, x);
    const ImmersionSample b = immerse(F, x);
    CHECK((a.phi - b.phi).x0 == 0.0);
    CHECK((a.phi - b.phi).xs.norm() == 0.0);

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ts(0.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const double t = ts(rng);
        const ImmersionSample ft = parallel_flow(F, t, x);
        // geodesic sphere of radius s + t
        CHECK((ft.kappa.array() - 1.0 / std::tanh(s + t)).abs().maxCoeff() < 1e-10);
        CHECK(std::abs(mink_inner(ft.phi, ft.phi) + 1.0) < 1e-12);
        // flow equals immersion of the dilated field
        const ImmersionSample fd = immerse(dilate(F, t), x);
        CHECK((ft.phi - fd.phi).xs.norm() + std::abs((ft.phi - fd.phi).x0) < 1e-9);
        CHECK((ft.eta - fd.eta).xs.norm() + std::abs((ft.eta - fd.eta).x0) < 1e-9);
        // natural orientation eta_t = phi_t - e^{t+rho}(1, x)
        const double erho = std::exp(t + F.jet(x).rho);
        CHECK(std::abs(ft.eta.x0 - (ft.phi.x0 - erho)) < 1e-9);
        // lambda_t = e^{-2t} lambda
        CHECK((ft.lambda - std::exp(-2.0 * t) * b.lambda).cwiseAbs().maxCoeff() < 1e-12);
    }

    // flow of the dilated annulus field: precondition is on the dilated data
    const auto ann = catalog_field("annulus", {{"m", m}}).field;
    const auto pts = sample_domain(ann.domain(), 3, 13, 0.05);
    CHECK_NOTHROW(parallel_flow(ann, 0.5, pts[0]));   // e^{-1} * 1/2 < 1/2 - margin
    CHECK_THROWS_AS(parallel_flow(ann, 0.0, pts[0]), HorosphericalConcavityViolated);
    CHECK_THROWS_AS(parallel_flow(ann, -0.1, pts[0]), RangeError);
}

TEST_CASE("properness indicator") {
    const auto F = catalog_field("constant", {{"t", 0.6}, {"m", 3}}).field;
    const SpherePoint x = sp({0.3, 0.1, -0.5, 0.8});
    CHECK(properness_indicator(F, x) == doctest::Approx(0.36).epsilon(1e-14));

    // rotational example: indicator grows monotonically toward the edge
    const auto rot = catalog_field("rotational_example").field;
    double prev = -1.0;
    const double cut = std::cos(3.14159265358979323846 / 4.0);
    for (int i = 0; i <= 10; ++i) {
        const double z = cut - 0.25 * std::pow(0.6, i);
        const double ind =
            properness_indicator(rot, sp({std::sqrt(1.0 - z * z), 0, z}));
        CHECK(ind > prev);
        prev = ind;
    }
    CHECK(prev > 1e3);

    // annulus field at the equator: rho = 0 and grad rho = 0
    const auto ann = catalog_field("annulus", {{"m", 3}}).field;
    CHECK(std::abs(properness_indicator(ann, sp({1, 0, 0, 0}))) < 1e-12);

    // dilation shifts rho only: indicator(t) = (rho + t)^2 + |grad rho|^2
    const auto rot2 = dilate(rot, 0.8);
    const SpherePoint y = sp({1, 0, 0.2});
    const FieldJet j = rot.jet(y);
    CHECK(properness_indicator(rot2, y)
          == doctest::Approx((j.rho + 0.8) * (j.rho + 0.8) + j.grad_rho_sq()).epsilon(1e-12));
}

TEST_CASE("identity report") {
    const auto F = catalog_field("constant", {{"t", 0.5}, {"m", 3}}).field;
    const auto pts = sample_sphere(3, 30, 21);
    const IdentityReport rep = verify_identities(F, pts);
    CHECK(rep.pass());
    CHECK(!rep.any_kappa_pole);
    // closed form for the constant field: |phi_K| = tanh(t)
    for (const auto& row : rep.rows) CHECK(row.klein_norm_residual < 1e-14);

    const auto horo = catalog_field("horosphere", {{"s", 0.3}, {"m", 3}}).field;
    const IdentityReport rh =
        verify_identities(horo, sample_domain(horo.domain(), 30, 22, 0.2));
    CHECK(rh.pass());

    // a field with lambda at 1/2 flags the kappa pole
    const auto ann = catalog_field("annulus", {{"m", 3}}).field;
    const IdentityReport ra = verify_identities(ann, sample_domain(ann.domain(), 10, 23, 0.05));
    CHECK(ra.any_kappa_pole);
}
