#include "horocave/catalog.hpp"

#include <cmath>

namespace horocave {

namespace {

constexpr double kPi = 3.14159265358979323846;

double get(const std::map<std::string, double>& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

int get_int(const std::map<std::string, double>& p, const std::string& key, int fallback) {
    const double v = get(p, key, fallback);
    const int i = static_cast<int>(std::llround(v));
    if (std::abs(v - i) > 1e-12) throw RangeError("parameter " + key + " must be an integer");
    return i;
}

Eigen::VectorXd zvec(int n) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[n - 1] = 1.0;
    return e;
}

// sigma = sqrt(1 - z^2) and its ambient derivatives; shared by the annulus
// and rotational entries.
double annulus_sigma(double z) { return std::sqrt(1.0 - z * z); }
double annulus_dsigma(double z) { return -z / std::sqrt(1.0 - z * z); }
double annulus_d2sigma(double z) { return -std::pow(1.0 - z * z, -1.5); }

CatalogEntry make_constant(std::map<std::string, double> params) {
    const double t = get(params, "t", 0.0);
    const int m = get_int(params, "m", 3);
    const int domain_code = get_int(params, "domain", 0);
    const double r = get(params, "r", 0.6);
    DomainSpec dom = DomainSpec::full_sphere(m);
    switch (domain_code) {
        case 0: break;
        case 1: dom = DomainSpec::hemisphere(m); break;
        case 2: dom = DomainSpec::geodesic_ball(north_pole(m), r); break;
        case 3: dom = DomainSpec::annulus(m, r); break;
        default: throw RangeError("constant: domain code must be 0..3");
    }
    const double s0 = std::exp(-t);
    ConformalFactorField F(
        dom, [s0](const SpherePoint&) { return s0; },
        [m](const SpherePoint&) { return Eigen::VectorXd::Zero(m + 1).eval(); },
        [m](const SpherePoint&) { return Eigen::MatrixXd::Zero(m + 1, m + 1).eval(); }, 99,
        /*validate=*/false);

    CatalogEntry e{"constant", std::move(params), std::move(F), {}, false, 0.02};
    const double lam = 0.5 * std::exp(-2.0 * t);
    e.expected.push_back({"lambda_const", lam, 1e-10, 0, {}, "round metric scaled by e^{2t}"});
    if (m >= 3)
        e.expected.push_back({"R", m * (m - 1.0) * std::exp(-2.0 * t), 1e-8, 0, {},
                              "trace identity on the scaled round metric"});
    if (m == 2)
        e.expected.push_back({"K", std::exp(-2.0 * t), 1e-10, 0, {}, "Liouville form"});
    if (t > 0.0)
        e.expected.push_back({"kappa_const", 1.0 / std::tanh(t), 1e-9, 0, {},
                              "geodesic sphere of radius t"});
    return e;
}

CatalogEntry make_horosphere(std::map<std::string, double> params) {
    const double s = get(params, "s", 0.0);
    const int m = get_int(params, "m", 3);
    const SpherePoint q = north_pole(m);
    const double a = std::exp(-s);
    ConformalFactorField F(
        DomainSpec::punctured_sphere(q),
        [a, q](const SpherePoint& x) { return a * (1.0 - q.coords().dot(x.coords())); },
        [a, q](const SpherePoint&) { return (-a * q.coords()).eval(); },
        [m](const SpherePoint&) { return Eigen::MatrixXd::Zero(m + 1, m + 1).eval(); }, 99,
        /*validate=*/false);

    CatalogEntry e{"horosphere", std::move(params), std::move(F), {}, false, 0.1};
    e.expected.push_back(
        {"lambda_max_abs", 0.0, 1e-10, 0, {}, "flat horospherical metric, exact cancellation"});
    if (m >= 3) e.expected.push_back({"R", 0.0, 1e-8, 0, {}, "flat metric"});
    e.expected.push_back({"phi_base_spread", 0.0, 1e-8, 0, {},
                          "image lies on a single horosphere based at q"});
    return e;
}

CatalogEntry make_punctured(std::map<std::string, double> params) {
    const int m = get_int(params, "m", 4);
    const int k = get_int(params, "k", 1);
    if (k < 1 || 2 * k >= m)
        throw RangeError("punctured: requires 1 <= k < m/2 (no such solution otherwise)");
    const double beta = 1.0 - m / (2.0 * k);

    auto A = [beta](double z) { return std::pow(1.0 + z, beta) + std::pow(1.0 - z, beta); };
    auto B = [beta](double z) {
        return std::pow(1.0 + z, beta - 1.0) - std::pow(1.0 - z, beta - 1.0);
    };
    auto C = [beta](double z) {
        return std::pow(1.0 + z, beta - 2.0) + std::pow(1.0 - z, beta - 2.0);
    };
    auto val = [A, beta](double z) { return std::pow(A(z), 1.0 / beta); };
    auto d1 = [A, B, beta](double z) { return std::pow(A(z), 1.0 / beta - 1.0) * B(z); };
    auto d2 = [A, B, C, beta](double z) {
        return (1.0 - beta) * std::pow(A(z), 1.0 / beta - 2.0) * B(z) * B(z)
               + (beta - 1.0) * std::pow(A(z), 1.0 / beta - 1.0) * C(z);
    };

    ConformalFactorField F(
        DomainSpec::punctured_hemisphere(m),
        [val, m](const SpherePoint& x) { return val(x[m]); },
        [d1, m](const SpherePoint& x) { return (d1(x[m]) * zvec(m + 1)).eval(); },
        [d2, m](const SpherePoint& x) {
            return (d2(x[m]) * (zvec(m + 1) * zvec(m + 1).transpose())).eval();
        },
        2);

    CatalogEntry e{"punctured", std::move(params), std::move(F), {}, false, 0.05};
    e.expected.push_back({"sigma_k_zero", 0.0, 1e-6, k, {},
                          "degenerate sigma_k problem; residual checked pointwise"});
    e.expected.push_back({"h_equator", 0.0, 1e-10, 0, {}, "sigma even in z, normal derivative 0"});
    e.expected.push_back({"sigma_tail_zero", 0.0, 1e-6, 0, {}, "sigma decreases to 0 at the puncture"});
    return e;
}

CatalogEntry make_annulus(std::map<std::string, double> params) {
    const int m = get_int(params, "m", 3);
    const double r = get(params, "r", 0.3);
    ConformalFactorField F(
        DomainSpec::annulus(m, r),
        [m](const SpherePoint& x) { return annulus_sigma(x[m]); },
        [m](const SpherePoint& x) { return (annulus_dsigma(x[m]) * zvec(m + 1)).eval(); },
        [m](const SpherePoint& x) {
            return (annulus_d2sigma(x[m]) * (zvec(m + 1) * zvec(m + 1).transpose())).eval();
        },
        99);

    CatalogEntry e{"annulus", std::move(params), std::move(F), {}, true, 0.05};
    if (m >= 3) {
        e.expected.push_back({"R", (m - 1.0) * (m - 2.0), 1e-8, 0, {},
                              "product cylinder metric R x S^{m-1}"});
        Eigen::VectorXd spec(m);
        spec[0] = -0.5;
        for (int i = 1; i < m; ++i) spec[i] = 0.5;
        e.expected.push_back({"lambda_sorted", 0.0, 1e-8, 0, spec, "cylinder eigenvalues"});
    }
    if (m == 2)
        e.expected.push_back({"K", 0.0, 1e-10, 0, {}, "flat cylinder"});
    if (m % 2 == 0 && m >= 4)
        e.expected.push_back({"sigma_k_zero", 0.0, 1e-8, m / 2, {},
                              "degenerate sigma_{m/2} solution on the annulus"});
    e.expected.push_back({"h_equator", 0.0, 1e-10, 0, {}, "minimal boundary at the equator"});
    return e;
}

CatalogEntry make_rotational(std::map<std::string, double> params) {
    const int m = 2;
    const double c0 = 2.0 / (2.0 + std::sqrt(2.0));
    const double cut = std::cos(kPi / 4.0);
    auto val = [c0, cut](double z) { return c0 * (std::sqrt(1.0 - z * z) - cut); };
    ConformalFactorField F(
        DomainSpec::band(m, kPi / 4.0, BoundaryComponent::Tag::V2),
        [val, m](const SpherePoint& x) { return val(x[m]); },
        [c0, m](const SpherePoint& x) { return (c0 * annulus_dsigma(x[m]) * zvec(m + 1)).eval(); },
        [c0, m](const SpherePoint& x) {
            return (c0 * annulus_d2sigma(x[m]) * (zvec(m + 1) * zvec(m + 1).transpose())).eval();
        },
        99);
    // No curvature claims are pinned for this surface; it exists for the
    // properness and mesh checks.
    CatalogEntry e{"rotational_example", std::move(params), std::move(F), {}, false, 0.12};
    e.expected.push_back({"properness_divergent", 0.0, 0.0, 0, {},
                          "sigma -> 0 with bounded gradient at both edges"});
    return e;
}

}  // namespace

CatalogEntry catalog_field(const std::string& name, std::map<std::string, double> params) {
    if (name == "constant") return make_constant(std::move(params));
    if (name == "horosphere") return make_horosphere(std::move(params));
    if (name == "punctured") return make_punctured(std::move(params));
    if (name == "annulus") return make_annulus(std::move(params));
    if (name == "rotational_example") return make_rotational(std::move(params));
    throw CatalogError("unknown catalog field: " + name);
}

std::vector<std::string> catalog_names() {
    return {"constant", "horosphere", "punctured", "annulus", "rotational_example"};
}

}  // namespace horocave
