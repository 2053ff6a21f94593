#include "horocave/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace horocave {

double sigma_k(const Eigen::VectorXd& lambda, int k) {
    const int m = static_cast<int>(lambda.size());
    if (k < 1 || k > m) throw RangeError("sigma_k: k must lie in [1, m]");
    std::vector<double> e(k + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < m; ++i) {
        for (int j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * lambda[i];
    }
    return e[k];
}

namespace {

Eigen::VectorXd sorted(const Eigen::VectorXd& v) {
    Eigen::VectorXd s = v;
    std::sort(s.data(), s.data() + s.size());
    return s;
}

}  // namespace

std::string ConeSpec::name() const {
    switch (kind) {
        case ConeKind::Gamma1: return "Gamma_1";
        case ConeKind::GammaM: return "Gamma_m";
        case ConeKind::Garding: return "Garding(" + std::to_string(k) + ")";
    }
    return "?";
}

bool cone_contains(const ConeSpec& cone, const Eigen::VectorXd& lambda) {
    switch (cone.kind) {
        case ConeKind::Gamma1:
            return lambda.sum() > 0.0;
        case ConeKind::GammaM:
            return lambda.minCoeff() > 0.0;
        case ConeKind::Garding:
            for (int j = 1; j <= cone.k; ++j)
                if (!(sigma_k(lambda, j) > 0.0)) return false;
            return true;
    }
    return false;
}

bool cone_contains_closure(const ConeSpec& cone, const Eigen::VectorXd& lambda, double tol) {
    switch (cone.kind) {
        case ConeKind::Gamma1:
            return lambda.sum() > -tol;
        case ConeKind::GammaM:
            return lambda.minCoeff() > -tol;
        case ConeKind::Garding:
            for (int j = 1; j <= cone.k; ++j)
                if (!(sigma_k(lambda, j) > -tol)) return false;
            return true;
    }
    return false;
}

Eigen::VectorXd EllipticData::gradient(const Eigen::VectorXd& lambda) const {
    if (grad) return grad(lambda);
    const double h = 1e-6;
    Eigen::VectorXd g(lambda.size());
    for (int i = 0; i < lambda.size(); ++i) {
        Eigen::VectorXd lp = lambda, lm = lambda;
        lp[i] += h;
        lm[i] -= h;
        g[i] = (f(lp) - f(lm)) / (2 * h);
    }
    return g;
}

EllipticData sigma1_data(int m, double target) {
    EllipticData d;
    d.name = "sigma_1";
    d.f = [](const Eigen::VectorXd& l) { return sorted(l).sum(); };
    d.grad = [](const Eigen::VectorXd& l) { return Eigen::VectorXd::Ones(l.size()).eval(); };
    d.cone = ConeSpec::gamma1(m);
    d.target = target;
    return d;
}

EllipticData sigma_k_root_data(int k, int m, double target) {
    if (k < 1 || k > m) throw RangeError("sigma_k_root_data: k must lie in [1, m]");
    EllipticData d;
    d.name = "sigma_" + std::to_string(k) + "^{1/" + std::to_string(k) + "}";
    d.f = [k](const Eigen::VectorXd& l) {
        const double s = sigma_k(sorted(l), k);
        return s <= 0.0 ? 0.0 : std::pow(s, 1.0 / k);
    };
    // dsigma_k/dlambda_i = sigma_{k-1}(lambda with entry i removed).
    d.grad = [k](const Eigen::VectorXd& l) -> Eigen::VectorXd {
        const Eigen::VectorXd ls = l;
        const int n = static_cast<int>(l.size());
        const double s = sigma_k(sorted(ls), k);
        Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
        if (s <= 0.0) return g;
        const double outer = (1.0 / k) * std::pow(s, 1.0 / k - 1.0);
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd rest(n - 1);
            int t = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) rest[t++] = ls[j];
            const double sk1 = (k == 1) ? 1.0 : sigma_k(sorted(rest), k - 1);
            g[i] = outer * sk1;
        }
        return g;
    };
    d.cone = ConeSpec::garding(k, m);
    d.target = target;
    return d;
}

EllipticData raw_sigma_k_data(int k, int m, double target) {
    if (k < 1 || k > m) throw RangeError("raw_sigma_k_data: k must lie in [1, m]");
    EllipticData d;
    d.name = "sigma_" + std::to_string(k);
    d.f = [k](const Eigen::VectorXd& l) { return sigma_k(sorted(l), k); };
    d.cone = ConeSpec::garding(k, m);
    d.target = target;
    return d;
}

bool AxiomReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const AxiomCheck& AxiomReport::operator[](const std::string& axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return c;
    throw RangeError("no axiom check named " + axiom);
}

namespace {

// Interior samples of the cone: positive vectors (always inside, by C3) mixed
// with generic accepted draws to probe the cone away from Gamma_m.
std::vector<Eigen::VectorXd> cone_samples(const ConeSpec& cone, int count, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Eigen::VectorXd> out;
    out.reserve(count);
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard < 100000 * count) {
        ++guard;
        Eigen::VectorXd l(cone.m);
        if (out.size() % 2 == 0) {
            for (int i = 0; i < cone.m; ++i) l[i] = std::abs(gauss(rng)) + 0.1;
        } else {
            for (int i = 0; i < cone.m; ++i) l[i] = gauss(rng) + 0.4;
        }
        if (cone_contains(cone, l)) out.push_back(std::move(l));
    }
    return out;
}

// A point of the cone boundary obtained by sliding from an interior sample
// toward an exterior point and bisecting the membership predicate.
Eigen::VectorXd boundary_point(const ConeSpec& cone, const Eigen::VectorXd& inside) {
    Eigen::VectorXd outside = inside;
    outside[0] -= 10.0 * (1.0 + inside.cwiseAbs().maxCoeff());
    double lo = 0.0, hi = 1.0;  // inside at 0, outside at 1
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (cone_contains(cone, inside + mid * (outside - inside)))
            lo = mid;
        else
            hi = mid;
    }
    return inside + 0.5 * (lo + hi) * (outside - inside);
}

}  // namespace

AxiomReport check_axioms(const EllipticData& data, int sample_count, std::uint64_t seed) {
    if (sample_count < 100) throw RangeError("check_axioms: sample_count must be >= 100");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto samples = cone_samples(data.cone, sample_count, rng);

    AxiomCheck symmetry{"symmetry", true, 0.0, {}};
    AxiomCheck homogeneity{"homogeneity", true, 0.0, {}};
    AxiomCheck positivity{"positivity", true, 0.0, {}};
    AxiomCheck boundary{"boundary_decay", true, 0.0, {}};
    AxiomCheck gradient{"gradient_in_Gamma_m", true, 0.0, {}};

    double fscale = 0.0;
    for (const auto& l : samples) fscale = std::max(fscale, std::abs(data.eval(l)));
    fscale = std::max(fscale, 1e-12);

    for (const auto& l : samples) {
        const double fl = data.eval(l);

        Eigen::VectorXd p = l;
        std::shuffle(p.data(), p.data() + p.size(), rng);
        const double dsym = std::abs(fl - data.eval(p));
        if (dsym > symmetry.worst) symmetry.worst = dsym, symmetry.worst_witness = l;
        if (dsym > 1e-12) symmetry.pass = false;

        const double s = 10.0 * std::max(unif(rng), 1e-3);
        const double dhom = std::abs(data.eval(s * l) - s * fl);
        if (dhom > homogeneity.worst) homogeneity.worst = dhom, homogeneity.worst_witness = l;
        if (dhom > 1e-10) homogeneity.pass = false;

        if (!(fl > 0.0)) {
            positivity.pass = false;
            positivity.worst = std::min(positivity.worst, fl);
            positivity.worst_witness = l;
        }

        const Eigen::VectorXd g = data.gradient(l);
        const double gmin = g.minCoeff();
        if (gmin < gradient.worst) gradient.worst = gmin, gradient.worst_witness = l;
        if (gmin < -1e-10) gradient.pass = false;
    }

    const int nb = std::max(10, sample_count / 10);
    for (int i = 0; i < nb; ++i) {
        const Eigen::VectorXd b = boundary_point(data.cone, samples[i]);
        const double fb = std::abs(data.eval(b));
        if (fb > boundary.worst) boundary.worst = fb, boundary.worst_witness = b;
        if (fb > 1e-6 * fscale) boundary.pass = false;
    }

    AxiomReport rep;
    rep.checks = {symmetry, homogeneity, positivity, boundary, gradient};
    return rep;
}

double problem_residual(const ConformalFactorField& F, const EllipticData& data,
                        const SpherePoint& x) {
    const Eigen::VectorXd lambda = schouten(F, x).lambda;
    const double tol = 1e-6 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
    if (!cone_contains_closure(data.cone, lambda, tol))
        throw ConeViolation("problem_residual: Schouten eigenvalues left the closed cone " +
                            data.cone.name());
    return data.eval(lambda) - data.target;
}

EllipticData dilated_data(const EllipticData& data, double t0) {
    EllipticData d = data;
    const double a = std::exp(2.0 * t0);
    d.name = data.name + "@t0=" + std::to_string(t0);
    d.f = [a, f = data.f](const Eigen::VectorXd& l) { return f(a * l); };
    if (data.grad)
        d.grad = [a, g = data.grad](const Eigen::VectorXd& l) { return (a * g(a * l)).eval(); };
    else
        d.grad = nullptr;
    return d;
}

}  // namespace horocave
