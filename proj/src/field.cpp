#include "horocave/field.hpp"

#include <cmath>
#include <random>

namespace horocave {

namespace {

constexpr double kStencilSlack = 1e-6;

struct Dir2 {
    double d1;  // first derivative along the direction
    double d2;  // second derivative along the direction
};

// Directional derivatives of sigma along the geodesic through x with unit
// tangent w. Central second-order stencils; one-sided second-order stencils
// when an arm would leave the closure (or the evaluator fails there).
class StencilEngine {
  public:
    StencilEngine(const ConformalFactorField::Value& f, const DomainSpec& dom, bool gate)
        : f_(f), dom_(dom), gate_(gate) {}

    Dir2 along(const SpherePoint& x, const Eigen::VectorXd& w, double f0) const {
        const double h = kFdStep;
        double fp1 = 0.0, fm1 = 0.0;
        const bool plus = probe(x, w, h, fp1);
        const bool minus = probe(x, w, -h, fm1);
        if (plus && minus) {
            return {(fp1 - fm1) / (2 * h), (fp1 - 2 * f0 + fm1) / (h * h)};
        }
        if (plus) return one_sided(x, w, h, f0, fp1);
        if (minus) return one_sided(x, w, -h, f0, fm1);
        throw StencilError("finite-difference stencil leaves the domain on both sides");
    }

  private:
    Dir2 one_sided(const SpherePoint& x, const Eigen::VectorXd& w, double h, double f0,
                   double f1) const {
        double f2, f3;
        if (!probe(x, w, 2 * h, f2) || !probe(x, w, 3 * h, f3))
            throw StencilError("one-sided stencil leaves the domain");
        const double d1 = (-3 * f0 + 4 * f1 - f2) / (2 * h);
        const double d2 = (2 * f0 - 5 * f1 + 4 * f2 - f3) / (h * h);
        return {d1, d2};
    }

    bool probe(const SpherePoint& x, const Eigen::VectorXd& w, double t, double& out) const {
        const SpherePoint y = exp_map(x, w, t);
        if (gate_ && !dom_.in_closure(y, kStencilSlack)) return false;
        try {
            out = f_(y);
        } catch (const std::exception&) {
            return false;
        }
        return std::isfinite(out);
    }

    const ConformalFactorField::Value& f_;
    const DomainSpec& dom_;
    bool gate_;
};

void derive_rho_jet(FieldJet& j) {
    if (j.sigma <= 0.0) {
        j.rho_valid = false;
        j.rho = std::numeric_limits<double>::quiet_NaN();
        j.grad_rho = Eigen::VectorXd::Constant(j.grad_sigma.size(),
                                               std::numeric_limits<double>::quiet_NaN());
        j.hess_rho = Eigen::MatrixXd::Constant(j.hess_sigma.rows(), j.hess_sigma.cols(),
                                               std::numeric_limits<double>::quiet_NaN());
        return;
    }
    const double s = j.sigma;
    j.rho = -std::log(s);
    j.grad_rho = -j.grad_sigma / s;
    j.hess_rho = -j.hess_sigma / s + (j.grad_sigma * j.grad_sigma.transpose()) / (s * s);
    j.rho_valid = true;
}

}  // namespace

ConformalFactorField::ConformalFactorField(DomainSpec domain, Value sigma, int smoothness)
    : domain_(std::move(domain)), sigma_(std::move(sigma)), smoothness_(smoothness) {}

ConformalFactorField::ConformalFactorField(DomainSpec domain, Value sigma, AmbientGrad grad,
                                           AmbientHess hess, int smoothness, bool validate)
    : domain_(std::move(domain)),
      sigma_(std::move(sigma)),
      grad_(std::move(grad)),
      hess_(std::move(hess)),
      smoothness_(smoothness) {
    if (!validate) return;
    // Analytic derivatives must agree with finite differences away from the
    // boundary; a mismatch means the grad/hess evaluators do not belong to
    // the supplied sigma.
    const auto pts = sample_domain(domain_, 25, 0x5eedf1e1dULL, 0.05);
    for (const auto& x : pts) {
        const FieldJet a = assemble(x, true, true);
        const FieldJet f = assemble(x, false, true);
        const double gerr = (a.grad_sigma - f.grad_sigma).cwiseAbs().maxCoeff();
        const double herr = (a.hess_sigma - f.hess_sigma).cwiseAbs().maxCoeff();
        if (gerr > 1e-6 || herr > 1e-6)
            throw FieldError("analytic derivatives disagree with finite differences (grad err " +
                             std::to_string(gerr) + ", hess err " + std::to_string(herr) + ")");
    }
}

double ConformalFactorField::rho(const SpherePoint& x) const {
    const double s = sigma_(x);
    if (s <= 0.0) throw FieldError("rho undefined: sigma <= 0");
    return -std::log(s);
}

FieldJet ConformalFactorField::assemble(const SpherePoint& x, bool analytic, bool gate) const {
    const int m = sphere_dim();
    FieldJet j;
    j.frame = tangent_frame(x);
    j.sigma = sigma_(x);
    if (!std::isfinite(j.sigma)) throw StencilError("sigma evaluator returned a non-finite value");
    j.grad_sigma.resize(m);
    j.hess_sigma.resize(m, m);

    if (analytic) {
        const Eigen::VectorXd g = grad_(x);
        const Eigen::MatrixXd H0 = hess_(x);
        const Eigen::MatrixXd H = 0.5 * (H0 + H0.transpose());
        const double normal = x.coords().dot(g);  // curvature correction <x, grad>
        j.grad_sigma = j.frame.transpose() * g;
        j.hess_sigma = j.frame.transpose() * H * j.frame
                       - normal * Eigen::MatrixXd::Identity(m, m);
    } else {
        StencilEngine eng(sigma_, domain_, gate);
        for (int i = 0; i < m; ++i) {
            const Dir2 d = eng.along(x, j.frame.col(i), j.sigma);
            j.grad_sigma[i] = d.d1;
            j.hess_sigma(i, i) = d.d2;
        }
        // Off-diagonal entries by polarization of directional second
        // derivatives: Hess(u,v) = [q(u+v) - q(u-v)] / 4 with q(w) the second
        // derivative along w scaled by |w|^2.
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (int i = 0; i < m; ++i) {
            for (int k = i + 1; k < m; ++k) {
                const Eigen::VectorXd wp = (j.frame.col(i) + j.frame.col(k)) * inv_sqrt2;
                const Eigen::VectorXd wm = (j.frame.col(i) - j.frame.col(k)) * inv_sqrt2;
                const double qp = eng.along(x, wp, j.sigma).d2;
                const double qm = eng.along(x, wm, j.sigma).d2;
                const double hij = 0.5 * (qp - qm);
                j.hess_sigma(i, k) = hij;
                j.hess_sigma(k, i) = hij;
            }
        }
    }
    derive_rho_jet(j);
    return j;
}

FieldJet ConformalFactorField::jet(const SpherePoint& x) const {
    if (!domain_.contains(x) && !domain_.on_V1(x))
        throw DomainError("field_jet: point is outside the domain");
    return assemble(x, has_analytic_jets(), true);
}

FieldJet ConformalFactorField::jet_fd(const SpherePoint& x) const {
    if (!domain_.contains(x) && !domain_.on_V1(x))
        throw DomainError("field_jet: point is outside the domain");
    return assemble(x, false, true);
}

FieldJet ConformalFactorField::jet_extended(const SpherePoint& x) const {
    return assemble(x, has_analytic_jets(), false);
}

Eigen::VectorXd ConformalFactorField::ambient_grad(const SpherePoint& x) const {
    if (!grad_) throw FieldError("field has no analytic gradient evaluator");
    return grad_(x);
}

Eigen::MatrixXd ConformalFactorField::ambient_hess(const SpherePoint& x) const {
    if (!hess_) throw FieldError("field has no analytic Hessian evaluator");
    return hess_(x);
}

ConformalFactorField ConformalFactorField::without_analytic() const {
    return ConformalFactorField(domain_, sigma_, smoothness_);
}

ConformalFactorField ConformalFactorField::dilated(double t) const {
    const double a = std::exp(-t);
    Value s = [a, f = sigma_](const SpherePoint& x) { return a * f(x); };
    if (!has_analytic_jets()) return ConformalFactorField(domain_, std::move(s), smoothness_);
    AmbientGrad g = [a, f = grad_](const SpherePoint& x) { return (a * f(x)).eval(); };
    AmbientHess h = [a, f = hess_](const SpherePoint& x) { return (a * f(x)).eval(); };
    return ConformalFactorField(domain_, std::move(s), std::move(g), std::move(h), smoothness_,
                                /*validate=*/false);
}

Eigen::VectorXd equator_reflect(const Eigen::VectorXd& x) {
    Eigen::VectorXd y = x;
    y[y.size() - 1] = -y[y.size() - 1];
    return y;
}

namespace {

Eigen::MatrixXd reflect_hessian(const Eigen::MatrixXd& H) {
    Eigen::MatrixXd R = H;
    const int n = static_cast<int>(H.rows());
    for (int i = 0; i + 1 < n; ++i) {
        R(i, n - 1) = -R(i, n - 1);
        R(n - 1, i) = -R(n - 1, i);
    }
    return R;
}

}  // namespace

ConformalFactorField equatorial_double(const ConformalFactorField& F) {
    if (F.domain().doubled()) return F;
    if (!F.domain().boundary_has_equator())
        throw DomainError("equatorial_double: domain boundary does not contain the equator");
    const DomainSpec dom = F.domain().equatorial_double();
    const int m = F.sphere_dim();

    auto mirror = [](const SpherePoint& x) {
        return SpherePoint::normalized(equator_reflect(x.coords()));
    };

    ConformalFactorField::Value sv = [F, mirror](const SpherePoint& x) {
        return x[x.ambient_dim() - 1] >= 0.0 ? F.sigma(x) : F.sigma(mirror(x));
    };

    // The normal derivative of sigma along the equator decides regularity of
    // the double; vanishing derivative gives a C^1 (at least) field.
    double worst = 0.0;
    const auto eq = sample_boundary_sphere(north_pole(m), 1.5707963267948966, 20, 0xe9a70ULL);
    for (const auto& x : eq) {
        const FieldJet j = F.jet(x);
        worst = std::max(worst, std::abs(j.ambient_grad_sigma()[m]));
    }
    const int smooth = worst <= 1e-8 ? std::max(1, F.smoothness()) : 0;

    if (!F.has_analytic_jets())
        return ConformalFactorField(dom, std::move(sv), smooth);

    // The analytic jets of the double are the parent's ambient evaluators
    // composed with the reflection: grad(x) = R g(Rx), hess(x) = R H(Rx) R.
    ConformalFactorField parent = F;
    ConformalFactorField::AmbientGrad gv = [parent, mirror](const SpherePoint& x) -> Eigen::VectorXd {
        if (x[x.ambient_dim() - 1] >= 0.0) return parent.ambient_grad(x);
        return equator_reflect(parent.ambient_grad(mirror(x)));
    };
    ConformalFactorField::AmbientHess hv = [parent, mirror](const SpherePoint& x) -> Eigen::MatrixXd {
        if (x[x.ambient_dim() - 1] >= 0.0) return parent.ambient_hess(x);
        return reflect_hessian(parent.ambient_hess(mirror(x)));
    };
    return ConformalFactorField(dom, std::move(sv), std::move(gv), std::move(hv), smooth,
                                /*validate=*/false);
}

std::pair<double, double> equator_jump(const ConformalFactorField& doubled, const SpherePoint& x) {
    const int m = doubled.sphere_dim();
    if (std::abs(x[m]) > 1e-8)
        throw BoundaryError("equator_jump: point is not on the equator");
    // One-sided limits from the two hemispheres. The northern branch of a
    // doubled field is the parent; the southern branch is its reflection, so
    // the limits are the branch jets evaluated at x itself.
    const FieldJet north = doubled.jet_extended(x);
    const Eigen::VectorXd gn = north.ambient_grad_sigma();
    const Eigen::VectorXd gs = equator_reflect(gn);  // southern-branch limit
    SpherePoint xr = SpherePoint::normalized(equator_reflect(x.coords()));
    const double vjump = std::abs(doubled.sigma(x) - doubled.sigma(xr));
    const double gjump = (gn - gs).norm();  // = 2 |d sigma / d x_{m+1}|
    return {vjump, gjump};
}

// ---------------------------------------------------------------------------
// Sampling

std::vector<SpherePoint> sample_sphere(int m, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<SpherePoint> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        Eigen::VectorXd v(m + 1);
        for (int i = 0; i <= m; ++i) v[i] = gauss(rng);
        if (v.norm() < 1e-6) continue;
        out.push_back(SpherePoint::normalized(v));
    }
    return out;
}

std::vector<SpherePoint> sample_domain(const DomainSpec& d, int count, std::uint64_t seed,
                                       double margin) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<SpherePoint> out;
    out.reserve(count);
    const int m = d.sphere_dim();
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 100000 * count)
            throw DomainError("sample_domain: rejection sampling failed (domain too thin?)");
        Eigen::VectorXd v(m + 1);
        for (int i = 0; i <= m; ++i) v[i] = gauss(rng);
        if (v.norm() < 1e-6) continue;
        SpherePoint x = SpherePoint::normalized(v);
        if (!d.contains(x)) continue;
        if (margin > 0.0 && d.boundary_distance(x) < margin) continue;
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<SpherePoint> sample_boundary_sphere(const SpherePoint& center, double r, int count,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::VectorXd& p = center.coords();
    const int n = static_cast<int>(p.size());
    std::vector<SpherePoint> out;
    out.reserve(count);
    const bool right_angle = std::abs(r - 1.5707963267948966) < 1e-15;
    while (static_cast<int>(out.size()) < count) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = gauss(rng);
        v -= v.dot(p) * p;
        const double nv = v.norm();
        if (nv < 1e-6) continue;
        v /= nv;
        // Exact equator points when r = pi/2: cos(pi/2) is not exactly zero
        // in floating point, so the direct formula would leave the equator.
        Eigen::VectorXd x = right_angle ? v : (std::cos(r) * p + std::sin(r) * v).eval();
        out.push_back(SpherePoint::normalized(x));
    }
    return out;
}

}  // namespace horocave
