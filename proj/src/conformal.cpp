#include "horocave/conformal.hpp"

#include <cmath>

namespace horocave {

SchoutenData schouten_from_jet(const FieldJet& jet) {
    if (!jet.rho_valid) throw FieldError("schouten: sigma <= 0 at this point");
    const int m = static_cast<int>(jet.grad_rho.size());
    const double e2 = std::exp(-2.0 * jet.rho);
    Eigen::MatrixXd endo =
        (0.5 - 0.5 * jet.grad_rho_sq()) * Eigen::MatrixXd::Identity(m, m)
        + jet.grad_rho * jet.grad_rho.transpose() - jet.hess_rho;
    endo *= e2;
    endo = 0.5 * (endo + endo.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(endo);
    return {std::move(endo), es.eigenvalues()};
}

SchoutenData schouten(const ConformalFactorField& F, const SpherePoint& x) {
    return schouten_from_jet(F.jet(x));
}

double scalar_curvature(const ConformalFactorField& F, const SpherePoint& x) {
    const int m = F.sphere_dim();
    if (m < 3)
        throw DimensionError("scalar_curvature needs m >= 3 (use gauss_curvature_2d for m = 2)");
    return 2.0 * (m - 1) * schouten(F, x).endo.trace();
}

double gauss_curvature_2d(const ConformalFactorField& F, const SpherePoint& x) {
    if (F.sphere_dim() != 2) throw DimensionError("gauss_curvature_2d needs m = 2");
    const FieldJet j = F.jet(x);
    if (!j.rho_valid) throw FieldError("gauss_curvature_2d: sigma <= 0");
    return std::exp(-2.0 * j.rho) * (1.0 - j.laplace_rho());
}

double boundary_mean_curvature(const ConformalFactorField& F, double r, const SpherePoint& p,
                               const SpherePoint& x) {
    const Eigen::VectorXd nu = ball_inward_normal(r, p, x);  // BoundaryError off the sphere
    const FieldJet j = F.jet(x);
    const double h0 = 1.0 / std::tan(r);
    const double dsig = nu.dot(j.ambient_grad_sigma());
    const double h = dsig + h0 * j.sigma;
    // Same condition in the rho variable; the two forms must agree.
    const double drho = nu.dot(j.ambient_grad_rho());
    if (std::abs(std::exp(j.rho) * h + drho - h0) > 1e-9)
        throw Error("boundary_mean_curvature: sigma-form and rho-form disagree");
    return h;
}

ConformalFactorField dilate(const ConformalFactorField& F, double t) { return F.dilated(t); }

Eigen::MatrixXd euclidean_schouten_Au(const EuclideanField& u, const Eigen::VectorXd& y) {
    const int m = u.m;
    if (m < 3) throw DimensionError("euclidean_schouten_Au needs m >= 3");
    const double uy = u.value(y);
    if (!(uy > 0.0)) throw FieldError("euclidean_schouten_Au: u <= 0 at the chart point");

    Eigen::VectorXd g;
    Eigen::MatrixXd H;
    if (u.grad && u.hess) {
        g = u.grad(y);
        H = u.hess(y);
    } else {
        const double h = 1e-5;
        g.resize(m);
        H.resize(m, m);
        for (int i = 0; i < m; ++i) {
            Eigen::VectorXd yp = y, ym = y;
            yp[i] += h;
            ym[i] -= h;
            g[i] = (u.value(yp) - u.value(ym)) / (2 * h);
            H(i, i) = (u.value(yp) - 2 * uy + u.value(ym)) / (h * h);
        }
        for (int i = 0; i < m; ++i)
            for (int k = i + 1; k < m; ++k) {
                Eigen::VectorXd a = y, b = y, c = y, d = y;
                a[i] += h; a[k] += h;
                b[i] += h; b[k] -= h;
                c[i] -= h; c[k] += h;
                d[i] -= h; d[k] -= h;
                const double v =
                    (u.value(a) - u.value(b) - u.value(c) + u.value(d)) / (4 * h * h);
                H(i, k) = v;
                H(k, i) = v;
            }
    }

    const double q = static_cast<double>(m - 2);
    const double p1 = std::pow(uy, -(m + 2.0) / q);
    const double p2 = std::pow(uy, -2.0 * m / q);
    return (-2.0 / q) * p1 * H + (2.0 * m / (q * q)) * p2 * (g * g.transpose())
           - (2.0 / (q * q)) * p2 * g.squaredNorm() * Eigen::MatrixXd::Identity(m, m);
}

YamabeResidual yamabe_residual(const ConformalFactorField& u, const SpherePoint& x, double targetR,
                               const std::optional<YamabeBoundary>& boundary) {
    const int m = u.sphere_dim();
    if (m < 3) throw DimensionError("yamabe_residual needs m >= 3");
    const FieldJet j = u.jet(x);
    if (!(j.sigma > 0.0)) throw FieldError("yamabe_residual: u <= 0");
    const double c1 = (m - 2.0) / (4.0 * (m - 1.0));
    const double lap = j.hess_sigma.trace();
    YamabeResidual res;
    res.interior = lap - c1 * m * (m - 1.0) * j.sigma
                   + c1 * targetR * std::pow(j.sigma, (m + 2.0) / (m - 2.0));
    if (boundary) {
        const Eigen::VectorXd nu = ball_inward_normal(boundary->r, boundary->p, x);
        const double h0 = 1.0 / std::tan(boundary->r);
        const double du_deta = -nu.dot(j.ambient_grad_sigma());  // outward normal
        res.boundary = du_deta + 0.5 * (m - 2.0) * h0 * j.sigma
                       - 0.5 * (m - 2.0) * boundary->target_h
                             * std::pow(j.sigma, m / (m - 2.0));
    }
    return res;
}

ConformalFactorField yamabe_u_field(const ConformalFactorField& F) {
    const int m = F.sphere_dim();
    if (m < 3) throw DimensionError("yamabe_u_field needs m >= 3");
    const double a = -(m - 2.0) / 2.0;  // u = sigma^a
    ConformalFactorField::Value val = [F, a](const SpherePoint& x) {
        return std::pow(F.sigma(x), a);
    };
    if (!F.has_analytic_jets())
        return ConformalFactorField(F.domain(), std::move(val), F.smoothness());
    ConformalFactorField::AmbientGrad gv = [F, a](const SpherePoint& x) -> Eigen::VectorXd {
        const double s = F.sigma(x);
        return a * std::pow(s, a - 1.0) * F.ambient_grad(x);
    };
    ConformalFactorField::AmbientHess hv = [F, a](const SpherePoint& x) -> Eigen::MatrixXd {
        const double s = F.sigma(x);
        const Eigen::VectorXd g = F.ambient_grad(x);
        return a * (a - 1.0) * std::pow(s, a - 2.0) * (g * g.transpose())
               + a * std::pow(s, a - 1.0) * F.ambient_hess(x);
    };
    return ConformalFactorField(F.domain(), std::move(val), std::move(gv), std::move(hv),
                                F.smoothness(), /*validate=*/false);
}

}  // namespace horocave
