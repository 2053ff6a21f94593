#include "horocave/immersion.hpp"

#include <cmath>

namespace horocave {

namespace {
constexpr double kLambdaMargin = 1e-8;  // strict bound: max lambda <= 1/2 - margin

// Test hook for the verify harness: perturbs kappa_from_lambda so the
// identity suite must catch it. Never set outside run_verify.
double g_kappa_skew = 0.0;
}  // namespace

namespace detail {
void set_kappa_skew(double s) { g_kappa_skew = s; }
}  // namespace detail

double kappa_from_lambda(double lambda) {
    return (1.0 + 2.0 * lambda) / (1.0 - 2.0 * lambda) + g_kappa_skew;
}

double lambda_from_kappa(double kappa) { return 0.5 - 1.0 / (1.0 + kappa); }

void immersion_frame(const FieldJet& jet, const SpherePoint& x, MinkowskiVec& phi,
                     MinkowskiVec& eta, MinkowskiVec& psi) {
    if (!jet.rho_valid) throw FieldError("immersion: sigma <= 0 at this point");
    const double erho = std::exp(jet.rho);
    const double a = 0.5 * erho * (1.0 + std::exp(-2.0 * jet.rho) * (1.0 + jet.grad_rho_sq()));
    const Eigen::VectorXd grad_amb = jet.ambient_grad_rho();
    phi.x0 = a;
    phi.xs = a * x.coords() + (1.0 / erho) * (-x.coords() + grad_amb);
    psi.x0 = erho;
    psi.xs = erho * x.coords();
    eta = phi - psi;
}

namespace {

Eigen::VectorXd kappa_vector(const Eigen::VectorXd& lambda) {
    Eigen::VectorXd k(lambda.size());
    for (int i = 0; i < lambda.size(); ++i) k[i] = kappa_from_lambda(lambda[i]);
    return k;
}

void require_concave(const Eigen::VectorXd& lambda) {
    if (lambda.maxCoeff() > 0.5 - kLambdaMargin)
        throw HorosphericalConcavityViolated(
            "Schouten eigenvalue reaches 1/2: max lambda = " + std::to_string(lambda.maxCoeff()));
}

}  // namespace

Eigen::VectorXd poincare_formula(const FieldJet& jet, const SpherePoint& x) {
    const double s = jet.sigma;
    const Eigen::VectorXd gs = jet.frame * jet.grad_sigma;
    const double g2 = jet.grad_sigma_sq();
    const double den = (1.0 + s) * (1.0 + s) + g2;
    return ((1.0 - s * s + g2) / den) * x.coords() - (2.0 * s / den) * gs;
}

Eigen::VectorXd klein_formula(const FieldJet& jet, const SpherePoint& x) {
    const double s = jet.sigma;
    const Eigen::VectorXd gs = jet.frame * jet.grad_sigma;
    const double g2 = jet.grad_sigma_sq();
    const double den = 1.0 + s * s + g2;
    return ((1.0 - s * s + g2) / den) * x.coords() - (2.0 * s / den) * gs;
}

ImmersionSample immerse(const ConformalFactorField& F, const SpherePoint& x, Model model) {
    const FieldJet jet = F.jet(x);
    const SchoutenData sch = schouten_from_jet(jet);
    require_concave(sch.lambda);

    ImmersionSample s{x, {}, {}, {}, kappa_vector(sch.lambda), sch.lambda, std::nullopt};
    immersion_frame(jet, x, s.phi, s.eta, s.psi);
    if (model == Model::Poincare) s.model_coords = poincare_formula(jet, x);
    if (model == Model::Klein) s.model_coords = klein_formula(jet, x);
    return s;
}

ImmersionSample parallel_flow(const ConformalFactorField& F, double t, const SpherePoint& x,
                              Model model) {
    if (t < 0.0) throw RangeError("parallel_flow: flow time must be >= 0");
    const FieldJet jet = F.jet(x);
    const SchoutenData sch = schouten_from_jet(jet);
    const Eigen::VectorXd lambda_t = std::exp(-2.0 * t) * sch.lambda;
    require_concave(lambda_t);

    MinkowskiVec phi, eta, psi;
    immersion_frame(jet, x, phi, eta, psi);

    ImmersionSample s{x, {}, {}, {}, kappa_vector(lambda_t), lambda_t, std::nullopt};
    s.phi = std::cosh(t) * phi - std::sinh(t) * eta;
    s.psi = std::exp(t + jet.rho) * MinkowskiVec{1.0, x.coords()};
    s.eta = s.phi - s.psi;
    if (model != Model::Hyperboloid)
        s.model_coords = convert_model(HyperbolicPoint::hyperboloid(s.phi), model).ball();
    return s;
}

double properness_indicator(const ConformalFactorField& F, const SpherePoint& x) {
    const FieldJet jet = F.jet(x);
    if (!jet.rho_valid) throw FieldError("properness_indicator: sigma <= 0");
    return jet.rho * jet.rho + jet.grad_rho_sq();
}

bool IdentityReport::pass(double tol_klein, double tol_gauss, double tol_ff) const {
    return worst_klein <= tol_klein && worst_gauss <= tol_gauss && worst_first_form <= tol_ff;
}

IdentityReport verify_identities(const ConformalFactorField& F,
                                 const std::vector<SpherePoint>& samples) {
    IdentityReport rep;
    rep.rows.reserve(samples.size());
    const int m = F.sphere_dim();
    for (const auto& x : samples) {
        const FieldJet jet = F.jet(x);
        const SchoutenData sch = schouten_from_jet(jet);
        IdentityRow row{x, 0, 0, 0, sch.lambda.maxCoeff(), false};
        row.kappa_pole = row.max_lambda > 0.5 - kLambdaMargin;

        // (a) Euclidean norm of the Klein-model image.
        const Eigen::VectorXd pk = klein_formula(jet, x);
        const double den = 1.0 + jet.sigma * jet.sigma + jet.grad_sigma_sq();
        const double rhs = 1.0 - std::pow(2.0 * jet.sigma / den, 2);
        row.klein_norm_residual = std::abs(pk.squaredNorm() - rhs);

        // (b) The hyperbolic Gauss map of the representation formula is the
        // identity: psi is parallel to (1, x).
        MinkowskiVec phi, eta, psi;
        immersion_frame(jet, x, phi, eta, psi);
        row.gauss_map_residual = (psi.xs / psi.x0 - x.coords()).norm();

        // (c) First fundamental form of the light-cone map equals the
        // horospherical metric e^{2 rho} g0 (finite differences).
        const double h = kFdStep;
        std::vector<MinkowskiVec> dpsi(m);
        for (int i = 0; i < m; ++i) {
            const SpherePoint xp = exp_map(x, jet.frame.col(i), h);
            const SpherePoint xm = exp_map(x, jet.frame.col(i), -h);
            const double ep = 1.0 / F.sigma(xp);
            const double em = 1.0 / F.sigma(xm);
            const MinkowskiVec pp{ep, ep * xp.coords()};
            const MinkowskiVec pm{em, em * xm.coords()};
            dpsi[i] = (pp - pm) / (2.0 * h);
        }
        // Residual relative to the metric scale e^{2 rho}; the absolute
        // entries grow like e^{2 rho} near punctures, the relative error
        // does not.
        const double e2r = std::exp(2.0 * jet.rho);
        double worst = 0.0;
        for (int i = 0; i < m; ++i)
            for (int k = i; k < m; ++k) {
                const double want = (i == k) ? e2r : 0.0;
                worst = std::max(worst, std::abs(mink_inner(dpsi[i], dpsi[k]) - want));
            }
        row.first_form_residual = worst / e2r;

        rep.worst_klein = std::max(rep.worst_klein, row.klein_norm_residual);
        rep.worst_gauss = std::max(rep.worst_gauss, row.gauss_map_residual);
        rep.worst_first_form = std::max(rep.worst_first_form, row.first_form_residual);
        rep.any_kappa_pole = rep.any_kappa_pole || row.kappa_pole;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace horocave
