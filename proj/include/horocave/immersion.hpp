#pragma once

#include <optional>
#include <vector>

#include "horocave/conformal.hpp"
#include "horocave/minkowski.hpp"

namespace horocave {

/// One evaluated point of the horospherically concave immersion built from a
/// conformal factor field: position phi on the hyperboloid, canonical unit
/// normal eta, light-cone map psi = phi - eta = e^rho (1, x), principal
/// curvatures kappa_i = (1 + 2 lambda_i)/(1 - 2 lambda_i), and the Schouten
/// eigenvalues lambda_i. Both spectra are sorted ascending.
struct ImmersionSample {
    SpherePoint x;
    MinkowskiVec phi;
    MinkowskiVec eta;
    MinkowskiVec psi;
    Eigen::VectorXd kappa;
    Eigen::VectorXd lambda;
    std::optional<Eigen::VectorXd> model_coords;  // ball coordinates when requested
};

/// kappa = (1 + 2 lambda)/(1 - 2 lambda) and its inverse
/// lambda = 1/2 - 1/(1 + kappa). Strictly increasing on lambda < 1/2.
double kappa_from_lambda(double lambda);
double lambda_from_kappa(double kappa);

namespace detail {
/// Fault-injection hook for the verify harness: adds a constant skew to
/// kappa_from_lambda so the identity suite must report a failure.
void set_kappa_skew(double s);
}  // namespace detail

/// Representation formula
///   phi = e^rho / 2 (1 + e^{-2 rho}(1 + |grad rho|^2)) (1, x)
///         + e^{-rho} (0, -x + grad rho),
/// with eta = phi - e^rho (1, x). Requires every Schouten eigenvalue below
/// 1/2 - 1e-8 (HorosphericalConcavityViolated otherwise). When a ball model
/// is requested, the model coordinates are computed from the model's own
/// representation formula, not by converting phi.
ImmersionSample immerse(const ConformalFactorField& F, const SpherePoint& x,
                        Model model = Model::Hyperboloid);

/// phi and eta alone, with no curvature gate. Used by the parallel flow,
/// whose own precondition is on the dilated eigenvalues.
void immersion_frame(const FieldJet& jet, const SpherePoint& x, MinkowskiVec& phi,
                     MinkowskiVec& eta, MinkowskiVec& psi);

/// Ball-model representation formulas evaluated directly from the sigma-jet.
Eigen::VectorXd poincare_formula(const FieldJet& jet, const SpherePoint& x);
Eigen::VectorXd klein_formula(const FieldJet& jet, const SpherePoint& x);

/// Geodesic flow along -eta: phi_t = cosh(t) phi - sinh(t) eta, with natural
/// orientation eta_t = phi_t - e^{t + rho} (1, x) and eigenvalues
/// e^{-2t} lambda_i. Pointwise equal to immerse(dilate(F, t), x).
ImmersionSample parallel_flow(const ConformalFactorField& F, double t, const SpherePoint& x,
                              Model model = Model::Hyperboloid);

/// rho^2 + |grad rho|^2; diverges at the boundary exactly when the immersion
/// is proper.
double properness_indicator(const ConformalFactorField& F, const SpherePoint& x);

struct IdentityRow {
    SpherePoint x;
    double klein_norm_residual;   // | |phi_K|^2 - (1 - (2 sigma / D)^2) |
    double gauss_map_residual;    // | spatial(psi)/psi_0 - x |
    double first_form_residual;   // max_ij | <<dpsi_i,dpsi_j>> - e^{2 rho} delta_ij | / e^{2 rho}
    double max_lambda;
    bool kappa_pole;              // max lambda within 1e-8 of 1/2
};

struct IdentityReport {
    std::vector<IdentityRow> rows;
    double worst_klein = 0.0;
    double worst_gauss = 0.0;
    double worst_first_form = 0.0;
    bool any_kappa_pole = false;
    bool pass(double tol_klein = 1e-12, double tol_gauss = 1e-10,
              double tol_ff = 1e-5) const;
};

/// Per-sample verification of the structural identities of the immersion:
/// Klein-norm identity, Gauss map recovery, and the light-cone first
/// fundamental form <<d psi, d psi>> = e^{2 rho} g0 (finite differences).
IdentityReport verify_identities(const ConformalFactorField& F,
                                 const std::vector<SpherePoint>& samples);

}  // namespace horocave
