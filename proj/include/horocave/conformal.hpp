#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>

#include "horocave/field.hpp"

namespace horocave {

/// Schouten endomorphism of g = e^{2 rho} g0 at a point, in the orthonormal
/// frame of the field jet, together with its sorted eigenvalues.
struct SchoutenData {
    Eigen::MatrixXd endo;    // symmetric m x m
    Eigen::VectorXd lambda;  // ascending
};

/// Schouten endomorphism e^{-2 rho} [ (1/2 - |grad rho|^2 / 2) I
///   + grad rho (x) grad rho - Hess rho ] with eigenvalues sorted ascending.
SchoutenData schouten(const ConformalFactorField& F, const SpherePoint& x);
SchoutenData schouten_from_jet(const FieldJet& jet);

/// Scalar curvature R(g) = 2 (m-1) tr(Schouten endomorphism), m >= 3.
double scalar_curvature(const ConformalFactorField& F, const SpherePoint& x);

/// Gaussian curvature K = e^{-2 rho} (1 - Laplace rho) for m = 2.
double gauss_curvature_2d(const ConformalFactorField& F, const SpherePoint& x);

/// Mean curvature of the geodesic sphere d(.,p) = r in the metric g, with
/// respect to the rescaled inward normal e^{-rho} nu:
///   h(g) = d sigma / d nu + cot(r) sigma.
/// Cross-checked against the rho form e^rho h(g) + d rho / d nu = cot(r).
double boundary_mean_curvature(const ConformalFactorField& F, double r, const SpherePoint& p,
                               const SpherePoint& x);

/// Dilation g -> e^{2t} g. Schouten eigenvalues scale by e^{-2t} and the
/// boundary mean curvature by e^{-t}.
ConformalFactorField dilate(const ConformalFactorField& F, double t);

/// Positive C^2 function on a flat chart of R^m (value with optional
/// analytic derivatives; finite differences otherwise).
struct EuclideanField {
    int m = 0;
    std::function<double(const Eigen::VectorXd&)> value;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad;   // optional
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hess;  // optional
};

/// Schouten endomorphism of u^{4/(m-2)} g_euclidean expressed through u:
///   A^u = -2/(m-2) u^{-(m+2)/(m-2)} Hess u
///         + 2m/(m-2)^2 u^{-2m/(m-2)} grad u (x) grad u
///         - 2/(m-2)^2 u^{-2m/(m-2)} |grad u|^2 I.
/// Invariant under orthogonal conjugation; eigenvalues match the sphere-side
/// Schouten eigenvalues under stereographic transfer.
Eigen::MatrixXd euclidean_schouten_Au(const EuclideanField& u, const Eigen::VectorXd& y);

struct YamabeBoundary {
    double r;        // geodesic ball radius; h0 = cot(r)
    SpherePoint p;   // ball center
    double target_h; // prescribed boundary mean curvature
};

struct YamabeResidual {
    double interior;
    std::optional<double> boundary;
};

/// Residual of the conformal-scalar-curvature system for g = u^{4/(m-2)} g0
/// on the round sphere (R(g0) = m(m-1)):
///   interior: Lap u - c1 m(m-1) u + c1 targetR u^{(m+2)/(m-2)},
///             c1 = (m-2)/(4(m-1));
///   boundary: du/deta + (m-2)/2 h0 u - (m-2)/2 target_h u^{m/(m-2)},
///             eta the outward unit normal.
/// The positive field u is carried with the same jet machinery as sigma.
YamabeResidual yamabe_residual(const ConformalFactorField& u, const SpherePoint& x, double targetR,
                               const std::optional<YamabeBoundary>& boundary = std::nullopt);

/// The u-field of F: u = sigma^{-(m-2)/2}, with chained analytic jets when
/// F has them.
ConformalFactorField yamabe_u_field(const ConformalFactorField& F);

}  // namespace horocave
