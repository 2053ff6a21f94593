#pragma once

#include <Eigen/Dense>
#include <functional>

#include "horocave/sphere.hpp"

namespace horocave {

/// Jet of a conformal factor field at a point, expressed in the deterministic
/// orthonormal tangent frame of tangent_frame(). The sigma-jet is primitive;
/// the rho-jet is derived from it by the exact chain rule for rho = -log(sigma),
/// so the two are consistent by construction.
struct FieldJet {
    double sigma = 0.0;
    double rho = 0.0;
    Eigen::MatrixXd frame;       // (m+1) x m, columns are the frame vectors
    Eigen::VectorXd grad_sigma;  // frame components
    Eigen::MatrixXd hess_sigma;  // intrinsic Hessian, symmetric
    Eigen::VectorXd grad_rho;
    Eigen::MatrixXd hess_rho;
    bool rho_valid = true;  // false when sigma <= 0 (extension region)

    Eigen::VectorXd ambient_grad_sigma() const { return frame * grad_sigma; }
    Eigen::VectorXd ambient_grad_rho() const { return frame * grad_rho; }
    double grad_rho_sq() const { return grad_rho.squaredNorm(); }
    double grad_sigma_sq() const { return grad_sigma.squaredNorm(); }
    double laplace_rho() const { return hess_rho.trace(); }
};

/// Conformal factor sigma = e^{-rho} on a spherical domain. sigma is the
/// primitive datum; analytic derivatives, when supplied, are the gradient and
/// Hessian of an ambient extension of sigma (any smooth extension works, the
/// intrinsic jet formulas remove the normal components). Analytic derivatives
/// are validated against finite differences on a sample grid at construction.
class ConformalFactorField {
  public:
    using Value = std::function<double(const SpherePoint&)>;
    using AmbientGrad = std::function<Eigen::VectorXd(const SpherePoint&)>;
    using AmbientHess = std::function<Eigen::MatrixXd(const SpherePoint&)>;

    ConformalFactorField(DomainSpec domain, Value sigma, int smoothness = 2);
    ConformalFactorField(DomainSpec domain, Value sigma, AmbientGrad grad, AmbientHess hess,
                         int smoothness = 2, bool validate = true);

    const DomainSpec& domain() const { return domain_; }
    int sphere_dim() const { return domain_.sphere_dim(); }
    bool has_analytic_jets() const { return static_cast<bool>(grad_); }
    int smoothness() const { return smoothness_; }

    /// Raw evaluation; no domain gate (extensions are evaluated by the mesh
    /// exporter outside the domain when the formula permits).
    double sigma(const SpherePoint& x) const { return sigma_(x); }
    double rho(const SpherePoint& x) const;

    /// Full jet at x; x must lie in the open domain or on V1 (one-sided
    /// stencils are used there and wherever a stencil arm would leave the
    /// closure). Analytic derivatives are preferred when present.
    FieldJet jet(const SpherePoint& x) const;
    /// Jet forced through the finite-difference path.
    FieldJet jet_fd(const SpherePoint& x) const;
    /// Jet without any domain gating, for smooth extensions beyond the
    /// domain. The rho part is flagged invalid when sigma <= 0.
    FieldJet jet_extended(const SpherePoint& x) const;

    /// Raw ambient derivative evaluators (FieldError when not supplied).
    Eigen::VectorXd ambient_grad(const SpherePoint& x) const;
    Eigen::MatrixXd ambient_hess(const SpherePoint& x) const;

    /// Copy of this field with the analytic derivative evaluators dropped.
    ConformalFactorField without_analytic() const;
    /// Dilation g -> e^{2t} g at the field level: sigma_t = e^{-t} sigma.
    ConformalFactorField dilated(double t) const;

  private:
    FieldJet assemble(const SpherePoint& x, bool analytic, bool gate) const;
    DomainSpec domain_;
    Value sigma_;
    AmbientGrad grad_;
    AmbientHess hess_;
    int smoothness_;
};

/// Finite-difference step (radians) for the geodesic stencils.
inline constexpr double kFdStep = 1e-4;

/// Reflection across the equatorial hyperplane x_{m+1} = 0.
Eigen::VectorXd equator_reflect(const Eigen::VectorXd& x);

/// Field doubled by reflecting rho across the equator. The domain must have
/// the equator among its boundary components. Idempotent on doubled fields.
/// The doubled field reports smoothness >= 1 when the normal derivative of
/// sigma vanishes along the equator.
ConformalFactorField equatorial_double(const ConformalFactorField& F);

/// One-sided limits at an equator point taken from the two hemispheres of a
/// doubled field: (value jump, ambient gradient jump norm).
std::pair<double, double> equator_jump(const ConformalFactorField& doubled, const SpherePoint& x);

// Deterministic sampling helpers. All draws use the given seed; identical
// inputs give identical point sets.
std::vector<SpherePoint> sample_sphere(int m, int count, std::uint64_t seed);
std::vector<SpherePoint> sample_domain(const DomainSpec& d, int count, std::uint64_t seed,
                                       double margin = 0.0);
std::vector<SpherePoint> sample_boundary_sphere(const SpherePoint& center, double r, int count,
                                                std::uint64_t seed);

}  // namespace horocave
