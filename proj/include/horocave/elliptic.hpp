#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "horocave/conformal.hpp"

namespace horocave {

/// k-th elementary symmetric polynomial of the entries of lambda, computed by
/// the stable one-pass recurrence e_j += e_{j-1} * lambda_i.
double sigma_k(const Eigen::VectorXd& lambda, int k);

enum class ConeKind { Gamma1, GammaM, Garding };

/// Cone descriptor: Gamma_1 = {sum > 0}, Gamma_m = {all > 0}, Garding(k) =
/// {sigma_j > 0 for all j <= k}. All satisfy Gamma_m within Gamma within
/// Gamma_1.
struct ConeSpec {
    ConeKind kind = ConeKind::Gamma1;
    int k = 1;  // Garding chamber index
    int m = 3;

    static ConeSpec gamma1(int m) { return {ConeKind::Gamma1, 1, m}; }
    static ConeSpec gamma_m(int m) { return {ConeKind::GammaM, 1, m}; }
    static ConeSpec garding(int k, int m) { return {ConeKind::Garding, k, m}; }
    std::string name() const;
};

bool cone_contains(const ConeSpec& cone, const Eigen::VectorXd& lambda);
/// Membership in the closed cone up to tol on the defining inequalities.
bool cone_contains_closure(const ConeSpec& cone, const Eigen::VectorXd& lambda, double tol = 1e-8);

/// Elliptic data (f, Gamma): symmetric degree-1-homogeneous functional,
/// positive on the cone, vanishing on its boundary, with gradient in
/// Gamma_m. target is 0 (degenerate) or 1 (non-degenerate).
struct EllipticData {
    std::string name;
    std::function<double(const Eigen::VectorXd&)> f;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad;  // optional
    ConeSpec cone;
    double target = 1.0;

    double eval(const Eigen::VectorXd& lambda) const { return f(lambda); }
    /// Analytic gradient when supplied, else central differences (h = 1e-6).
    Eigen::VectorXd gradient(const Eigen::VectorXd& lambda) const;
};

/// f = sigma_1 on Gamma_1.
EllipticData sigma1_data(int m, double target);
/// f = sigma_k^{1/k} on the Garding chamber; evaluates to 0 when sigma_k <= 0
/// so the boundary extension f|_{dGamma} = 0 holds by construction.
EllipticData sigma_k_root_data(int k, int m, double target);
/// Raw (un-normalized, degree-k) sigma_k; fails the homogeneity axiom for
/// k >= 2 by construction. Useful as a negative control.
EllipticData raw_sigma_k_data(int k, int m, double target);

struct AxiomCheck {
    std::string axiom;
    bool pass = false;
    double worst = 0.0;            // worst violation magnitude
    Eigen::VectorXd worst_witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
    const AxiomCheck& operator[](const std::string& axiom) const;
};

/// Sample-based verification of the elliptic-data axioms: symmetry,
/// positivity, homogeneity of degree 1, boundary decay, gradient in Gamma_m.
AxiomReport check_axioms(const EllipticData& data, int sample_count = 200,
                         std::uint64_t seed = 0xe771deULL);

/// f(lambda(g)(x)) - target. ConeViolation when the eigenvalues leave the
/// closed cone.
double problem_residual(const ConformalFactorField& F, const EllipticData& data,
                        const SpherePoint& x);

/// Transported data f_{t0}(x) = f(e^{2 t0} x) on the same cone; dilation of a
/// solution solves the transported problem.
EllipticData dilated_data(const EllipticData& data, double t0);

}  // namespace horocave
