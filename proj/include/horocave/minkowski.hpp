#pragma once

#include <Eigen/Dense>

#include "horocave/errors.hpp"

namespace horocave {

/// Vector in Lorentz-Minkowski space: one timelike coordinate x0 and m+1
/// spacelike coordinates. The bilinear form is <<u,v>> = -u0*v0 + <us,vs>.
struct MinkowskiVec {
    double x0 = 0.0;
    Eigen::VectorXd xs;

    MinkowskiVec() = default;
    MinkowskiVec(double t, Eigen::VectorXd s) : x0(t), xs(std::move(s)) {}

    int spatial_dim() const { return static_cast<int>(xs.size()); }

    MinkowskiVec operator+(const MinkowskiVec& o) const { return {x0 + o.x0, xs + o.xs}; }
    MinkowskiVec operator-(const MinkowskiVec& o) const { return {x0 - o.x0, xs - o.xs}; }
    MinkowskiVec operator*(double a) const { return {x0 * a, xs * a}; }
    MinkowskiVec operator/(double a) const { return {x0 / a, xs / a}; }
};

inline MinkowskiVec operator*(double a, const MinkowskiVec& v) { return v * a; }

/// Lorentzian inner product -u0*v0 + sum(ui*vi). Symmetric and bilinear.
double mink_inner(const MinkowskiVec& u, const MinkowskiVec& v);

enum class Model { Hyperboloid, Poincare, Klein };

const char* model_name(Model m);

/// A point of hyperbolic (m+1)-space carried in one of three models.
/// Hyperboloid coordinates are a MinkowskiVec y with <<y,y>> = -1, y0 > 0;
/// Poincare and Klein coordinates are vectors of the open unit ball.
class HyperbolicPoint {
  public:
    static HyperbolicPoint hyperboloid(MinkowskiVec y);
    static HyperbolicPoint poincare(Eigen::VectorXd b);
    static HyperbolicPoint klein(Eigen::VectorXd b);

    Model model() const { return model_; }

    /// Hyperboloid coordinates (ModelError if this point carries another model).
    const MinkowskiVec& mink() const;
    /// Ball coordinates (ModelError if this point carries the hyperboloid model).
    const Eigen::VectorXd& ball() const;

  private:
    HyperbolicPoint() = default;
    Model model_ = Model::Hyperboloid;
    MinkowskiVec y_;
    Eigen::VectorXd ball_;
};

/// Change of model. Conversions go through the hyperboloid; a conversion
/// composed with its inverse is the identity to 1e-12.
HyperbolicPoint convert_model(const HyperbolicPoint& p, Model target);

/// Unit-speed geodesic cosh(t) p + sinh(t) v on the hyperboloid.
/// Requires <<p,p>> = -1, <<v,v>> = 1 and <<p,v>> = 0.
MinkowskiVec geodesic_point(const MinkowskiVec& p, const MinkowskiVec& v, double t);

/// arccosh(-<<p,q>>) for hyperboloid points.
double hyperbolic_distance(const MinkowskiVec& p, const MinkowskiVec& q);

/// Hyperboloid membership check used by the invariants: <<y,y>> = -1 within
/// tol and y0 > 0. Points with y0 > 1e8 are rejected as NearIdealError.
void require_on_hyperboloid(const MinkowskiVec& y, double tol = 1e-10);

}  // namespace horocave
