#include "horocave/minkowski.hpp"

#include <cmath>

namespace horocave {

namespace {
constexpr double kIdealCutoff = 1e8;
}

double mink_inner(const MinkowskiVec& u, const MinkowskiVec& v) {
    if (u.spatial_dim() != v.spatial_dim())
        throw DimensionError("mink_inner: spatial dimensions differ");
    return -u.x0 * v.x0 + u.xs.dot(v.xs);
}

const char* model_name(Model m) {
    switch (m) {
        case Model::Hyperboloid: return "hyperboloid";
        case Model::Poincare: return "poincare";
        case Model::Klein: return "klein";
    }
    return "?";
}

void require_on_hyperboloid(const MinkowskiVec& y, double tol) {
    const double q = mink_inner(y, y);
    // Tolerance scales with y0^2: the bilinear form cancels terms of that
    // size, so far points cannot satisfy an absolute bound in doubles.
    if (std::abs(q + 1.0) > tol * std::max(1.0, y.x0 * y.x0))
        throw ModelError("hyperboloid invariant violated: <<y,y>> = " + std::to_string(q));
    if (y.x0 <= 0.0)
        throw ModelError("hyperboloid invariant violated: y0 <= 0");
    if (y.x0 > kIdealCutoff)
        throw NearIdealError("point too close to the ideal boundary: y0 > 1e8");
}

HyperbolicPoint HyperbolicPoint::hyperboloid(MinkowskiVec y) {
    require_on_hyperboloid(y);
    HyperbolicPoint p;
    p.model_ = Model::Hyperboloid;
    p.y_ = std::move(y);
    return p;
}

HyperbolicPoint HyperbolicPoint::poincare(Eigen::VectorXd b) {
    if (b.norm() >= 1.0)
        throw ModelError("poincare coordinates must lie strictly inside the unit ball");
    HyperbolicPoint p;
    p.model_ = Model::Poincare;
    p.ball_ = std::move(b);
    return p;
}

HyperbolicPoint HyperbolicPoint::klein(Eigen::VectorXd b) {
    if (b.norm() >= 1.0)
        throw ModelError("klein coordinates must lie strictly inside the unit ball");
    HyperbolicPoint p;
    p.model_ = Model::Klein;
    p.ball_ = std::move(b);
    return p;
}

const MinkowskiVec& HyperbolicPoint::mink() const {
    if (model_ != Model::Hyperboloid)
        throw ModelError("point does not carry hyperboloid coordinates");
    return y_;
}

const Eigen::VectorXd& HyperbolicPoint::ball() const {
    if (model_ == Model::Hyperboloid)
        throw ModelError("point does not carry ball coordinates");
    return ball_;
}

namespace {

MinkowskiVec to_hyperboloid(const HyperbolicPoint& p) {
    switch (p.model()) {
        case Model::Hyperboloid:
            return p.mink();
        case Model::Poincare: {
            const Eigen::VectorXd& b = p.ball();
            const double n2 = b.squaredNorm();
            const double d = 1.0 - n2;
            return {(1.0 + n2) / d, (2.0 / d) * b};
        }
        case Model::Klein: {
            const Eigen::VectorXd& b = p.ball();
            const double y0 = 1.0 / std::sqrt(1.0 - b.squaredNorm());
            return {y0, y0 * b};
        }
    }
    throw ModelError("unknown model");
}

}  // namespace

HyperbolicPoint convert_model(const HyperbolicPoint& p, Model target) {
    if (p.model() == target) return p;
    MinkowskiVec y = to_hyperboloid(p);
    require_on_hyperboloid(y);
    switch (target) {
        case Model::Hyperboloid:
            return HyperbolicPoint::hyperboloid(std::move(y));
        case Model::Poincare:
            return HyperbolicPoint::poincare(y.xs / (1.0 + y.x0));
        case Model::Klein:
            return HyperbolicPoint::klein(y.xs / y.x0);
    }
    throw ModelError("unknown target model");
}

MinkowskiVec geodesic_point(const MinkowskiVec& p, const MinkowskiVec& v, double t) {
    constexpr double tol = 1e-8;
    if (std::abs(mink_inner(p, p) + 1.0) > tol)
        throw GeodesicError("geodesic base point is not on the hyperboloid");
    if (std::abs(mink_inner(v, v) - 1.0) > tol)
        throw GeodesicError("geodesic velocity is not a unit spacelike vector");
    if (std::abs(mink_inner(p, v)) > tol)
        throw GeodesicError("geodesic velocity is not tangent at the base point");
    return std::cosh(t) * p + std::sinh(t) * v;
}

double hyperbolic_distance(const MinkowskiVec& p, const MinkowskiVec& q) {
    const double c = -mink_inner(p, q);
    return std::acosh(std::max(1.0, c));
}

}  // namespace horocave
