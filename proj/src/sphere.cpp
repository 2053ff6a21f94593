#include "horocave/sphere.hpp"

#include <cmath>

namespace horocave {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kUnitTol = 1e-12;
constexpr double kTangentTol = 1e-8;
}  // namespace

SpherePoint::SpherePoint(Eigen::VectorXd x) : x_(std::move(x)) {
    if (x_.size() < 3)
        throw DimensionError("sphere points need ambient dimension >= 3");
    if (std::abs(x_.norm() - 1.0) > kUnitTol)
        throw DomainError("sphere point is not a unit vector");
}

SpherePoint SpherePoint::normalized(Eigen::VectorXd x) {
    const double n = x.norm();
    if (n == 0.0) throw DomainError("cannot normalize the zero vector");
    return SpherePoint(x / n);
}

SpherePoint north_pole(int m) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m + 1);
    x[m] = 1.0;
    return SpherePoint(std::move(x));
}

SpherePoint south_pole(int m) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m + 1);
    x[m] = -1.0;
    return SpherePoint(std::move(x));
}

SpherePoint exp_map(const SpherePoint& x, const Eigen::VectorXd& v, double t) {
    if (v.size() != x.coords().size())
        throw TangentError("exp_map: velocity dimension mismatch");
    if (std::abs(v.norm() - 1.0) > kTangentTol)
        throw TangentError("exp_map: velocity is not a unit vector");
    if (std::abs(v.dot(x.coords())) > kTangentTol)
        throw TangentError("exp_map: velocity is not tangent at x");
    return SpherePoint::normalized(std::cos(t) * x.coords() + std::sin(t) * v);
}

double sphere_distance(const SpherePoint& x, const SpherePoint& y) {
    const double c = x.coords().dot(y.coords());
    return std::acos(std::clamp(c, -1.0, 1.0));
}

Eigen::VectorXd ball_inward_normal(double r, const SpherePoint& p, const SpherePoint& x) {
    if (r <= 0.0 || r >= kPi)
        throw RangeError("ball_inward_normal: radius must lie in (0, pi)");
    if (std::abs(sphere_distance(x, p) - r) > 1e-8)
        throw BoundaryError("ball_inward_normal: x is not on the boundary sphere");
    return (1.0 / std::sin(r)) * p.coords() - (1.0 / std::tan(r)) * x.coords();
}

Eigen::MatrixXd tangent_frame(const SpherePoint& x) {
    const Eigen::VectorXd& xc = x.coords();
    const int n = static_cast<int>(xc.size());
    int drop = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(xc[i]) > std::abs(xc[drop])) drop = i;

    Eigen::MatrixXd frame(n, n - 1);
    int col = 0;
    for (int j = 0; j < n; ++j) {
        if (j == drop) continue;
        Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
        w[j] = 1.0;
        w -= w.dot(xc) * xc;
        for (int l = 0; l < col; ++l) w -= w.dot(frame.col(l)) * frame.col(l);
        frame.col(col++) = w / w.norm();
    }
    return frame;
}

// ---------------------------------------------------------------------------
// DomainSpec

namespace {

BoundaryComponent sphere_component(const SpherePoint& p, double r, BoundaryComponent::Tag tag) {
    return BoundaryComponent(false, p, r, tag);
}

BoundaryComponent point_component(const SpherePoint& p, BoundaryComponent::Tag tag) {
    return BoundaryComponent(true, p, 0.0, tag);
}

double polar_angle(const DomainSpec& d, const SpherePoint& x) {
    return sphere_distance(north_pole(d.sphere_dim()), x);
}

}  // namespace

DomainSpec DomainSpec::full_sphere(int m) { return DomainSpec(DomainKind::FullSphere, m); }

DomainSpec DomainSpec::hemisphere(int m) {
    DomainSpec d(DomainKind::Hemisphere, m);
    d.v1_.push_back(sphere_component(north_pole(m), kPi / 2, BoundaryComponent::Tag::V1));
    return d;
}

DomainSpec DomainSpec::geodesic_ball(const SpherePoint& p, double r) {
    if (!(r > 0.0 && r < kPi / 2))
        throw RangeError("geodesic_ball: radius must lie in (0, pi/2)");
    DomainSpec d(DomainKind::GeodesicBall, p.sphere_dim());
    d.p_ = p;
    d.r_ = r;
    d.v1_.push_back(sphere_component(p, r, BoundaryComponent::Tag::V1));
    return d;
}

DomainSpec DomainSpec::annulus(int m, double r) {
    if (!(r > 0.0 && r < kPi / 2))
        throw RangeError("annulus: radius must lie in (0, pi/2)");
    DomainSpec d(DomainKind::Annulus, m);
    d.r_ = r;
    d.v1_.push_back(sphere_component(north_pole(m), kPi / 2, BoundaryComponent::Tag::V1));
    d.v1_.push_back(sphere_component(south_pole(m), kPi - r, BoundaryComponent::Tag::V1));
    return d;
}

DomainSpec DomainSpec::annulus_half_open(int m, double r) {
    if (!(r > 0.0 && r < kPi / 2))
        throw RangeError("annulus_half_open: radius must lie in (0, pi/2)");
    DomainSpec d(DomainKind::AnnulusHalfOpen, m);
    d.r_ = r;
    d.v1_.push_back(sphere_component(north_pole(m), kPi / 2, BoundaryComponent::Tag::V1));
    d.v2_.push_back(sphere_component(south_pole(m), kPi - r, BoundaryComponent::Tag::V2));
    return d;
}

DomainSpec DomainSpec::punctured_hemisphere(int m) {
    DomainSpec d(DomainKind::PuncturedHemisphere, m);
    d.v1_.push_back(sphere_component(north_pole(m), kPi / 2, BoundaryComponent::Tag::V1));
    d.v2_.push_back(point_component(north_pole(m), BoundaryComponent::Tag::V2));
    return d;
}

DomainSpec DomainSpec::punctured_sphere(const SpherePoint& q) {
    DomainSpec d(DomainKind::PuncturedSphere, q.sphere_dim());
    d.p_ = q;
    d.v2_.push_back(point_component(q, BoundaryComponent::Tag::V2));
    return d;
}

DomainSpec DomainSpec::band(int m, double r, BoundaryComponent::Tag edges) {
    if (!(r > 0.0 && r < kPi / 2))
        throw RangeError("band: radius must lie in (0, pi/2)");
    DomainSpec d(DomainKind::Band, m);
    d.r_ = r;
    auto& side = (edges == BoundaryComponent::Tag::V1) ? d.v1_ : d.v2_;
    side.push_back(sphere_component(south_pole(m), kPi - r, edges));
    side.push_back(sphere_component(north_pole(m), kPi - r, edges));
    return d;
}

DomainSpec DomainSpec::twice_punctured_sphere(int m) {
    DomainSpec d(DomainKind::TwicePuncturedSphere, m);
    d.v2_.push_back(point_component(north_pole(m), BoundaryComponent::Tag::V2));
    d.v2_.push_back(point_component(south_pole(m), BoundaryComponent::Tag::V2));
    return d;
}

bool DomainSpec::contains(const SpherePoint& x) const {
    switch (kind_) {
        case DomainKind::FullSphere:
            return true;
        case DomainKind::Hemisphere:
            return x[m_] > 0.0;
        case DomainKind::GeodesicBall:
            return sphere_distance(x, p_) < r_;
        case DomainKind::Annulus: {
            const double t = polar_angle(*this, x);
            return t > r_ && t < kPi / 2;
        }
        case DomainKind::AnnulusHalfOpen: {
            const double t = polar_angle(*this, x);
            return t > r_ && t < kPi / 2;
        }
        case DomainKind::PuncturedHemisphere: {
            const double t = polar_angle(*this, x);
            return t > 0.0 && t < kPi / 2;
        }
        case DomainKind::PuncturedSphere:
            return sphere_distance(x, p_) > 0.0;
        case DomainKind::Band: {
            const double t = polar_angle(*this, x);
            return t > r_ && t < kPi - r_;
        }
        case DomainKind::TwicePuncturedSphere: {
            const double t = polar_angle(*this, x);
            return t > 0.0 && t < kPi;
        }
    }
    return false;
}

bool DomainSpec::in_closure(const SpherePoint& x, double tol) const {
    if (contains(x)) return true;
    // The closure adds V1 boundary components only; V2 stays excluded except
    // for sphere-type V2 components, whose underlying set is still a limit of
    // domain points (the metric degenerates there, not the domain).
    for (const auto& c : v1_)
        if (!c.is_point && std::abs(sphere_distance(x, c.p) - c.r) <= tol) return true;
    for (const auto& c : v2_)
        if (!c.is_point && std::abs(sphere_distance(x, c.p) - c.r) <= tol) return true;
    return false;
}

bool DomainSpec::on_V1(const SpherePoint& x, double tol) const {
    for (const auto& c : v1_) {
        if (c.is_point) {
            if (sphere_distance(x, c.p) <= tol) return true;
        } else if (std::abs(sphere_distance(x, c.p) - c.r) <= tol) {
            return true;
        }
    }
    return false;
}

double DomainSpec::boundary_distance(const SpherePoint& x) const {
    double best = kPi;
    auto visit = [&](const BoundaryComponent& c) {
        const double d = c.is_point ? sphere_distance(x, c.p)
                                    : std::abs(sphere_distance(x, c.p) - c.r);
        best = std::min(best, d);
    };
    for (const auto& c : v1_) visit(c);
    for (const auto& c : v2_) visit(c);
    return best;
}

Eigen::VectorXd DomainSpec::inward_normal(const SpherePoint& x, double tol) const {
    for (const auto& c : v1_)
        if (!c.is_point && std::abs(sphere_distance(x, c.p) - c.r) <= tol)
            return ball_inward_normal(c.r, c.p, x);
    throw BoundaryError("inward_normal: x is not on a V1 boundary component");
}

bool DomainSpec::boundary_has_equator() const {
    switch (kind_) {
        case DomainKind::Hemisphere:
        case DomainKind::Annulus:
        case DomainKind::AnnulusHalfOpen:
        case DomainKind::PuncturedHemisphere:
            return true;
        default:
            return false;
    }
}

DomainSpec DomainSpec::equatorial_double() const {
    if (doubled_) return *this;
    DomainSpec out = *this;
    switch (kind_) {
        case DomainKind::Hemisphere:
            out = full_sphere(m_);
            break;
        case DomainKind::PuncturedHemisphere:
            out = twice_punctured_sphere(m_);
            break;
        case DomainKind::Annulus:
            out = band(m_, r_, BoundaryComponent::Tag::V1);
            break;
        case DomainKind::AnnulusHalfOpen:
            out = band(m_, r_, BoundaryComponent::Tag::V2);
            break;
        case DomainKind::FullSphere:
        case DomainKind::TwicePuncturedSphere:
        case DomainKind::Band:
            break;  // already reflection-symmetric
        default:
            throw DomainError("equatorial_double: domain boundary does not contain the equator");
    }
    out.doubled_ = true;
    return out;
}

}  // namespace horocave
