#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "horocave/errors.hpp"

namespace horocave {

/// Unit vector of R^{m+1} representing a point of the round m-sphere.
class SpherePoint {
  public:
    explicit SpherePoint(Eigen::VectorXd x);
    /// Normalizes the input instead of rejecting it.
    static SpherePoint normalized(Eigen::VectorXd x);

    const Eigen::VectorXd& coords() const { return x_; }
    int ambient_dim() const { return static_cast<int>(x_.size()); }
    int sphere_dim() const { return ambient_dim() - 1; }
    double operator[](int i) const { return x_[i]; }

  private:
    Eigen::VectorXd x_;
};

SpherePoint north_pole(int m);
SpherePoint south_pole(int m);

/// cos(t) x + sin(t) v for a unit tangent v at x.
SpherePoint exp_map(const SpherePoint& x, const Eigen::VectorXd& v, double t);

/// arccos(<x,y>) in [0, pi].
double sphere_distance(const SpherePoint& x, const SpherePoint& y);

/// Inward unit normal csc(r) p - cot(r) x of the geodesic sphere of radius r
/// about p, at a point x with d(x,p) = r. Points toward p.
Eigen::VectorXd ball_inward_normal(double r, const SpherePoint& p, const SpherePoint& x);

/// Deterministic orthonormal tangent frame at x: Gram-Schmidt of the standard
/// basis with the largest-|component| axis of x dropped, ties broken by
/// lowest index. Columns of the returned (m+1) x m matrix are the frame.
Eigen::MatrixXd tangent_frame(const SpherePoint& x);

enum class DomainKind {
    FullSphere,
    Hemisphere,           // open northern hemisphere {x_{m+1} > 0}
    GeodesicBall,         // {d(x,p) < r}, 0 < r < pi/2
    Annulus,              // {r < d(x,n) < pi/2}
    AnnulusHalfOpen,      // {r < d(x,n) <= pi/2}, equator included
    PuncturedHemisphere,  // closed hemisphere minus the north pole
    PuncturedSphere,      // sphere minus one point q
    Band,                 // {r < d(x,n) < pi - r}, symmetric about the equator
    TwicePuncturedSphere  // sphere minus both poles
};

/// A boundary component: either a geodesic sphere d(.,p) = r or a single
/// point. The tag records whether the metric is finite there (V1) or
/// permitted to degenerate (V2).
struct BoundaryComponent {
    enum class Tag { V1, V2 };
    BoundaryComponent(bool point, SpherePoint center, double radius, Tag t)
        : is_point(point), p(std::move(center)), r(radius), tag(t) {}
    bool is_point;
    SpherePoint p;  // sphere center, or the point itself
    double r;
    Tag tag;
};

/// Subdomain of the sphere with its boundary partition V1 / V2.
class DomainSpec {
  public:
    static DomainSpec full_sphere(int m);
    static DomainSpec hemisphere(int m);
    static DomainSpec geodesic_ball(const SpherePoint& p, double r);
    static DomainSpec annulus(int m, double r);
    static DomainSpec annulus_half_open(int m, double r);
    static DomainSpec punctured_hemisphere(int m);
    static DomainSpec punctured_sphere(const SpherePoint& q);
    /// Band {r < d(.,n) < pi-r}; both boundary circles tagged per argument.
    static DomainSpec band(int m, double r, BoundaryComponent::Tag edges);
    static DomainSpec twice_punctured_sphere(int m);

    DomainKind kind() const { return kind_; }
    int sphere_dim() const { return m_; }
    double radius() const { return r_; }
    const SpherePoint& center() const { return p_; }
    bool doubled() const { return doubled_; }

    bool contains(const SpherePoint& x) const;          // open domain
    bool in_closure(const SpherePoint& x, double tol = 1e-9) const;
    bool on_V1(const SpherePoint& x, double tol = 1e-8) const;
    /// Distance from x to the nearest boundary component (V1 or V2).
    double boundary_distance(const SpherePoint& x) const;
    /// Inward unit normal at a V1 point (BoundaryError elsewhere).
    Eigen::VectorXd inward_normal(const SpherePoint& x, double tol = 1e-8) const;

    const std::vector<BoundaryComponent>& V1() const { return v1_; }
    const std::vector<BoundaryComponent>& V2() const { return v2_; }

    /// Reflection-closed domain for equatorial doubling. Only defined when
    /// the boundary contains the equator.
    DomainSpec equatorial_double() const;
    /// True when the boundary includes the equator d(.,n) = pi/2.
    bool boundary_has_equator() const;

  private:
    DomainSpec(DomainKind k, int m) : kind_(k), m_(m), p_(north_pole(m)) {}
    DomainKind kind_;
    int m_;
    SpherePoint p_;
    double r_ = 0.0;
    bool doubled_ = false;
    std::vector<BoundaryComponent> v1_, v2_;
};

}  // namespace horocave
