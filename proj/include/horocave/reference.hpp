#pragma once

#include <variant>
#include <vector>

#include "horocave/immersion.hpp"

namespace horocave {

/// Horosphere based at q (a point of the ideal boundary) at signed distance s
/// from the model origin; s increases toward q.
struct Horosphere {
    SpherePoint q;
    double s = 0.0;
};

/// Equidistant hypersurface E(a, -c) = { <<y,a>> = -c } at constant distance
/// from the totally geodesic E(a, 0); a is a unit spacelike vector.
struct Equidistant {
    MinkowskiVec a;
    double c = 0.0;
};

/// Geodesic sphere of hyperbolic radius R about a hyperboloid point.
struct UmbilicSphere {
    MinkowskiVec center;
    double radius = 1.0;
};

using ReferenceHypersurface = std::variant<Horosphere, Equidistant, UmbilicSphere>;

/// Reference surface whose ideal boundary is the geodesic sphere d(.,p) = r:
/// a = (cot r, csc(r) p). The returned Equidistant(a, c) is the level set
/// { <<y,a>> = -c }, the locus of boundary images when h(g) = c there.
Equidistant equidistant_from_ball(double r, const SpherePoint& p, double c);

/// Signed level function vanishing exactly on the hypersurface and negative
/// on the side of the model origin (horosphere/umbilic variants; for the
/// equidistant the sign is that of <<y,a>> + c):
///   Equidistant(a,c):   <<y,a>> + c
///   Horosphere(q,s):   -log(-<<y,(1,q)>>) - s
///   UmbilicSphere(z,R): arccosh(-<<y,z>>) - R.
/// The horosphere level is a Busemann gauge: on the geodesic from the origin
/// toward q it equals (arc length) - s.
double level_value(const ReferenceHypersurface& H, const MinkowskiVec& y);

/// Unit normal N(y) = (a - c y)/sqrt(1 + c^2) along an equidistant, tangent
/// to the hyperboloid (OffSurfaceError when y is not on the level set).
MinkowskiVec reference_normal(const Equidistant& E, const MinkowskiVec& y);

/// <<N(phi(x)), eta(x)>> for a boundary point x whose image lies on E. For a
/// geodesic-ball boundary with h(g) = c and E = equidistant_from_ball(r,p,c)
/// this equals -c / sqrt(1 + c^2) (cosine of the constant contact angle).
double contact_angle(const ConformalFactorField& F, const SpherePoint& x, const Equidistant& E);

struct PlacementReport {
    double c = 0.0;           // measured boundary mean curvature
    double worst_level = 0.0; // max |level_value| over the boundary samples
    double h_spread = 0.0;    // max - min of h(g) over the samples
    bool pass = false;
};

/// Samples the boundary sphere d(.,p) = r, measures h(g) (AssumptionError if
/// not constant within 1e-6), and reports the worst distance of the boundary
/// image from E(a, -c). PASS iff below 1e-6.
PlacementReport boundary_placement(const ConformalFactorField& F, double r, const SpherePoint& p,
                                   int sample_count);

}  // namespace horocave
