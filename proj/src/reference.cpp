#include "horocave/reference.hpp"

#include <cmath>

namespace horocave {

Equidistant equidistant_from_ball(double r, const SpherePoint& p, double c) {
    if (!(r > 0.0 && r <= 1.5707963267948967))
        throw RangeError("equidistant_from_ball: radius must lie in (0, pi/2]");
    MinkowskiVec a{1.0 / std::tan(r), (1.0 / std::sin(r)) * p.coords()};
    if (std::abs(r - 1.5707963267948966) < 1e-15) a = {0.0, p.coords()};
    return {std::move(a), c};
}

double level_value(const ReferenceHypersurface& H, const MinkowskiVec& y) {
    require_on_hyperboloid(y, 1e-8);
    if (const auto* e = std::get_if<Equidistant>(&H)) {
        return mink_inner(y, e->a) + e->c;
    }
    if (const auto* h = std::get_if<Horosphere>(&H)) {
        const MinkowskiVec base{1.0, h->q.coords()};
        const double b = -mink_inner(y, base);  // > 0 on the hyperboloid
        return -std::log(b) - h->s;
    }
    const auto& u = std::get<UmbilicSphere>(H);
    return std::acosh(std::max(1.0, -mink_inner(y, u.center))) - u.radius;
}

MinkowskiVec reference_normal(const Equidistant& E, const MinkowskiVec& y) {
    if (std::abs(level_value(E, y)) > 1e-8)
        throw OffSurfaceError("reference_normal: point is not on the equidistant");
    return (E.a - E.c * y) / std::sqrt(1.0 + E.c * E.c);
}

double contact_angle(const ConformalFactorField& F, const SpherePoint& x, const Equidistant& E) {
    const ImmersionSample s = immerse(F, x);
    if (std::abs(level_value(ReferenceHypersurface{E}, s.phi)) > 1e-6)
        throw PlacementError("contact_angle: boundary image does not lie on the equidistant");
    const MinkowskiVec N = (E.a - E.c * s.phi) / std::sqrt(1.0 + E.c * E.c);
    return mink_inner(N, s.eta);
}

PlacementReport boundary_placement(const ConformalFactorField& F, double r, const SpherePoint& p,
                                   int sample_count) {
    const auto pts = sample_boundary_sphere(p, r, sample_count, 0xb0a2dULL);
    double hmin = 0.0, hmax = 0.0;
    std::vector<double> hs(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        hs[i] = boundary_mean_curvature(F, r, p, pts[i]);
        if (i == 0) {
            hmin = hmax = hs[i];
        } else {
            hmin = std::min(hmin, hs[i]);
            hmax = std::max(hmax, hs[i]);
        }
    }
    PlacementReport rep;
    rep.h_spread = hmax - hmin;
    if (rep.h_spread > 1e-6)
        throw AssumptionError("boundary_placement: h(g) is not constant on the boundary (spread " +
                              std::to_string(rep.h_spread) + ")");
    double csum = 0.0;
    for (double h : hs) csum += h;
    rep.c = csum / static_cast<double>(hs.size());

    const Equidistant E = equidistant_from_ball(r, p, rep.c);
    for (const auto& x : pts) {
        const ImmersionSample s = immerse(F, x);
        rep.worst_level = std::max(rep.worst_level,
                                   std::abs(level_value(ReferenceHypersurface{E}, s.phi)));
    }
    rep.pass = rep.worst_level < 1e-6;
    return rep;
}

}  // namespace horocave
