#include "horocave/probe.hpp"

#include <cmath>

#include "horocave/parallel.hpp"

namespace horocave {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SweepFamily horosphere_family(const SpherePoint& q, double s_lo, double s_hi) {
    SweepFamily f;
    f.name = "horosphere";
    f.generator = [q](double s) { return ReferenceHypersurface(Horosphere{q, s}); };
    f.s_lo = s_lo;
    f.s_hi = s_hi;
    f.direction = SweepFamily::Direction::DecreasingContact;
    return f;
}

SweepFamily equidistant_family(int m, double s_lo, double s_hi) {
    SweepFamily f;
    f.name = "equidistant";
    const SpherePoint n = north_pole(m);
    f.generator = [n](double s) {
        // E(s) = { <<y,(0,n)>> = s }: Equidistant(a, -s) has level <<y,a>> - s.
        return ReferenceHypersurface(Equidistant{MinkowskiVec{0.0, n.coords()}, -s});
    };
    f.s_lo = s_lo;
    f.s_hi = s_hi;
    f.direction = SweepFamily::Direction::DecreasingContact;
    return f;
}

SweepFamily umbilic_family(const MinkowskiVec& center, double r_lo, double r_hi) {
    if (!(r_lo > 0.0 && r_hi > r_lo)) throw RangeError("umbilic_family: need 0 < r_lo < r_hi");
    SweepFamily f;
    f.name = "umbilic";
    f.generator = [center](double s) {
        return ReferenceHypersurface(UmbilicSphere{center, s});
    };
    f.s_lo = r_lo;
    f.s_hi = r_hi;
    f.direction = SweepFamily::Direction::DecreasingContact;
    return f;
}

SampledImmersion sample_immersion(const ConformalFactorField& F, double flow_t,
                                  const std::vector<SpherePoint>& grid) {
    SampledImmersion s;
    s.points = grid;
    s.phi.resize(grid.size());
    s.on_boundary.resize(grid.size());
    parallel_for(static_cast<std::int64_t>(grid.size()), [&](std::int64_t i) {
        s.phi[i] = parallel_flow(F, flow_t, grid[i]).phi;
        s.on_boundary[i] = F.domain().on_V1(grid[i]);
    });
    return s;
}

std::vector<SpherePoint> probe_grid(const DomainSpec& d, int count, std::uint64_t seed) {
    std::vector<SpherePoint> grid;
    grid.reserve(count + 64);
    const int m = d.sphere_dim();
    for (const SpherePoint& pole : {north_pole(m), south_pole(m)})
        if (d.contains(pole) || d.on_V1(pole)) grid.push_back(pole);

    auto ring = [&](const BoundaryComponent& c, int k, std::uint64_t salt) {
        if (c.is_point) return;
        for (auto& x : sample_boundary_sphere(c.p, c.r, k, seed ^ salt)) grid.push_back(std::move(x));
    };
    const int per_ring = std::max(8, count / 8);
    std::uint64_t salt = 1;
    for (const auto& c : d.V1()) ring(c, per_ring, salt++);
    for (const auto& c : d.V2()) ring(c, per_ring, salt++);

    const int fill = count - static_cast<int>(grid.size());
    if (fill > 0)
        for (auto& x : sample_domain(d, fill, seed, 0.02)) grid.push_back(std::move(x));
    return grid;
}

ContactResult first_contact(const SampledImmersion& surface, const SweepFamily& family,
                            double tol) {
    if (surface.phi.empty()) throw RangeError("first_contact: empty grid");
    const bool decreasing = family.direction == SweepFamily::Direction::DecreasingContact;

    auto level = [&](double s, std::size_t i) {
        return level_value(family.generator(s), surface.phi[i]);
    };
    // Extremal grid level; decreasing in s because every per-point level is.
    auto extremal = [&](double s, int* arg = nullptr) {
        double best = level(s, 0);
        int bi = 0;
        for (std::size_t i = 1; i < surface.phi.size(); ++i) {
            const double v = level(s, i);
            if (decreasing ? (v > best) : (v < best)) {
                best = v;
                bi = static_cast<int>(i);
            }
        }
        if (arg) *arg = bi;
        return best;
    };

    // Monotonicity spot check (the family invariant).
    for (std::size_t i : {std::size_t(0), surface.phi.size() / 2, surface.phi.size() - 1})
        if (!(level(family.s_lo, i) > level(family.s_hi, i)))
            throw AssumptionError("first_contact: family level is not decreasing in s");

    double lo = family.s_lo, hi = family.s_hi;
    const double glo = extremal(lo, nullptr), ghi = extremal(hi, nullptr);
    if (!(glo >= 0.0 && ghi <= 0.0))
        throw NoContactError("first_contact: no sign change of the extremal level on [s_lo, s_hi]");
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        (extremal(mid, nullptr) >= 0.0 ? lo : hi) = mid;
    }

    const double s1 = 0.5 * (lo + hi);
    int arg = 0;
    extremal(s1, &arg);
    std::size_t near = 0;
    for (std::size_t i = 0; i < surface.phi.size(); ++i)
        if (std::abs(level(s1, i)) <= 10.0 * tol) ++near;
    return ContactResult{s1, surface.points[arg], arg, surface.on_boundary[arg],
                         2 * near >= surface.phi.size()};
}

namespace {

// Properness indicator must grow along a shrinking-neighborhood sequence of
// every V2 component; sampled evidence for the divergence hypothesis.
void require_properness_divergence(const ConformalFactorField& F) {
    for (const auto& comp : F.domain().V2()) {
        const auto dirs = sample_boundary_sphere(comp.p, kPi / 2, 4, 0xd1f6eULL);
        for (const auto& wpt : dirs) {
            const Eigen::VectorXd w = wpt.coords();
            double prev = -1.0, first = -1.0, last = 0.0;
            bool increasing = true;
            for (int k = 0; k <= 5; ++k) {
                const double delta = 0.2 * std::pow(0.5, k);
                const double ang = comp.is_point ? delta : comp.r - delta;
                SpherePoint x = SpherePoint::normalized(std::cos(ang) * comp.p.coords()
                                                        + std::sin(ang) * w);
                if (!F.domain().contains(x)) continue;
                const double ind = properness_indicator(F, x);
                if (first < 0.0) first = ind;
                if (prev >= 0.0 && ind <= prev) increasing = false;
                prev = ind;
                last = ind;
            }
            if (first < 0.0) continue;  // direction never entered the domain
            if (!increasing || !(last > first))
                throw AssumptionError(
                    "half_space_certificate: properness indicator does not diverge at V2");
        }
    }
}

}  // namespace

HalfSpaceReport half_space_certificate(const ConformalFactorField& F, double t,
                                       const std::vector<SpherePoint>& grid, double tol) {
    const int m = F.sphere_dim();
    if (!F.domain().boundary_has_equator())
        throw AssumptionError("half_space_certificate: domain boundary must contain the equator");
    const SpherePoint n = north_pole(m);

    const auto eq = sample_boundary_sphere(n, kPi / 2, 40, 0x8a1f5ULL);
    double hmin = 0.0, hmax = 0.0, hsum = 0.0;
    for (std::size_t i = 0; i < eq.size(); ++i) {
        const double h = boundary_mean_curvature(F, kPi / 2, n, eq[i]);
        hsum += h;
        if (i == 0) hmin = hmax = h;
        hmin = std::min(hmin, h);
        hmax = std::max(hmax, h);
    }
    if (hmax - hmin > 1e-6)
        throw AssumptionError("half_space_certificate: h(g) is not constant on the equator");
    const double c = hsum / static_cast<double>(eq.size());

    require_properness_divergence(F);

    const MinkowskiVec axis{0.0, n.coords()};
    auto margin_at = [&](double tt) {
        std::vector<double> vals(grid.size());
        parallel_for(static_cast<std::int64_t>(grid.size()), [&](std::int64_t i) {
            vals[i] = mink_inner(parallel_flow(F, tt, grid[i]).phi, axis) + std::exp(-tt) * c;
        });
        double worst = vals[0];
        for (double v : vals) worst = std::min(worst, v);
        return worst;
    };

    HalfSpaceReport rep;
    rep.c = c;
    rep.t = t;
    rep.margin = margin_at(t);
    rep.pass = rep.margin >= -tol;
    const int steps = t > 0.0 ? 10 : 0;
    for (int k = 0; k <= steps; ++k) {
        const double tk = steps == 0 ? 0.0 : t * k / steps;
        double mk;
        try {
            mk = (tk == t) ? rep.margin : margin_at(tk);
        } catch (const HorosphericalConcavityViolated&) {
            continue;  // surface not representable this early in the flow
        }
        rep.t_margins.emplace_back(tk, mk);
        if (rep.minimal_passing_t < 0.0 && mk >= -tol) rep.minimal_passing_t = tk;
    }
    return rep;
}

EmbeddingReport embedding_certificate(const ConformalFactorField& F, double t,
                                      const std::vector<SpherePoint>& grid) {
    auto ratio_at = [&](double tt) {
        SampledImmersion s = sample_immersion(F, tt, grid);
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < s.phi.size(); ++i)
            for (std::size_t j = i + 1; j < s.phi.size(); ++j) {
                const double ds = sphere_distance(s.points[i], s.points[j]);
                if (ds < 1e-12) throw RangeError("embedding_certificate: grid points coincide");
                worst = std::min(worst, hyperbolic_distance(s.phi[i], s.phi[j]) / ds);
            }
        return worst;
    };

    EmbeddingReport rep;
    rep.t = t;
    rep.min_ratio = ratio_at(t);
    rep.pass = rep.min_ratio > 1e-3;
    const int steps = t > 0.0 ? 5 : 0;
    for (int k = 0; k <= steps; ++k) {
        const double tk = steps == 0 ? 0.0 : t * k / steps;
        double rk;
        try {
            rk = (tk == t) ? rep.min_ratio : ratio_at(tk);
        } catch (const HorosphericalConcavityViolated&) {
            continue;
        }
        if (rep.minimal_passing_t < 0.0 && rk > 1e-3) rep.minimal_passing_t = tk;
    }
    return rep;
}

}  // namespace horocave
