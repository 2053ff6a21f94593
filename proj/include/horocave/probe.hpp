#pragma once

#include <functional>
#include <string>
#include <vector>

#include "horocave/reference.hpp"

namespace horocave {

/// One-parameter monotone family of reference hypersurfaces. The level value
/// of generator(s) at a fixed point is strictly decreasing in s for the
/// built-in families (gauge minus s), so a sweep meets a compact surface at
/// a well-defined first-contact parameter.
struct SweepFamily {
    enum class Direction {
        IncreasingContact,  // sweep s upward from s_lo; contact at the grid minimum
        DecreasingContact   // sweep s downward from s_hi; contact at the grid maximum
    };
    std::string name;
    std::function<ReferenceHypersurface(double)> generator;
    double s_lo = -3.0;
    double s_hi = 3.0;
    Direction direction = Direction::DecreasingContact;
};

/// Horospheres based at q, parametrized by signed distance to the origin.
SweepFamily horosphere_family(const SpherePoint& q, double s_lo = -3.0, double s_hi = 3.0);
/// Equidistants { <<y,(0,e_{m+1})>> = s }.
SweepFamily equidistant_family(int m, double s_lo = -3.0, double s_hi = 3.0);
/// Concentric geodesic spheres about a hyperboloid point, radius = s.
SweepFamily umbilic_family(const MinkowskiVec& center, double r_lo = 1e-3, double r_hi = 6.0);

/// Immersion evaluated over a fixed grid, optionally after flowing by t.
struct SampledImmersion {
    std::vector<SpherePoint> points;
    std::vector<MinkowskiVec> phi;
    std::vector<bool> on_boundary;  // point lies on V1
};

SampledImmersion sample_immersion(const ConformalFactorField& F, double flow_t,
                                  const std::vector<SpherePoint>& grid);

/// Deterministic probe grid for a domain: poles and boundary rings when
/// present, quasi-random interior fill up to `count` points.
std::vector<SpherePoint> probe_grid(const DomainSpec& d, int count,
                                    std::uint64_t seed = 0x9121d5ULL);

struct ContactResult {
    double s1;
    SpherePoint witness;
    int witness_index;
    bool boundary_contact;
    bool degenerate_tangency;  // >= half the grid sits at the contact level
};

/// First-contact parameter of the sweep against the sampled surface:
/// bisection on the extremal grid level (max for a decreasing sweep, min for
/// an increasing one), 200-iteration cap, |s - s1| <= tol at exit.
/// NoContactError when the extremal level does not change sign on
/// [s_lo, s_hi].
ContactResult first_contact(const SampledImmersion& surface, const SweepFamily& family,
                            double tol = 1e-6);

struct HalfSpaceReport {
    double c = 0.0;        // measured equator mean curvature
    double t = 0.0;        // flow time of the reported margin
    double margin = 0.0;   // min over the grid of <<phi_t, (0,n)>> + e^{-t} c
    bool pass = false;
    double minimal_passing_t = -1.0;  // smallest sampled t with margin >= -tol
    std::vector<std::pair<double, double>> t_margins;  // sampled (t, margin)
};

/// Sampled evidence for the half-space containment of the flowed surface by
/// the equidistant E(-e^{-t} c): the domain boundary must contain the
/// equator with h(g) = c constant within 1e-6 (AssumptionError otherwise),
/// and the properness indicator must grow along shrinking neighborhoods of
/// every V2 component. This is sampled evidence, not a proof.
HalfSpaceReport half_space_certificate(const ConformalFactorField& F, double t,
                                       const std::vector<SpherePoint>& grid, double tol = 1e-9);

struct EmbeddingReport {
    double t = 0.0;
    double min_ratio = 0.0;  // min over pairs of d_H(phi_t x, phi_t y) / d_S(x, y)
    bool pass = false;
    double minimal_passing_t = -1.0;
};

/// Sampled injectivity certificate: no grid pair comes closer in H^{m+1}
/// than 1e-3 times its sphere distance. Sampled evidence, not a proof.
EmbeddingReport embedding_certificate(const ConformalFactorField& F, double t,
                                      const std::vector<SpherePoint>& grid);

}  // namespace horocave
