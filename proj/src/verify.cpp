#include "horocave/verify.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "horocave/elliptic.hpp"
#include "horocave/mesh.hpp"
#include "horocave/probe.hpp"

namespace horocave {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string entry_tag(const CatalogEntry& e) {
    std::string s = e.name;
    for (const auto& [k, v] : e.params) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), ",%s=%g", k.c_str(), v);
        s += buf;
    }
    return s;
}

std::vector<SpherePoint> entry_samples(const CatalogEntry& e, int count, std::uint64_t seed) {
    return sample_domain(e.field.domain(), count, seed, e.sample_margin);
}

}  // namespace

void check_claim(const CatalogEntry& entry, const ExpectedClaim& claim, bool use_fd,
                 RecordSink& sink) {
    const ConformalFactorField F =
        use_fd ? entry.field.without_analytic() : entry.field;
    const double tol = use_fd ? std::max(claim.tol, 1e-5) : claim.tol;
    const std::string field = entry_tag(entry) + (use_fd ? "/fd" : "/analytic");
    const int m = F.sphere_dim();
    const auto pts = entry_samples(entry, use_fd ? 12 : 30, 0xc1a13ULL);

    if (claim.quantity == "lambda_const") {
        double worst = 0.0;
        for (const auto& x : pts) {
            const Eigen::VectorXd l = schouten(F, x).lambda;
            worst = std::max(worst, (l.array() - claim.value).abs().maxCoeff());
        }
        sink.check("lambda_const", field, "domain", 0.0, worst, tol);
    } else if (claim.quantity == "lambda_max_abs") {
        double worst = 0.0;
        for (const auto& x : pts)
            worst = std::max(worst, schouten(F, x).lambda.cwiseAbs().maxCoeff());
        sink.check("lambda_max_abs", field, "domain", claim.value, worst, tol);
    } else if (claim.quantity == "lambda_sorted") {
        double worst = 0.0;
        for (const auto& x : pts)
            worst = std::max(worst, (schouten(F, x).lambda - claim.vec).cwiseAbs().maxCoeff());
        sink.check("lambda_sorted", field, "domain", 0.0, worst, tol);
    } else if (claim.quantity == "R") {
        double worst = 0.0;
        for (const auto& x : pts)
            worst = std::max(worst, std::abs(scalar_curvature(F, x) - claim.value));
        sink.check("R", field, "domain", 0.0, worst, tol);
    } else if (claim.quantity == "K") {
        double worst = 0.0;
        for (const auto& x : pts)
            worst = std::max(worst, std::abs(gauss_curvature_2d(F, x) - claim.value));
        sink.check("K", field, "domain", 0.0, worst, tol);
    } else if (claim.quantity == "kappa_const") {
        double worst = 0.0;
        for (const auto& x : pts) {
            const ImmersionSample s = immerse(F, x);
            worst = std::max(worst, (s.kappa.array() - claim.value).abs().maxCoeff());
        }
        sink.check("kappa_const", field, "domain", 0.0, worst, tol);
    } else if (claim.quantity == "sigma_k_zero") {
        double worst = 0.0;
        for (const auto& x : pts)
            worst = std::max(worst, std::abs(sigma_k(schouten(F, x).lambda, claim.k)));
        sink.check("sigma_" + std::to_string(claim.k) + "_zero", field, "domain", claim.value,
                   worst, tol);
    } else if (claim.quantity == "h_equator") {
        const auto ring = sample_boundary_sphere(north_pole(m), kPi / 2, 20, 0x7e9a1ULL);
        double worst = 0.0;
        for (const auto& x : ring)
            worst = std::max(worst,
                             std::abs(boundary_mean_curvature(F, kPi / 2, north_pole(m), x)));
        sink.check("h_equator", field, "equator", claim.value, worst, tol);
    } else if (claim.quantity == "phi_base_spread") {
        const MinkowskiVec base{1.0, north_pole(m).coords()};
        double lo = 0.0, hi = 0.0;
        bool started = false;
        for (const auto& x : pts) {
            const double v = mink_inner(immerse(F, x).phi, base);
            if (!started) lo = hi = v, started = true;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        sink.check("phi_base_spread", field, "domain", claim.value, hi - lo, tol);
    } else if (claim.quantity == "sigma_tail_zero") {
        // sigma must decrease monotonically to 0 along the meridian tail.
        bool monotone = true;
        double prev = -1.0, last = 1.0;
        for (int i = 0; i <= 40; ++i) {
            const double z = 0.9 + (0.9999 - 0.9) * i / 40.0;
            Eigen::VectorXd v = Eigen::VectorXd::Zero(m + 1);
            v[0] = std::sqrt(1.0 - z * z);
            v[m] = z;
            const double s = F.sigma(SpherePoint::normalized(v));
            if (prev >= 0.0 && s >= prev) monotone = false;
            prev = s;
            last = s;
        }
        sink.check_flag("sigma_tail_monotone", field, "z->1", true, monotone);
        sink.check("sigma_tail_value", field, "z=0.9999", 0.0, last, 1e-3);
    } else if (claim.quantity == "properness_divergent") {
        // The indicator must grow without bound along meridian samples that
        // approach the domain edge.
        const double cut = std::cos(kPi / 4.0);
        bool increasing = true;
        double prev = -1.0, last = 0.0;
        for (int i = 0; i <= 12; ++i) {
            const double z = cut - 0.2 * std::pow(0.5, i);
            Eigen::VectorXd v = Eigen::VectorXd::Zero(m + 1);
            v[0] = std::sqrt(1.0 - z * z);
            v[m] = z;
            const double ind = properness_indicator(F, SpherePoint::normalized(v));
            if (prev >= 0.0 && ind <= prev) increasing = false;
            prev = ind;
            last = ind;
        }
        sink.check_flag("properness_divergent", field, "|z|->cos(pi/4)", true,
                        increasing && last > 100.0);
    } else {
        throw CatalogError("unknown expected-claim quantity: " + claim.quantity);
    }
}

namespace {

std::vector<CatalogEntry> standard_entries() {
    std::vector<CatalogEntry> out;
    out.push_back(catalog_field("constant", {{"t", 0.3}, {"m", 3}}));
    out.push_back(catalog_field("constant", {{"t", 0.7}, {"m", 2}}));
    out.push_back(catalog_field("horosphere", {{"s", 0.3}, {"m", 3}}));
    out.push_back(catalog_field("punctured", {{"m", 4}, {"k", 1}}));
    out.push_back(catalog_field("annulus", {{"m", 2}}));
    out.push_back(catalog_field("annulus", {{"m", 3}}));
    out.push_back(catalog_field("annulus", {{"m", 4}}));
    out.push_back(catalog_field("rotational_example"));
    return out;
}

void suite_identities(RecordSink& sink) {
    // lambda <-> kappa roundtrip, on the exact sampled range of the relation.
    std::mt19937_64 rng(0x1a3bdULL);
    std::uniform_real_distribution<double> unif(-5.0, 0.49);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double l = unif(rng);
        worst = std::max(worst, std::abs(l - lambda_from_kappa(kappa_from_lambda(l))));
    }
    sink.check("lambda_kappa_roundtrip", "-", "1000 draws", 0.0, worst, 1e-12);
    sink.check("kappa_at_zero", "-", "lambda=0", 1.0, kappa_from_lambda(0.0), 0.0);

    struct Case {
        CatalogEntry entry;
        double flow_t;
    };
    std::vector<Case> cases;
    cases.push_back({catalog_field("constant", {{"t", 0.7}, {"m", 3}}), 0.0});
    cases.push_back({catalog_field("horosphere", {{"s", 0.3}, {"m", 3}}), 0.0});
    cases.push_back({catalog_field("punctured", {{"m", 4}, {"k", 1}}), 0.0});
    cases.push_back({catalog_field("annulus", {{"m", 3}}), 0.5});
    cases.push_back({catalog_field("rotational_example"), 0.0});

    for (const auto& c : cases) {
        const ConformalFactorField F =
            c.flow_t > 0.0 ? dilate(c.entry.field, c.flow_t) : c.entry.field;
        const std::string tag = entry_tag(c.entry);
        const auto pts = entry_samples(c.entry, 40, 0x5a5a5ULL);

        const IdentityReport rep = verify_identities(F, pts);
        sink.check("klein_norm_identity", tag, "40 samples", 0.0, rep.worst_klein, 1e-12);
        sink.check("gauss_map_recovery", tag, "40 samples", 0.0, rep.worst_gauss, 1e-10);
        sink.check("lightcone_first_form", tag, "40 samples", 0.0, rep.worst_first_form, 1e-5);

        double w_unit = 0.0, w_normal = 0.0, w_orth = 0.0, w_null = 0.0, w_lk = 0.0;
        for (const auto& x : pts) {
            const ImmersionSample s = immerse(F, x);
            w_unit = std::max(w_unit, std::abs(mink_inner(s.phi, s.phi) + 1.0));
            w_normal = std::max(w_normal, std::abs(mink_inner(s.eta, s.eta) - 1.0));
            w_orth = std::max(w_orth, std::abs(mink_inner(s.phi, s.eta)));
            w_null = std::max(w_null, std::abs(mink_inner(s.psi, s.psi)));
            for (int i = 0; i < s.lambda.size(); ++i)
                w_lk = std::max(w_lk,
                                std::abs(s.lambda[i] - lambda_from_kappa(s.kappa[i])));
        }
        sink.check("phi_unit_timelike", tag, "40 samples", 0.0, w_unit, 1e-9);
        sink.check("eta_unit_spacelike", tag, "40 samples", 0.0, w_normal, 1e-9);
        sink.check("phi_eta_orthogonal", tag, "40 samples", 0.0, w_orth, 1e-9);
        sink.check("psi_null", tag, "40 samples", 0.0, w_null, 1e-9);
        sink.check("lambda_kappa_consistent", tag, "40 samples", 0.0, w_lk, 1e-12);
    }
}

void suite_catalog(RecordSink& sink) {
    for (const auto& entry : standard_entries()) {
        for (const auto& claim : entry.expected) {
            check_claim(entry, claim, false, sink);
            check_claim(entry, claim, true, sink);
        }
    }
}

void suite_cones(RecordSink& sink) {
    for (int m : {3, 4, 5}) {
        const auto s1 = check_axioms(sigma1_data(m, 1.0), 200);
        sink.check_flag("axioms_sigma1", "Gamma_1 m=" + std::to_string(m), "200 samples", true,
                        s1.all_pass());
        for (int k : {1, 2}) {
            const auto sk = check_axioms(sigma_k_root_data(k, m, 1.0), 200);
            sink.check_flag("axioms_sigma_k_root",
                            "Garding(" + std::to_string(k) + ") m=" + std::to_string(m),
                            "200 samples", true, sk.all_pass());
        }
        const auto raw = check_axioms(raw_sigma_k_data(2, m, 1.0), 200);
        sink.check_flag("raw_sigma2_homogeneity_fails", "m=" + std::to_string(m), "200 samples",
                        true, !raw["homogeneity"].pass);
    }

    // Cone nesting on random draws.
    std::mt19937_64 rng(0xc0debULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    bool nested = true;
    for (int i = 0; i < 10000 && nested; ++i) {
        Eigen::VectorXd l(4);
        for (int j = 0; j < 4; ++j) l[j] = gauss(rng);
        const bool in_m = cone_contains(ConeSpec::gamma_m(4), l);
        const bool in_g2 = cone_contains(ConeSpec::garding(2, 4), l);
        const bool in_1 = cone_contains(ConeSpec::gamma1(4), l);
        if ((in_m && !in_g2) || (in_g2 && !in_1)) nested = false;
    }
    sink.check_flag("cone_nesting", "m=4", "10^4 draws", true, nested);

    // Dilation transport of the residual (constant field, sigma_1).
    const CatalogEntry ce = catalog_field("constant", {{"t", 0.25}, {"m", 3}});
    const EllipticData d = sigma1_data(3, 1.0);
    const auto pts = entry_samples(ce, 5, 0xabc01ULL);
    double worst = 0.0;
    for (const auto& x : pts) {
        const double r0 = problem_residual(ce.field, d, x);
        const double r1 = problem_residual(dilate(ce.field, 0.4), dilated_data(d, 0.4), x);
        worst = std::max(worst, std::abs(r1 - r0));
    }
    sink.check("residual_dilation_transport", entry_tag(ce), "5 samples", 0.0, worst, 1e-9);

    // Degenerate residuals of the particular solutions.
    const CatalogEntry horo = catalog_field("horosphere", {{"s", 0.3}, {"m", 3}});
    double wh = 0.0;
    for (const auto& x : entry_samples(horo, 10, 0xdd1ULL))
        wh = std::max(wh, std::abs(problem_residual(horo.field, sigma_k_root_data(2, 3, 0.0), x)));
    sink.check("horosphere_degenerate_residual", entry_tag(horo), "10 samples", 0.0, wh, 1e-6);

    const CatalogEntry ann4 = catalog_field("annulus", {{"m", 4}});
    double wa = 0.0;
    for (const auto& x : entry_samples(ann4, 10, 0xdd2ULL))
        wa = std::max(wa, std::abs(problem_residual(ann4.field, raw_sigma_k_data(2, 4, 0.0), x)));
    sink.check("annulus_sigma2_residual", entry_tag(ann4), "10 samples", 0.0, wa, 1e-6);
}

void suite_boundary(RecordSink& sink) {
    const SpherePoint n3 = north_pole(3);

    // Constant field on a pi/4 ball: placement on the predicted equidistant
    // and the constant contact angle.
    const CatalogEntry cb = catalog_field("constant", {{"t", 0.5}, {"m", 3}, {"domain", 2},
                                                       {"r", kPi / 4}});
    const double c = std::exp(-0.5);  // e^{-t} cot(pi/4)
    const PlacementReport pr = boundary_placement(cb.field, kPi / 4, n3, 60);
    sink.check("boundary_placement_c", entry_tag(cb), "r=pi/4", c, pr.c, 1e-9);
    sink.check("boundary_placement_level", entry_tag(cb), "60 samples", 0.0, pr.worst_level, 1e-6);

    const Equidistant E = equidistant_from_ball(kPi / 4, n3, pr.c);
    const auto ring = sample_boundary_sphere(n3, kPi / 4, 20, 0xfa7ULL);
    double worst = 0.0;
    for (const auto& x : ring)
        worst = std::max(worst, std::abs(contact_angle(cb.field, x, E)
                                         - (-c / std::sqrt(1.0 + c * c))));
    sink.check("contact_angle", entry_tag(cb), "20 samples", 0.0, worst, 1e-6);

    // Hemisphere with minimal boundary meets E(0) orthogonally.
    const CatalogEntry ch = catalog_field("constant", {{"t", 0.5}, {"m", 3}, {"domain", 1}});
    const Equidistant E0 = equidistant_from_ball(kPi / 2, n3, 0.0);
    const auto eq = sample_boundary_sphere(n3, kPi / 2, 20, 0xfa8ULL);
    double worst0 = 0.0;
    for (const auto& x : eq)
        worst0 = std::max(worst0, std::abs(contact_angle(ch.field, x, E0)));
    sink.check("contact_angle_minimal", entry_tag(ch), "20 samples", 0.0, worst0, 1e-9);

    // Dilated annulus still meets E(0) orthogonally at the equator.
    const CatalogEntry ca = catalog_field("annulus", {{"m", 3}});
    const ConformalFactorField Fa = dilate(ca.field, 0.5);
    double worsta = 0.0;
    for (const auto& x : eq)
        worsta = std::max(worsta, std::abs(contact_angle(Fa, x, E0)));
    sink.check("contact_angle_annulus", entry_tag(ca) + "/t=0.5", "20 samples", 0.0, worsta, 1e-6);

    // h(g_t) = e^{-t} h(g) along the flow.
    std::mt19937_64 rng(0x33dULL);
    std::uniform_real_distribution<double> ts(-1.0, 2.0);
    const auto bring = sample_boundary_sphere(n3, kPi / 4, 5, 0xfa9ULL);
    double wflow = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double t = ts(rng);
        for (const auto& x : bring) {
            const double h0 = boundary_mean_curvature(cb.field, kPi / 4, n3, x);
            const double ht = boundary_mean_curvature(dilate(cb.field, t), kPi / 4, n3, x);
            wflow = std::max(wflow, std::abs(ht - std::exp(-t) * h0));
        }
    }
    sink.check("mean_curvature_flow_scaling", entry_tag(cb), "8 flows x 5 samples", 0.0, wflow,
               1e-10);

    // Equatorial double of the annulus field: value and gradient jumps.
    const CatalogEntry ann = catalog_field("annulus", {{"m", 3}});
    const ConformalFactorField dbl = equatorial_double(ann.field);
    const auto eq3 = sample_boundary_sphere(n3, kPi / 2, 50, 0xfb0ULL);
    double wv = 0.0, wg = 0.0;
    for (const auto& x : eq3) {
        const auto [vj, gj] = equator_jump(dbl, x);
        wv = std::max(wv, vj);
        wg = std::max(wg, gj);
    }
    sink.check("double_value_jump", entry_tag(ann), "50 equator points", 0.0, wv, 1e-8);
    sink.check("double_gradient_jump", entry_tag(ann), "50 equator points", 0.0, wg, 1e-8);
    sink.check_flag("double_idempotent", entry_tag(ann), "-", true,
                    equatorial_double(dbl).domain().kind() == dbl.domain().kind());
    sink.check_flag("double_reports_C1", entry_tag(ann), "-", true, dbl.smoothness() >= 1);
}

void suite_probe(RecordSink& sink) {
    const int m = 3;
    // Geodesic sphere against the horosphere foliation toward n.
    const CatalogEntry cs = catalog_field("constant", {{"t", 0.8}, {"m", m}});
    const auto grid = probe_grid(cs.field.domain(), 1000);
    const SampledImmersion surf = sample_immersion(cs.field, 0.0, grid);
    const ContactResult fc = first_contact(surf, horosphere_family(north_pole(m)), 1e-6);
    sink.check("first_contact_horosphere", entry_tag(cs), "grid 1000", 0.8, fc.s1, 1e-6);
    sink.check("first_contact_witness", entry_tag(cs), "north-most point", 1.0,
               fc.witness[m], 1e-9);

    const auto grid2 = probe_grid(cs.field.domain(), 2000, 0x777ULL);
    const ContactResult fc2 =
        first_contact(sample_immersion(cs.field, 0.0, grid2), horosphere_family(north_pole(m)),
                      1e-6);
    sink.check("first_contact_refinement", entry_tag(cs), "grid 2000", fc.s1, fc2.s1, 1e-5);

    // Hemisphere against the equidistant foliation: contact at sinh(t).
    const CatalogEntry chem = catalog_field("constant", {{"t", 0.8}, {"m", m}, {"domain", 1}});
    const auto hgrid = probe_grid(chem.field.domain(), 1000);
    const ContactResult fe =
        first_contact(sample_immersion(chem.field, 0.0, hgrid), equidistant_family(m), 1e-6);
    sink.check("first_contact_equidistant", entry_tag(chem), "grid 1000", std::sinh(0.8), fe.s1,
               1e-6);

    // A horosphere surface against its own foliation: degenerate tangency.
    // The support field e^{-s}(1 - <x,q>) realizes the horosphere at gauge
    // log(2) - s: <<phi, (1,q)>> = -e^s / 2 identically.
    const CatalogEntry ch = catalog_field("horosphere", {{"s", 0.3}, {"m", m}});
    const auto pgrid = probe_grid(ch.field.domain(), 600, 0x3113ULL);
    const ContactResult fh =
        first_contact(sample_immersion(ch.field, 0.0, pgrid), horosphere_family(north_pole(m)),
                      1e-6);
    sink.check("horosphere_self_contact", entry_tag(ch), "grid 600", std::log(2.0) - 0.3, fh.s1,
               1e-6);
    sink.check_flag("horosphere_self_tangency", entry_tag(ch), "grid 600", true,
                    fh.degenerate_tangency);

    // Half-space certificates.
    const CatalogEntry hemi = catalog_field("constant", {{"t", 0.5}, {"m", m}, {"domain", 1}});
    const auto hsgrid = probe_grid(hemi.field.domain(), 800, 0x515ULL);
    for (double t : {0.0, 1.0, 2.0}) {
        const HalfSpaceReport hs = half_space_certificate(hemi.field, t, hsgrid);
        sink.check_flag("half_space_pass", entry_tag(hemi),
                        "t=" + std::to_string(t), true, hs.pass);
    }
    const CatalogEntry ann = catalog_field("annulus", {{"m", m}});
    const ConformalFactorField fann = dilate(ann.field, 1.0);
    const auto agrid = probe_grid(fann.domain(), 800, 0x516ULL);
    const HalfSpaceReport ha = half_space_certificate(fann, 0.0, agrid);
    sink.check_flag("half_space_annulus", entry_tag(ann) + "/t=1", "grid 800", true, ha.pass);

    // Embedding certificates.
    const auto egrid = probe_grid(cs.field.domain(), 220, 0x717ULL);
    const EmbeddingReport ec = embedding_certificate(cs.field, 0.0, egrid);
    sink.check_flag("embedding_constant", entry_tag(cs), "grid 220", true, ec.pass);
    const auto egrid2 = probe_grid(ch.field.domain(), 220, 0x718ULL);
    const EmbeddingReport eh = embedding_certificate(ch.field, 0.0, egrid2);
    sink.check_flag("embedding_horosphere", entry_tag(ch), "grid 220", true, eh.pass);
}

void suite_mesh(RecordSink& sink) {
    const CatalogEntry cs = catalog_field("constant", {{"t", 0.7}, {"m", 2}});
    const Mesh sphere = build_mesh(cs.field, Model::Poincare, 24, 48);
    sink.check("mesh_sphere_euler", entry_tag(cs), "24x48", 2.0,
               euler_characteristic(sphere), 0.0);

    // Poincare image of the geodesic sphere: Euclidean sphere of radius
    // tanh(t/2).
    double wr = 0.0;
    for (const auto& v : sphere.vertices) wr = std::max(wr, std::abs(v.norm() - std::tanh(0.35)));
    sink.check("mesh_sphere_radius", entry_tag(cs), "all vertices", 0.0, wr, 1e-9);

    const CatalogEntry ann = catalog_field("annulus", {{"m", 2}});
    const Mesh tube = build_mesh(ann.field, Model::Poincare, 16, 40, {.dilate_t = 1.0});
    sink.check("mesh_annulus_euler", entry_tag(ann), "16x40", 0.0,
               euler_characteristic(tube), 0.0);

    // Rotational symmetry: each latitude ring is an orbit of the rotation
    // group about the axis; vertex norms and z are constant along it.
    double worb = 0.0;
    for (std::size_t i = 0; i + 40 <= tube.vertices.size(); i += 40) {
        for (int j = 1; j < 40; ++j) {
            worb = std::max(worb, std::abs(tube.vertices[i + j].norm() - tube.vertices[i].norm()));
            worb = std::max(worb, std::abs(tube.vertices[i + j][2] - tube.vertices[i][2]));
        }
    }
    sink.check("mesh_rotational_orbits", entry_tag(ann), "rings", 0.0, worb, 1e-9);

    // The dilated annulus surface is an equidistant tube about the n-s
    // geodesic: constant hyperbolic distance from the axis.
    double wd = 0.0;
    bool first = true;
    double d0 = 0.0;
    for (const auto& v : tube.vertices) {
        // distance from the Poincare-model axis {x = y = 0} via the
        // hyperboloid: sinh(dist) = |spatial component orthogonal to axis|.
        const double n2 = v.squaredNorm();
        const Eigen::Vector3d ys = (2.0 / (1.0 - n2)) * v;
        const double orth = std::hypot(ys[0], ys[1]);
        const double dist = std::asinh(orth);
        if (first) d0 = dist, first = false;
        wd = std::max(wd, std::abs(dist - d0));
    }
    sink.check("mesh_equidistant_tube", entry_tag(ann), "all vertices", 0.0, wd, 1e-6);

    // OBJ determinism and roundtrip.
    const std::string path1 = "/tmp/horocave_mesh_1.obj";
    const std::string path2 = "/tmp/horocave_mesh_2.obj";
    write_obj(tube, path1);
    write_obj(tube, path2);
    std::ifstream f1(path1, std::ios::binary), f2(path2, std::ios::binary);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    sink.check_flag("obj_deterministic", entry_tag(ann), path1, true, !s1.empty() && s1 == s2);

    const Mesh back = read_obj(path1);
    write_obj(back, path2);
    std::ifstream f3(path2, std::ios::binary);
    std::string s3((std::istreambuf_iterator<char>(f3)), std::istreambuf_iterator<char>());
    sink.check_flag("obj_roundtrip_bytes", entry_tag(ann), path1, true, s1 == s3);

    // Klein tangency of the rotational example under the ideal extension.
    const CatalogEntry rot = catalog_field("rotational_example");
    const Mesh ext = build_mesh(rot.field, Model::Klein, 40, 24, {.allow_ideal = true});
    double maxn = 0.0;
    for (const auto& v : ext.vertices) maxn = std::max(maxn, v.norm());
    sink.check("mesh_klein_tangency", entry_tag(rot), "allow-ideal", 1.0, maxn, 1e-3);
}

}  // namespace

std::vector<std::string> verify_suites() {
    return {"identities", "catalog", "cones", "boundary", "probe", "mesh", "all"};
}

int run_verify(const std::string& suite, const VerifyOptions& opts, RecordSink* external) {
    RecordSink local(opts.out);
    RecordSink& sink = external ? *external : local;

    if (opts.inject_error) detail::set_kappa_skew(1e-6);
    struct SkewReset {
        ~SkewReset() { detail::set_kappa_skew(0.0); }
    } reset;

    bool known = false;
    auto of = [&](const std::string& name) {
        const bool run = suite == name || suite == "all";
        known = known || suite == name;
        return run;
    };
    try {
        if (of("identities")) suite_identities(sink);
        if (of("catalog")) suite_catalog(sink);
        if (of("cones")) suite_cones(sink);
        if (of("boundary")) suite_boundary(sink);
        if (of("probe")) suite_probe(sink);
        if (of("mesh")) suite_mesh(sink);
    } catch (const ConfigError& e) {
        sink.emit({"configuration_error", suite, e.what(), 0.0, 1.0, 0.0, false});
        return 2;
    } catch (const Error& e) {
        sink.emit({"suite_error", suite, e.what(), 0.0, 1.0, 0.0, false});
        return 1;
    }
    if (!known && suite != "all") return 2;
    return sink.failures() == 0 ? 0 : 1;
}

}  // namespace horocave
