#include "horocave/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "horocave/parallel.hpp"

namespace horocave {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPoleInset = 0.02;  // clearance kept from puncture points

struct ThetaRange {
    double lo, hi;
    bool cap_lo, cap_hi;  // true when the range end closes with a pole vertex
};

// Rotational range of the domain. Ends on V2 components (where the metric
// degenerates) are inset; V1 boundary circles are sampled exactly.
ThetaRange theta_range(const DomainSpec& d) {
    switch (d.kind()) {
        case DomainKind::FullSphere: return {0.0, kPi, true, true};
        case DomainKind::Hemisphere: return {0.0, kPi / 2, true, false};
        case DomainKind::GeodesicBall: return {0.0, d.radius(), true, false};
        case DomainKind::Annulus: return {d.radius(), kPi / 2, false, false};
        case DomainKind::AnnulusHalfOpen:
            return {d.radius() + kPoleInset, kPi / 2, false, false};
        case DomainKind::Band: {
            const double inset = d.V2().empty() ? 0.0 : kPoleInset;
            return {d.radius() + inset, kPi - d.radius() - inset, false, false};
        }
        case DomainKind::PuncturedHemisphere: return {kPoleInset, kPi / 2, false, false};
        case DomainKind::PuncturedSphere: return {kPoleInset, kPi, false, true};
        case DomainKind::TwicePuncturedSphere: return {kPoleInset, kPi - kPoleInset, false, false};
    }
    throw DomainError("build_mesh: unsupported domain");
}

SpherePoint grid_point(double theta, double phi) {
    Eigen::VectorXd x(3);
    x << std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta);
    return SpherePoint::normalized(x);
}

}  // namespace

Mesh build_mesh(const ConformalFactorField& F, Model model, int n_theta, int n_phi,
                const MeshOptions& opts) {
    if (F.sphere_dim() != 2) throw DimensionError("build_mesh: only m = 2 surfaces are meshed");
    if (model == Model::Hyperboloid)
        throw ModelError("build_mesh: choose the Poincare or Klein ball model");
    if (n_theta < 2 || n_phi < 3) throw RangeError("build_mesh: resolution too small");
    if (F.domain().kind() == DomainKind::GeodesicBall
        && sphere_distance(F.domain().center(), north_pole(2)) > 1e-12)
        throw DomainError("build_mesh: ball domains must be centered at the north pole");

    const ConformalFactorField G = opts.dilate_t != 0.0 ? F.dilated(opts.dilate_t) : F;
    ThetaRange tr = theta_range(F.domain());
    if (opts.allow_ideal && !tr.cap_lo && !tr.cap_hi) {
        // Sample the exact domain edges (the V2 inset is dropped) so the
        // ideal tangency circle is hit exactly, and extend the rotational
        // range past the domain to show the smooth continuation.
        tr.lo = F.domain().radius();
        tr.hi = kPi - F.domain().radius();
    }

    // Row layout: optional north cap vertex, latitude rings of n_phi
    // vertices each, optional south cap vertex. Ball-center geodesic poles
    // use exact coordinates so closed meshes stay watertight.
    std::vector<double> thetas;
    const int core_rows = n_theta - (tr.cap_lo ? 1 : 0) - (tr.cap_hi ? 1 : 0) + 1;
    for (int i = 0; i < core_rows; ++i) {
        const double a = tr.cap_lo
                             ? (i + 1.0) / (core_rows + (tr.cap_hi ? 1.0 : 0.0))
                             : static_cast<double>(i) / (tr.cap_hi ? core_rows : (core_rows - 1));
        thetas.push_back(tr.lo + a * (tr.hi - tr.lo));
    }
    if (opts.allow_ideal && !tr.cap_lo && !tr.cap_hi && thetas.size() >= 2) {
        const double step = thetas[1] - thetas[0];
        std::vector<double> ext;
        for (int k = 3; k >= 1; --k) {
            const double th = tr.lo - k * step;
            if (th > kPoleInset) ext.push_back(th);
        }
        ext.insert(ext.end(), thetas.begin(), thetas.end());
        for (int k = 1; k <= 3; ++k) {
            const double th = tr.hi + k * step;
            if (th < kPi - kPoleInset) ext.push_back(th);
        }
        thetas = std::move(ext);
    }
    const int rows = static_cast<int>(thetas.size());

    std::vector<SpherePoint> pts;
    if (tr.cap_lo) pts.push_back(grid_point(tr.lo, 0.0));
    for (double th : thetas)
        for (int j = 0; j < n_phi; ++j) pts.push_back(grid_point(th, 2.0 * kPi * j / n_phi));
    if (tr.cap_hi) pts.push_back(grid_point(tr.hi, 0.0));

    Mesh mesh;
    mesh.allow_ideal = opts.allow_ideal;
    mesh.vertices.resize(pts.size());
    auto& kmax = mesh.attributes["kappa_max"];
    auto& lmin = mesh.attributes["lambda_min"];
    kmax.assign(pts.size(), std::numeric_limits<double>::quiet_NaN());
    lmin.assign(pts.size(), std::numeric_limits<double>::quiet_NaN());

    std::exception_ptr bad;
    std::mutex bad_mutex;
    parallel_for(static_cast<std::int64_t>(pts.size()), [&](std::int64_t i) {
        try {
            if (opts.allow_ideal) {
                const FieldJet jet = G.jet_extended(pts[i]);
                const Eigen::VectorXd v = (model == Model::Poincare)
                                              ? poincare_formula(jet, pts[i])
                                              : klein_formula(jet, pts[i]);
                mesh.vertices[i] = Eigen::Vector3d(v[0], v[1], v[2]);
                if (jet.rho_valid) {
                    const SchoutenData sch = schouten_from_jet(jet);
                    lmin[i] = sch.lambda.minCoeff();
                    if (sch.lambda.maxCoeff() < 0.5)
                        kmax[i] = kappa_from_lambda(sch.lambda.maxCoeff());
                }
            } else {
                const ImmersionSample s = immerse(G, pts[i], model);
                const Eigen::VectorXd& v = *s.model_coords;
                mesh.vertices[i] = Eigen::Vector3d(v[0], v[1], v[2]);
                kmax[i] = s.kappa.maxCoeff();
                lmin[i] = s.lambda.minCoeff();
            }
        } catch (const HorosphericalConcavityViolated& e) {
            std::lock_guard<std::mutex> lock(bad_mutex);
            if (!bad) {
                std::ostringstream os;
                os << e.what() << " at grid point (" << pts[i].coords().transpose() << ")";
                bad = std::make_exception_ptr(HorosphericalConcavityViolated(os.str()));
            }
        }
    });
    if (bad) std::rethrow_exception(bad);

    const int base = tr.cap_lo ? 1 : 0;
    auto ring_vertex = [&](int row, int j) { return base + row * n_phi + (j % n_phi); };
    if (tr.cap_lo)
        for (int j = 0; j < n_phi; ++j)
            mesh.faces.push_back({0, ring_vertex(0, j), ring_vertex(0, j + 1)});
    for (int r = 0; r + 1 < rows; ++r)
        for (int j = 0; j < n_phi; ++j) {
            const int a = ring_vertex(r, j), b = ring_vertex(r, j + 1);
            const int c = ring_vertex(r + 1, j), d = ring_vertex(r + 1, j + 1);
            mesh.faces.push_back({a, c, d});
            mesh.faces.push_back({a, d, b});
        }
    if (tr.cap_hi) {
        const int south = static_cast<int>(mesh.vertices.size()) - 1;
        for (int j = 0; j < n_phi; ++j)
            mesh.faces.push_back({south, ring_vertex(rows - 1, j + 1), ring_vertex(rows - 1, j)});
    }

    if (!opts.allow_ideal)
        for (const auto& v : mesh.vertices)
            if (!(v.norm() < 1.0))
                throw ModelError("build_mesh: vertex left the unit ball");
    return mesh;
}

void write_obj(const Mesh& mesh, const std::string& path) {
    if (!mesh.allow_ideal)
        for (const auto& v : mesh.vertices)
            if (!(v.norm() < 1.0)) throw ModelError("write_obj: vertex outside the unit ball");
    for (const auto& f : mesh.faces)
        for (int idx : f)
            if (idx < 0 || idx >= static_cast<int>(mesh.vertices.size()))
                throw RangeError("write_obj: face references a missing vertex");

    std::string buf;
    char line[128];
    for (const auto& v : mesh.vertices) {
        std::snprintf(line, sizeof(line), "v %.9g %.9g %.9g\n", v[0], v[1], v[2]);
        buf += line;
    }
    for (const auto& f : mesh.faces) {
        std::snprintf(line, sizeof(line), "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
        buf += line;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_obj: cannot open " + path);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw Error("write_obj: short write to " + path);
}

Mesh read_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("read_obj: cannot open " + path);
    Mesh mesh;
    mesh.allow_ideal = true;  // reader imposes no ball constraint
    std::string tag;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            Eigen::Vector3d v;
            ls >> v[0] >> v[1] >> v[2];
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::array<int, 3> f{};
            ls >> f[0] >> f[1] >> f[2];
            for (int& i : f) --i;
            mesh.faces.push_back(f);
        }
    }
    return mesh;
}

int euler_characteristic(const Mesh& mesh) {
    std::set<std::pair<int, int>> edges;
    for (const auto& f : mesh.faces)
        for (int e = 0; e < 3; ++e) {
            int a = f[e], b = f[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            edges.emplace(a, b);
        }
    return static_cast<int>(mesh.vertices.size()) - static_cast<int>(edges.size())
           + static_cast<int>(mesh.faces.size());
}

}  // namespace horocave
