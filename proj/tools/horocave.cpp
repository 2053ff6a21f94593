// Command-line driver: evaluate catalog fields, immerse and flow them,
// run sweep probes, export meshes, and run the verification suites.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "horocave/mesh.hpp"
#include "horocave/probe.hpp"
#include "horocave/verify.hpp"

namespace hc = horocave;

namespace {

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw hc::ConfigError("--param expects key=value, got: " + kv);
        out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return out;
}

hc::SpherePoint parse_point(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(vals.data(), vals.size());
    return hc::SpherePoint::normalized(v);
}

hc::Model parse_model(const std::string& name) {
    if (name == "hyperboloid") return hc::Model::Hyperboloid;
    if (name == "poincare") return hc::Model::Poincare;
    if (name == "klein") return hc::Model::Klein;
    throw hc::ConfigError("unknown model: " + name);
}

std::string point_tag(const hc::SpherePoint& x) {
    std::ostringstream os;
    os.precision(6);
    os << "(";
    for (int i = 0; i < x.ambient_dim(); ++i) os << (i ? "," : "") << x[i];
    os << ")";
    return os.str();
}

void info(hc::RecordSink& sink, const std::string& check, const std::string& field,
          const std::string& point, double value) {
    sink.emit({check, field, point, value, value, 0.0, true});
}

struct FieldArgs {
    std::string name = "constant";
    std::vector<std::string> params;
    double dilate_t = 0.0;

    hc::ConformalFactorField build(std::string* tag = nullptr) const {
        hc::CatalogEntry entry = hc::catalog_field(name, parse_params(params));
        if (tag) *tag = name;
        return dilate_t != 0.0 ? hc::dilate(entry.field, dilate_t) : entry.field;
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--field", name, "catalog field name")->capture_default_str();
        cmd->add_option("--param", params, "field parameter key=value (repeatable)");
        cmd->add_option("--dilate", dilate_t, "dilate the field by t before anything else");
    }
};

void emit_sample(hc::RecordSink& sink, const std::string& tag, const hc::SpherePoint& x,
                 const hc::ImmersionSample& s, const std::optional<hc::Model>& model) {
    const std::string pt = point_tag(x);
    info(sink, "phi_x0", tag, pt, s.phi.x0);
    for (int i = 0; i < s.phi.xs.size(); ++i)
        info(sink, "phi_x" + std::to_string(i + 1), tag, pt, s.phi.xs[i]);
    for (int i = 0; i < s.kappa.size(); ++i)
        info(sink, "kappa_" + std::to_string(i + 1), tag, pt, s.kappa[i]);
    for (int i = 0; i < s.lambda.size(); ++i)
        info(sink, "lambda_" + std::to_string(i + 1), tag, pt, s.lambda[i]);
    if (s.model_coords && model) {
        for (int i = 0; i < s.model_coords->size(); ++i)
            info(sink, std::string(hc::model_name(*model)) + "_" + std::to_string(i + 1), tag, pt,
                 (*s.model_coords)[i]);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"horospherically concave hypersurfaces from conformal metrics"};
    app.set_config("--config", "", "key = value configuration file; flags override");
    app.require_subcommand(1);

    hc::RecordSink sink(&std::cout);

    // --- eval ---------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "curvature quantities of a field at a point");
    FieldArgs eval_field;
    eval_field.attach(eval);
    std::string eval_point;
    eval->add_option("--point", eval_point, "comma-separated ambient coordinates")->required();
    eval->callback([&] {
        std::string tag;
        const hc::ConformalFactorField F = eval_field.build(&tag);
        const hc::SpherePoint x = parse_point(eval_point);
        const std::string pt = point_tag(x);
        const hc::FieldJet jet = F.jet(x);
        info(sink, "sigma", tag, pt, jet.sigma);
        info(sink, "rho", tag, pt, jet.rho);
        const hc::SchoutenData sch = hc::schouten_from_jet(jet);
        for (int i = 0; i < sch.lambda.size(); ++i)
            info(sink, "lambda_" + std::to_string(i + 1), tag, pt, sch.lambda[i]);
        if (F.sphere_dim() >= 3)
            info(sink, "R", tag, pt, hc::scalar_curvature(F, x));
        else
            info(sink, "K", tag, pt, hc::gauss_curvature_2d(F, x));
        info(sink, "properness_indicator", tag, pt, hc::properness_indicator(F, x));
    });

    // --- immerse ------------------------------------------------------
    auto* imm = app.add_subcommand("immerse", "representation-formula image of a point");
    FieldArgs imm_field;
    imm_field.attach(imm);
    std::string imm_point, imm_model = "hyperboloid";
    imm->add_option("--point", imm_point)->required();
    imm->add_option("--model", imm_model, "hyperboloid|poincare|klein");
    imm->callback([&] {
        std::string tag;
        const hc::ConformalFactorField F = imm_field.build(&tag);
        const hc::SpherePoint x = parse_point(imm_point);
        const hc::Model model = parse_model(imm_model);
        emit_sample(sink, tag, x, hc::immerse(F, x, model), model);
    });

    // --- flow ---------------------------------------------------------
    auto* flow = app.add_subcommand("flow", "parallel flow of the immersion");
    FieldArgs flow_field;
    flow_field.attach(flow);
    std::string flow_point, flow_model = "hyperboloid";
    double flow_t = 0.0;
    flow->add_option("--t", flow_t, "flow time (>= 0)")->required();
    flow->add_option("--point", flow_point)->required();
    flow->add_option("--model", flow_model);
    flow->callback([&] {
        std::string tag;
        const hc::ConformalFactorField F = flow_field.build(&tag);
        const hc::SpherePoint x = parse_point(flow_point);
        const hc::Model model = parse_model(flow_model);
        emit_sample(sink, tag, x, hc::parallel_flow(F, flow_t, x, model), model);
    });

    // --- probe --------------------------------------------------------
    auto* probe = app.add_subcommand("probe", "first-contact sweep against a reference family");
    FieldArgs probe_field;
    probe_field.attach(probe);
    std::string family = "horosphere";
    double probe_t = 0.0, s_lo = -3.0, s_hi = 3.0;
    int grid_n = 1000;
    probe->add_option("--family", family, "horosphere|equidistant|umbilic");
    probe->add_option("--t", probe_t, "flow time applied to the surface");
    probe->add_option("--grid", grid_n, "grid size (>= 10^3 recommended)");
    probe->add_option("--s-lo", s_lo);
    probe->add_option("--s-hi", s_hi);
    probe->callback([&] {
        std::string tag;
        const hc::ConformalFactorField F = probe_field.build(&tag);
        const int m = F.sphere_dim();
        if (family != "horosphere" && family != "equidistant" && family != "umbilic")
            throw hc::ConfigError("unknown family: " + family);
        hc::SweepFamily fam = family == "equidistant" ? hc::equidistant_family(m, s_lo, s_hi)
                              : family == "umbilic"
                                  ? hc::umbilic_family(hc::MinkowskiVec{1.0,
                                                       Eigen::VectorXd::Zero(m + 1)},
                                                       std::max(1e-3, s_lo), s_hi)
                                  : hc::horosphere_family(hc::north_pole(m), s_lo, s_hi);
        const auto grid = hc::probe_grid(F.domain(), grid_n);
        const auto surf = hc::sample_immersion(F, probe_t, grid);
        const hc::ContactResult res = hc::first_contact(surf, fam);
        info(sink, "first_contact_s1", tag, fam.name, res.s1);
        info(sink, "witness_" + std::string(res.boundary_contact ? "boundary" : "interior"), tag,
             point_tag(res.witness), res.s1);
        info(sink, "degenerate_tangency", tag, fam.name, res.degenerate_tangency ? 1.0 : 0.0);
    });

    // --- mesh ---------------------------------------------------------
    auto* mesh = app.add_subcommand("mesh", "OBJ export of an m = 2 surface");
    FieldArgs mesh_field;
    mesh_field.attach(mesh);
    std::string mesh_model = "poincare", mesh_out, mesh_res = "64x128";
    bool allow_ideal = false;
    mesh->add_option("--model", mesh_model, "poincare|klein");
    mesh->add_option("--out", mesh_out, "output OBJ path")->required();
    mesh->add_option("--res", mesh_res, "NTHETAxNPHI");
    mesh->add_flag("--allow-ideal", allow_ideal, "mesh the smooth extension past the ideal boundary");
    mesh->callback([&] {
        std::string tag;
        hc::CatalogEntry entry = hc::catalog_field(mesh_field.name,
                                                   parse_params(mesh_field.params));
        const auto xpos = mesh_res.find('x');
        if (xpos == std::string::npos) throw hc::ConfigError("--res expects NTHETAxNPHI");
        const int nt = std::stoi(mesh_res.substr(0, xpos));
        const int np = std::stoi(mesh_res.substr(xpos + 1));
        hc::MeshOptions opts;
        opts.dilate_t = mesh_field.dilate_t;
        opts.allow_ideal = allow_ideal;
        const hc::Mesh m = hc::build_mesh(entry.field, parse_model(mesh_model), nt, np, opts);
        hc::write_obj(m, mesh_out);
        info(sink, "mesh_vertices", mesh_field.name, mesh_out, static_cast<double>(m.vertices.size()));
        info(sink, "mesh_faces", mesh_field.name, mesh_out, static_cast<double>(m.faces.size()));
        info(sink, "mesh_euler", mesh_field.name, mesh_out,
             static_cast<double>(hc::euler_characteristic(m)));
    });

    // --- verify -------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    bool inject = false;
    verify->add_option("--suite", suite, "identities|catalog|cones|boundary|probe|mesh|all");
    verify->add_flag("--inject-error", inject, "perturb the lambda-kappa map (harness sanity)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // malformed invocation is a configuration error
    } catch (const hc::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const hc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (verify->parsed()) {
        hc::VerifyOptions opts;
        opts.inject_error = inject;
        opts.out = &std::cout;
        return hc::run_verify(suite, opts);
    }
    return 0;
}
