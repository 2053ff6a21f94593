#include <doctest.h>

#include <fstream>

#include "horocave/catalog.hpp"
#include "horocave/mesh.hpp"

using namespace horocave;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}
}  // namespace

TEST_CASE("sphere mesh of the constant field") {
    const auto F = catalog_field("constant", {{"t", 0.7}, {"m", 2}}).field;
    const Mesh mesh = build_mesh(F, Model::Poincare, 24, 48);
    CHECK(euler_characteristic(mesh) == 2);
    // Euclidean sphere of radius tanh(t/2) in the Poincare model
    for (const auto& v : mesh.vertices)
        CHECK(v.norm() == doctest::Approx(std::tanh(0.35)).epsilon(1e-12));
    CHECK(mesh.attributes.at("kappa_max").size() == mesh.vertices.size());
    // attribute carries coth(t)
    CHECK(mesh.attributes.at("kappa_max")[0] == doctest::Approx(1.0 / std::tanh(0.7)).epsilon(1e-9));

    const Mesh big = build_mesh(F, Model::Poincare, 64, 128);
    CHECK(euler_characteristic(big) == 2);
}

TEST_CASE("annular mesh topology and symmetry") {
    const auto F = catalog_field("annulus", {{"m", 2}}).field;
    MeshOptions opts;
    opts.dilate_t = 1.0;
    const Mesh tube = build_mesh(F, Model::Poincare, 16, 40, opts);
    CHECK(euler_characteristic(tube) == 0);

    // rotational symmetry: vertex orbits under the rotation about the axis
    const int nphi = 40;
    for (std::size_t row = 0; row * nphi < tube.vertices.size(); ++row) {
        const Eigen::Vector3d& v0 = tube.vertices[row * nphi];
        for (int j = 1; j < nphi; ++j) {
            const double ang = 2.0 * 3.14159265358979323846 * j / nphi;
            Eigen::Matrix3d rot;
            rot << std::cos(ang), -std::sin(ang), 0, std::sin(ang), std::cos(ang), 0, 0, 0, 1;
            CHECK((tube.vertices[row * nphi + j] - rot * v0).norm() < 1e-9);
        }
    }

    // undilated annulus cannot be immersed; the offending point is reported
    CHECK_THROWS_AS(build_mesh(F, Model::Poincare, 8, 12), HorosphericalConcavityViolated);
}

TEST_CASE("klein tangency of the rotational example") {
    const auto F = catalog_field("rotational_example").field;
    MeshOptions opts;
    opts.allow_ideal = true;
    const Mesh ext = build_mesh(F, Model::Klein, 40, 24, opts);
    double maxn = 0.0;
    for (const auto& v : ext.vertices) maxn = std::max(maxn, v.norm());
    CHECK(maxn == doctest::Approx(1.0).epsilon(1e-6));  // tangent to the ideal boundary
    CHECK(maxn <= 1.0 + 1e-12);

    // without the extension the same mesh stays strictly inside the ball
    const Mesh in = build_mesh(F, Model::Klein, 16, 16);
    for (const auto& v : in.vertices) CHECK(v.norm() < 1.0);
}

TEST_CASE("obj writer") {
    // empty mesh: a valid file with zero v/f lines
    Mesh empty;
    write_obj(empty, "/tmp/horocave_empty.obj");
    CHECK(slurp("/tmp/horocave_empty.obj").empty());

    // single triangle roundtrip: identical floats under the same formatting
    Mesh tri;
    tri.vertices = {{0.1234567891234, -0.5, 0.25}, {0.5, 0.125, -0.75}, {0.0, 0.0, 0.5}};
    tri.faces = {{0, 1, 2}};
    write_obj(tri, "/tmp/horocave_tri.obj");
    const Mesh back = read_obj("/tmp/horocave_tri.obj");
    write_obj(back, "/tmp/horocave_tri2.obj");
    CHECK(slurp("/tmp/horocave_tri.obj") == slurp("/tmp/horocave_tri2.obj"));
    CHECK(back.faces == tri.faces);

    // deterministic output for a real mesh
    const auto F = catalog_field("constant", {{"t", 0.5}, {"m", 2}}).field;
    const Mesh mesh = build_mesh(F, Model::Klein, 12, 18);
    write_obj(mesh, "/tmp/horocave_a.obj");
    write_obj(mesh, "/tmp/horocave_b.obj");
    const std::string a = slurp("/tmp/horocave_a.obj");
    CHECK(!a.empty());
    CHECK(a == slurp("/tmp/horocave_b.obj"));
    CHECK(a.find("\r") == std::string::npos);  // LF endings only

    // vertices outside the ball are rejected unless the mesh is an extension
    Mesh badv;
    badv.vertices = {{1.5, 0, 0}};
    CHECK_THROWS_AS(write_obj(badv, "/tmp/horocave_bad.obj"), ModelError);
    Mesh badf;
    badf.vertices = {{0.1, 0, 0}};
    badf.faces = {{0, 1, 2}};
    CHECK_THROWS_AS(write_obj(badf, "/tmp/horocave_bad.obj"), RangeError);
}

TEST_CASE("mesh rejects bad inputs") {
    const auto F3 = catalog_field("constant", {{"t", 0.5}, {"m", 3}}).field;
    CHECK_THROWS_AS(build_mesh(F3, Model::Poincare, 8, 8), DimensionError);
    const auto F2 = catalog_field("constant", {{"t", 0.5}, {"m", 2}}).field;
    CHECK_THROWS_AS(build_mesh(F2, Model::Hyperboloid, 8, 8), ModelError);
    CHECK_THROWS_AS(build_mesh(F2, Model::Poincare, 1, 8), RangeError);
}
