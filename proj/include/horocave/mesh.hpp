#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "horocave/immersion.hpp"

namespace horocave {

/// Triangle mesh of an immersed surface (m = 2) in ball-model coordinates,
/// with per-vertex scalar attributes. Vertices stay strictly inside the unit
/// ball unless the mesh was built with the ideal extension enabled.
struct Mesh {
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 3>> faces;  // 0-based indices
    std::map<std::string, std::vector<double>> attributes;
    bool allow_ideal = false;
};

struct MeshOptions {
    double dilate_t = 0.0;   // dilation applied before immersing
    bool allow_ideal = false;  // evaluate the smooth extension past the domain
};

/// Latitude-longitude mesh of the immersed surface of a rotationally
/// sampled m = 2 field. n_theta counts latitude steps, n_phi longitude
/// steps. Closed domains produce genus-0 meshes (Euler characteristic 2),
/// annular domains produce tubes (Euler characteristic 0). With allow_ideal
/// the ball-model representation formula is evaluated directly from the
/// sigma-jet over the whole rotational range, which extends the surface
/// smoothly across the ideal boundary.
Mesh build_mesh(const ConformalFactorField& F, Model model, int n_theta, int n_phi,
                const MeshOptions& opts = {});

/// OBJ writer: lines `v %.9g %.9g %.9g`, then `f i j k` (1-based), LF line
/// endings. Deterministic: identical meshes produce byte-identical files.
void write_obj(const Mesh& mesh, const std::string& path);

/// Parses a file produced by write_obj (vertices and faces only).
Mesh read_obj(const std::string& path);

/// V - E + F with E counted over unique undirected edges.
int euler_characteristic(const Mesh& mesh);

}  // namespace horocave
