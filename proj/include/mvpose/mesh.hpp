#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mvpose/geometry.hpp"

namespace mvpose {

/// Triangle mesh with per-vertex NOCS colors. `bounds` is the NOCS
/// normalization frame; for decimated meshes it is inherited from the
/// source mesh so the coordinate encoding never shifts.
struct NocsMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<Vec3> vertex_nocs;
  NocsBounds bounds;
  double diameter = 0;
};

// Maximum pairwise distance, exact O(n^2). Throws with fewer than 2 vertices.
double mesh_diameter(std::span<const Vec3> vertices);

// Builds a mesh computing bounds, NOCS colors and diameter from the
// vertices. Throws on empty faces, out-of-range indices or degenerate bounds.
NocsMesh make_nocs_mesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> faces);
// Same but with an externally fixed NOCS frame (decimation path).
NocsMesh make_nocs_mesh_with_bounds(std::vector<Vec3> vertices,
                                    std::vector<std::array<int, 3>> faces,
                                    const NocsBounds& bounds);

// PLY (ascii / binary little endian) or OBJ by extension. Positions and
// triangular faces only; polygons are fan-triangulated.
NocsMesh load_mesh(const std::filesystem::path& path);
void save_mesh_ply(const NocsMesh& mesh, const std::filesystem::path& path);

struct DecimateResult {
  NocsMesh mesh;
  // One-sided Hausdorff distance from sampled points of the input surface
  // to the decimated surface, in meters.
  double hausdorff = 0;
};

// Vertex clustering on a uniform grid sized (by bisection) to land at or
// under the face budget. Bounds are inherited from the input; NOCS colors
// are recomputed from the clustered positions. Inputs already within the
// budget are returned unchanged. target_faces must be >= 4.
DecimateResult decimate_mesh(const NocsMesh& mesh, int target_faces);

// Distance from a point to a triangle (closest point on the triangle).
double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

// Test/demo primitives.
NocsMesh make_icosphere(double radius, int subdivisions);
NocsMesh make_box(const Vec3& extents);

}  // namespace mvpose
