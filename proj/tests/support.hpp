#pragma once

// Shared test utilities and independent oracles. Everything here must stay
// independent of the implementation paths it is used to check: the ray
// caster below intersects triangles directly and never touches the
// rasterizer.

#include <cmath>
#include <filesystem>
#include <optional>
#include <random>

#include "mvpose/geometry.hpp"
#include "mvpose/mesh.hpp"

namespace mvpose::testing {

inline std::filesystem::path temp_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("mvpose_test_" + tag);
  std::filesystem::create_directories(dir);
  return dir;
}

inline Vec3 random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v(n(rng), n(rng), n(rng));
  while (v.norm() < 1e-6) v = Vec3(n(rng), n(rng), n(rng));
  return v.normalized();
}

inline Mat3 random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  const Vec3 axis = random_unit_vector(rng);
  return Eigen::AngleAxisd(u(rng), axis).toRotationMatrix();
}

inline RigidTransform random_transform(std::mt19937_64& rng, double trans_scale = 1.0) {
  std::uniform_real_distribution<double> u(-trans_scale, trans_scale);
  RigidTransform t;
  t.rotation = random_rotation(rng);
  t.translation = Vec3(u(rng), u(rng), u(rng));
  return t;
}

inline double rotation_geodesic_deg(const Mat3& a, const Mat3& b) {
  const double c = ((a.transpose() * b).trace() - 1.0) / 2.0;
  return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / M_PI;
}

// Moller-Trumbore ray/triangle intersection; returns the ray parameter t.
inline std::optional<double> ray_triangle(const Vec3& origin, const Vec3& dir, const Vec3& a,
                                          const Vec3& b, const Vec3& c) {
  const Vec3 e1 = b - a;
  const Vec3 e2 = c - a;
  const Vec3 h = dir.cross(e2);
  const double det = e1.dot(h);
  if (std::abs(det) < 1e-14) return std::nullopt;
  const double inv = 1.0 / det;
  const Vec3 s = origin - a;
  const double u = s.dot(h) * inv;
  if (u < 0.0 || u > 1.0) return std::nullopt;
  const Vec3 q = s.cross(e1);
  const double v = dir.dot(q) * inv;
  if (v < 0.0 || u + v > 1.0) return std::nullopt;
  const double t = e2.dot(q) * inv;
  if (t <= 0.0) return std::nullopt;
  return t;
}

// Casts the ray of pixel center (px+0.5, py+0.5) against the whole mesh in
// model space; returns the nearest model-space surface point.
inline std::optional<Vec3> cast_pixel_ray(const NocsMesh& mesh, const RigidTransform& pose,
                                          const CameraIntrinsics& k, int px, int py) {
  const Vec3 dir_cam((px + 0.5 - k.cx) / k.fx, (py + 0.5 - k.cy) / k.fy, 1.0);
  const RigidTransform inv_pose = invert(pose);
  const Vec3 origin = inv_pose.translation;
  const Vec3 dir = (inv_pose.rotation * dir_cam).normalized();

  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : mesh.faces) {
    const auto t = ray_triangle(origin, dir, mesh.vertices[f[0]], mesh.vertices[f[1]],
                                mesh.vertices[f[2]]);
    if (t && *t < best) best = *t;
  }
  if (!std::isfinite(best)) return std::nullopt;
  return origin + best * dir;
}

}  // namespace mvpose::testing
