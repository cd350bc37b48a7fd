#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <span>
#include <vector>

namespace mvpose {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Rigid body transform in SE(3). `rotation` must be orthonormal with
/// determinant +1; `translation` is in meters.
struct RigidTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static RigidTransform identity() { return {}; }
  Mat4 matrix() const;
  static RigidTransform from_matrix(const Mat4& m);
};

// compose(a, b) applies b first, then a.
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);
RigidTransform invert(const RigidTransform& t);
Vec3 transform_point(const RigidTransform& t, const Vec3& p);
bool is_valid_rotation(const Mat3& r, double tol = 1e-6);

/// Continuous rotation parameterization: two free 3-vectors mapped onto
/// SO(3) by Gram-Schmidt. Scale invariant in both arguments.
struct Rotation6D {
  Vec3 a1 = Vec3::UnitX();
  Vec3 a2 = Vec3::UnitY();
};

// Throws std::invalid_argument when a1 ~ 0 or a2 is parallel to a1.
Mat3 rotation_from_6d(const Rotation6D& r);
// Inverse map: first two columns of R. rotation_from_6d(rotation_to_6d(R)) == R.
Rotation6D rotation_to_6d(const Mat3& r);
// Chain rule through the Gram-Schmidt map: given dL/dR (all nine entries
// treated as free) evaluated at parameters `r`, returns dL/d(a1, a2).
Vec6 rotation_6d_backward(const Rotation6D& r, const Mat3& dl_dr);

/// Pinhole camera. Pixel centers sit at integer + 0.5 in continuous
/// coordinates; origin top-left, u rightward, v downward.
struct CameraIntrinsics {
  double fx = 0, fy = 0, cx = 0, cy = 0;
  int width = 0, height = 0;
};

// Throws std::invalid_argument when p_cam.z() <= 0 (behind the camera).
Vec2 project_point(const CameraIntrinsics& k, const Vec3& p_cam);

struct CropRect {
  double x = 0, y = 0, width = 0, height = 0;
};

// New intrinsics such that projecting any 3D point with them lands at the
// position the old projection maps to after cropping and resampling.
CameraIntrinsics rescale_intrinsics(const CameraIntrinsics& k, const CropRect& crop,
                                    int target_w, int target_h);

/// Axis-aligned model-space bounds used by the NOCS normalization. The
/// extent must be strictly positive on every axis.
struct NocsBounds {
  Vec3 min_d = Vec3::Zero();
  Vec3 max_d = Vec3::Ones();

  Vec3 extent() const { return max_d - min_d; }
};

// Per-axis min/max over the vertices. Throws on an empty list or when any
// axis has zero extent (planar or single-point sets).
NocsBounds nocs_bounds(std::span<const Vec3> vertices);

// (p - min) / (max - min) per axis. Out-of-bounds points map outside [0,1].
Vec3 nocs_project(const NocsBounds& b, const Vec3& p);
// Exact inverse of nocs_project.
Vec3 nocs_unproject(const NocsBounds& b, const Vec3& n);

}  // namespace mvpose
