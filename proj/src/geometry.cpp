#include "mvpose/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace mvpose {

Mat4 RigidTransform::matrix() const {
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = rotation;
  m.topRightCorner<3, 1>() = translation;
  return m;
}

RigidTransform RigidTransform::from_matrix(const Mat4& m) {
  RigidTransform t;
  t.rotation = m.topLeftCorner<3, 3>();
  t.translation = m.topRightCorner<3, 1>();
  return t;
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
  RigidTransform out;
  out.rotation = a.rotation * b.rotation;
  out.translation = a.rotation * b.translation + a.translation;
  return out;
}

RigidTransform invert(const RigidTransform& t) {
  RigidTransform out;
  out.rotation = t.rotation.transpose();
  out.translation = -(out.rotation * t.translation);
  return out;
}

Vec3 transform_point(const RigidTransform& t, const Vec3& p) {
  return t.rotation * p + t.translation;
}

bool is_valid_rotation(const Mat3& r, double tol) {
  const Mat3 rtr = r.transpose() * r;
  return (rtr - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

Mat3 rotation_from_6d(const Rotation6D& r) {
  const double n1 = r.a1.norm();
  if (n1 < 1e-9) {
    throw std::invalid_argument("rotation_from_6d: a1 is (near) zero");
  }
  const Vec3 b1 = r.a1 / n1;
  const Vec3 u = r.a2 - b1.dot(r.a2) * b1;
  const double nu = u.norm();
  if (nu < 1e-9) {
    throw std::invalid_argument("rotation_from_6d: a2 is (near) parallel to a1");
  }
  const Vec3 b2 = u / nu;
  const Vec3 b3 = b1.cross(b2);
  Mat3 out;
  out.col(0) = b1;
  out.col(1) = b2;
  out.col(2) = b3;
  return out;
}

Rotation6D rotation_to_6d(const Mat3& r) {
  return Rotation6D{r.col(0), r.col(1)};
}

Vec6 rotation_6d_backward(const Rotation6D& r, const Mat3& dl_dr) {
  const double n1 = r.a1.norm();
  const Vec3 b1 = r.a1 / n1;
  const double proj = b1.dot(r.a2);
  const Vec3 u = r.a2 - proj * b1;
  const double nu = u.norm();
  const Vec3 b2 = u / nu;

  const Vec3 g_b3 = dl_dr.col(2);
  // b3 = b1 x b2  =>  db3 = db1 x b2 + b1 x db2.
  const Vec3 g_b2 = dl_dr.col(1) + g_b3.cross(b1);
  const Vec3 g_b1_from_b3 = b2.cross(g_b3);

  // b2 = u / |u|.
  const Vec3 g_u = (g_b2 - b2 * b2.dot(g_b2)) / nu;
  // u = a2 - (b1 . a2) b1.
  const Vec3 g_a2 = g_u - b1 * b1.dot(g_u);
  const Vec3 g_b1_from_u = -(r.a2 * b1.dot(g_u) + proj * g_u);

  const Vec3 g_b1 = dl_dr.col(0) + g_b1_from_b3 + g_b1_from_u;
  // b1 = a1 / |a1|.
  const Vec3 g_a1 = (g_b1 - b1 * b1.dot(g_b1)) / n1;

  Vec6 out;
  out.head<3>() = g_a1;
  out.tail<3>() = g_a2;
  return out;
}

Vec2 project_point(const CameraIntrinsics& k, const Vec3& p_cam) {
  if (p_cam.z() <= 0.0) {
    throw std::invalid_argument("project_point: point is behind the camera");
  }
  return Vec2(k.fx * p_cam.x() / p_cam.z() + k.cx,
              k.fy * p_cam.y() / p_cam.z() + k.cy);
}

CameraIntrinsics rescale_intrinsics(const CameraIntrinsics& k, const CropRect& crop,
                                    int target_w, int target_h) {
  if (crop.width <= 0 || crop.height <= 0 || target_w <= 0 || target_h <= 0) {
    throw std::invalid_argument("rescale_intrinsics: empty crop or target");
  }
  const double sx = static_cast<double>(target_w) / crop.width;
  const double sy = static_cast<double>(target_h) / crop.height;
  CameraIntrinsics out;
  out.fx = k.fx * sx;
  out.fy = k.fy * sy;
  out.cx = (k.cx - crop.x) * sx;
  out.cy = (k.cy - crop.y) * sy;
  out.width = target_w;
  out.height = target_h;
  return out;
}

NocsBounds nocs_bounds(std::span<const Vec3> vertices) {
  if (vertices.empty()) {
    throw std::invalid_argument("nocs_bounds: empty vertex list");
  }
  NocsBounds b;
  b.min_d = b.max_d = vertices[0];
  for (const Vec3& v : vertices) {
    b.min_d = b.min_d.cwiseMin(v);
    b.max_d = b.max_d.cwiseMax(v);
  }
  for (int i = 0; i < 3; ++i) {
    if (!(b.max_d[i] > b.min_d[i])) {
      throw std::invalid_argument("nocs_bounds: degenerate extent on an axis");
    }
  }
  return b;
}

Vec3 nocs_project(const NocsBounds& b, const Vec3& p) {
  return (p - b.min_d).cwiseQuotient(b.extent());
}

Vec3 nocs_unproject(const NocsBounds& b, const Vec3& n) {
  return b.min_d + n.cwiseProduct(b.extent());
}

}  // namespace mvpose
