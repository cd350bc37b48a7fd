#pragma once

#include "mvpose/geometry.hpp"
#include "mvpose/image.hpp"
#include "mvpose/mesh.hpp"

namespace mvpose {

/// One rendered view. `mask` is in [0,1] (exactly {0,1} for the hard
/// render), `nocs` holds per-pixel NOCS triples ((0,0,0) on hard
/// background), `depth` is in meters with +inf on background.
struct RenderOutput {
  FloatImage mask;
  NocsImage nocs;
  FloatImage depth;
};

/// Soft rasterization temperatures. `sigma` scales the squared
/// screen-space distance inside the per-face sigmoid (px^2), `gamma` is
/// the depth-softmax temperature over normalized depths in [0,1], and
/// `background_weight` is the background exponent in the same units.
struct SoftRenderConfig {
  double sigma = 0;
  double gamma = 1e-4;
  double background_weight = 1e-3;
  double near = 0.01;
  double far = 10.0;

  static SoftRenderConfig defaults_for(int width, int height) {
    SoftRenderConfig cfg;
    cfg.sigma = 1e-5 * (static_cast<double>(width) * width +
                        static_cast<double>(height) * height);
    return cfg;
  }
};

/// Gradient of a scalar pixel loss with respect to the pose passed to the
/// renderer: 6D rotation parameters (evaluated at rotation_to_6d of the
/// pose rotation) and translation (per meter).
struct PoseGradient {
  Vec6 d_rot6 = Vec6::Zero();
  Vec3 d_trans = Vec3::Zero();
};

/// Same gradient before the 6D chain: all nine rotation entries treated
/// as free parameters. Used when the caller owns its own rotation
/// parameterization (e.g. optimizing a delta pose).
struct PoseGradientRaw {
  Mat3 d_rotation = Mat3::Zero();
  Vec3 d_translation = Vec3::Zero();
};

// Nearest-face z-buffer with perspective-correct NOCS interpolation.
// Off-screen geometry is clipped; faces with any vertex at z < 1e-9 are
// dropped. Empty output (all background) is valid.
RenderOutput render_hard(const NocsMesh& mesh, const RigidTransform& pose,
                         const CameraIntrinsics& k);

// Soft Rasterizer style differentiable render. Per-face influence is a
// sigmoid of the signed squared screen distance; the silhouette is the
// complement-product over all faces within the influence band. NOCS colors
// are a depth softmax over the faces covering the pixel, weighted by
// coverage max(0, 2*influence - 1) and faded to the (0,0,0) background by
// the coverage complement-product, which keeps the color field C1 in the
// pose everywhere (the silhouette included).
RenderOutput render_soft(const NocsMesh& mesh, const RigidTransform& pose,
                         const CameraIntrinsics& k, const SoftRenderConfig& cfg);

// d(sum_p d_nocs_p . nocs_p + d_mask_p * mask_p)/d(pose), chained through
// the aggregation weights, barycentric coordinates and projection.
PoseGradientRaw render_soft_backward_raw(const NocsMesh& mesh, const RigidTransform& pose,
                                         const CameraIntrinsics& k, const SoftRenderConfig& cfg,
                                         const NocsImage& d_nocs, const FloatImage& d_mask);
PoseGradient render_soft_backward(const NocsMesh& mesh, const RigidTransform& pose,
                                  const CameraIntrinsics& k, const SoftRenderConfig& cfg,
                                  const NocsImage& d_nocs, const FloatImage& d_mask);

// Intersection over union of two masks (binarized at `threshold`); 0 when
// the union is empty. Throws on dimension mismatch.
double iou(const FloatImage& mask_a, const FloatImage& mask_b, double threshold = 0.5);

}  // namespace mvpose
