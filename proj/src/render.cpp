#include "mvpose/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mvpose {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Per-face influence is cut off where the sigmoid tail drops below 1e-12,
// i.e. at squared-distance/sigma = ln(1e12). A tighter cut leaves a
// discontinuity large enough to violate the finite-difference gradient
// contract.
constexpr double kCutoffSq = 27.631021115928547;  // ln(1e12)
constexpr double kMinDepth = 1e-9;

double sigmoid(double x) {
  if (x >= 0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

struct ProjectedVert {
  double u = 0, v = 0, z = 0;
};

struct ProjectedMesh {
  std::vector<ProjectedVert> verts;
  std::vector<uint8_t> face_ok;
};

ProjectedMesh project_mesh(const NocsMesh& mesh, const RigidTransform& pose,
                           const CameraIntrinsics& k, double min_depth) {
  ProjectedMesh out;
  out.verts.resize(mesh.vertices.size());
  std::vector<uint8_t> vert_ok(mesh.vertices.size(), 0);
  for (size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Vec3 p = transform_point(pose, mesh.vertices[i]);
    if (p.z() >= min_depth) {
      vert_ok[i] = 1;
      out.verts[i] = {k.fx * p.x() / p.z() + k.cx, k.fy * p.y() / p.z() + k.cy, p.z()};
    }
  }
  out.face_ok.resize(mesh.faces.size(), 0);
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& face = mesh.faces[f];
    out.face_ok[f] = vert_ok[face[0]] && vert_ok[face[1]] && vert_ok[face[2]];
  }
  return out;
}

struct TileGrid {
  static constexpr int kTileSize = 16;
  int tiles_x = 0, tiles_y = 0;
  std::vector<std::vector<int>> bins;

  const std::vector<int>& at(int px, int py) const {
    return bins[static_cast<size_t>(py / kTileSize) * tiles_x + px / kTileSize];
  }
};

TileGrid bin_faces(const NocsMesh& mesh, const ProjectedMesh& pm, const CameraIntrinsics& k,
                   double margin) {
  TileGrid grid;
  grid.tiles_x = (k.width + TileGrid::kTileSize - 1) / TileGrid::kTileSize;
  grid.tiles_y = (k.height + TileGrid::kTileSize - 1) / TileGrid::kTileSize;
  grid.bins.assign(static_cast<size_t>(grid.tiles_x) * grid.tiles_y, {});
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    if (!pm.face_ok[f]) continue;
    const auto& face = mesh.faces[f];
    double min_u = kInf, max_u = -kInf, min_v = kInf, max_v = -kInf;
    for (int idx : face) {
      min_u = std::min(min_u, pm.verts[idx].u);
      max_u = std::max(max_u, pm.verts[idx].u);
      min_v = std::min(min_v, pm.verts[idx].v);
      max_v = std::max(max_v, pm.verts[idx].v);
    }
    if (max_u + margin < 0 || max_v + margin < 0 || min_u - margin > k.width ||
        min_v - margin > k.height) {
      continue;
    }
    const int x0 = std::max(0, static_cast<int>(std::floor(min_u - margin)) / TileGrid::kTileSize);
    const int y0 = std::max(0, static_cast<int>(std::floor(min_v - margin)) / TileGrid::kTileSize);
    const int x1 = std::min(grid.tiles_x - 1,
                            static_cast<int>(std::floor(max_u + margin)) / TileGrid::kTileSize);
    const int y1 = std::min(grid.tiles_y - 1,
                            static_cast<int>(std::floor(max_v + margin)) / TileGrid::kTileSize);
    for (int ty = y0; ty <= y1; ++ty) {
      for (int tx = x0; tx <= x1; ++tx) {
        grid.bins[static_cast<size_t>(ty) * grid.tiles_x + tx].push_back(static_cast<int>(f));
      }
    }
  }
  return grid;
}

// Geometry of one (face, pixel) pair. The field phi is a signed
// distance-like value, positive inside:
//   - inside, the harmonic mean-style combination 1/sum(1/l_e) of the
//     three edge-line distances: smooth (no medial-axis slope kinks, which
//     break finite-difference agreement when composed with the influence
//     sigmoid), exactly zero on the boundary, slope 1 across regular
//     boundary points, and continuous when a face sweeps through edge-on;
//   - outside, the exact point-to-triangle distance, which is C1 there.
// Corner slope mismatches sit at phi = 0 where the squared composition in
// the sigmoid has zero slope, so the influence stays C1.
struct FacePixel {
  int face = -1;
  bool inside = false;
  double phi = 0;  // signed field, positive inside
  // inside branch terms
  double line_dist[3] = {0, 0, 0};   // |cross|/len per edge
  double line_sign[3] = {0, 0, 0};   // sign of cross per edge
  // outside branch terms (nearest feature: edge e joins verts e, (e+1)%3)
  int near_edge = 0;
  double near_t = 0;
  Vec2 n_dir = Vec2::Zero();  // (pixel - nearest)/|d|
  double beta[3] = {0, 0, 0};      // raw barycentrics
  double inv_a[4] = {0, 0, 0, 0};  // A^{-1} of the barycentric system, row-major
  // Perspective interpolation (covering faces only).
  double rho[3] = {0, 0, 0};
  double z_interp = 0;
  double z_norm = 0;
  bool z_norm_interior = true;
  // Aggregation terms.
  double influence = 0;  // D = sigmoid(phi*|phi|/sigma)
  double coverage = 0;   // max(0, 2D - 1), positive only inside
  double depth_exp = 0;  // exp((z_norm - m)/gamma)
  Vec3 color = Vec3::Zero();
};

// Signed field and barycentrics of pixel p against a projected face.
// Returns false when the face is degenerate in screen space or beyond the
// influence cutoff.
bool face_pixel_geometry(const ProjectedVert* pv[3], const Vec2& p, double sigma,
                         FacePixel* out) {
  const Vec2 v0(pv[0]->u, pv[0]->v), v1(pv[1]->u, pv[1]->v), v2(pv[2]->u, pv[2]->v);
  const Vec2 e1 = v1 - v0, e2 = v2 - v0;
  const double det = e1.x() * e2.y() - e1.y() * e2.x();
  if (std::abs(det) < 1e-14) return false;

  const Vec2 verts[3] = {v0, v1, v2};
  double exact_sq = kInf;
  int pos = 0, neg = 0;
  for (int e = 0; e < 3; ++e) {
    const Vec2& a = verts[e];
    const Vec2& b = verts[(e + 1) % 3];
    const Vec2 ab = b - a;
    const double len_sq = ab.squaredNorm();
    const double len = std::sqrt(len_sq);
    const double cross = ab.x() * (p.y() - a.y()) - ab.y() * (p.x() - a.x());
    out->line_sign[e] = cross >= 0 ? 1.0 : -1.0;
    out->line_dist[e] = std::abs(cross) / len;
    (cross > 0 ? pos : neg) += 1;

    double t = len_sq > 0 ? (p - a).dot(ab) / len_sq : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 q = a + t * ab;
    const double d_sq = (p - q).squaredNorm();
    if (d_sq < exact_sq) {
      exact_sq = d_sq;
      out->near_edge = e;
      out->near_t = t;
      out->n_dir = p - q;
    }
  }

  // Strictly inside iff the pixel is on the same side of all three edge
  // lines (winding independent).
  out->inside = pos == 3 || neg == 3;
  if (out->inside) {
    const double inv_sum = 1.0 / out->line_dist[0] + 1.0 / out->line_dist[1] +
                           1.0 / out->line_dist[2];
    out->phi = 1.0 / inv_sum;
  } else {
    if (exact_sq > kCutoffSq * sigma) return false;
    out->phi = -std::sqrt(exact_sq);
    if (exact_sq > 1e-24) {
      out->n_dir /= std::sqrt(exact_sq);
    } else {
      out->n_dir = Vec2::Zero();
    }
  }

  const Vec2 rel = p - v0;
  out->beta[1] = (rel.x() * e2.y() - rel.y() * e2.x()) / det;
  out->beta[2] = (e1.x() * rel.y() - e1.y() * rel.x()) / det;
  out->beta[0] = 1.0 - out->beta[1] - out->beta[2];
  out->inv_a[0] = e2.y() / det;
  out->inv_a[1] = -e2.x() / det;
  out->inv_a[2] = -e1.y() / det;
  out->inv_a[3] = e1.x() / det;
  return true;
}

// Fills influence/coverage and, for covering faces, the perspective terms.
void fill_face_terms(const NocsMesh& mesh, const std::array<int, 3>& face,
                     const ProjectedVert* pv[3], const SoftRenderConfig& cfg, FacePixel* fp) {
  fp->influence = sigmoid(fp->phi * std::abs(fp->phi) / cfg.sigma);
  fp->coverage = fp->inside ? std::max(0.0, 2.0 * fp->influence - 1.0) : 0.0;
  if (!fp->inside) return;

  double sum = 0;
  Vec3 premul = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    fp->rho[i] = fp->beta[i] / pv[i]->z;
    sum += fp->rho[i];
    premul += fp->rho[i] * mesh.vertex_nocs[face[i]];
  }
  fp->z_interp = 1.0 / sum;
  fp->color = premul * fp->z_interp;
  const double zn = (cfg.far - fp->z_interp) / (cfg.far - cfg.near);
  fp->z_norm = std::clamp(zn, 0.0, 1.0);
  fp->z_norm_interior = zn > 0.0 && zn < 1.0;
}

struct PixelAggregate {
  double mask = 0;
  double cover = 0;      // S_cov = 1 - prod(1 - coverage)
  double denom = 0;      // sum A_j + guard
  Vec3 color_faces = Vec3::Zero();
  Vec3 color = Vec3::Zero();
  double depth = kInf;
  double m = 0;  // stabilization shift of the depth exponent
};

// Shared forward combine over the pixel's candidate list. Color is a
// depth-softmax over covering faces, faded to the (0,0,0) background by the
// coverage product; the mask is the influence complement-product over every
// candidate, covering or not.
PixelAggregate combine(std::vector<FacePixel>& cands, const SoftRenderConfig& cfg) {
  PixelAggregate agg;
  double one_minus_mask = 1.0;
  double one_minus_cover = 1.0;
  agg.m = cfg.background_weight;
  for (const FacePixel& fp : cands) {
    one_minus_mask *= 1.0 - fp.influence;
    if (fp.coverage > 0) {
      one_minus_cover *= 1.0 - fp.coverage;
      agg.m = std::max(agg.m, fp.z_norm);
    }
  }
  agg.mask = 1.0 - one_minus_mask;
  agg.cover = 1.0 - one_minus_cover;

  agg.denom = std::exp((cfg.background_weight - agg.m) / cfg.gamma);
  Vec3 color_sum = Vec3::Zero();
  double depth_sum = 0;
  double a_total = 0;
  for (FacePixel& fp : cands) {
    if (fp.coverage <= 0) continue;
    fp.depth_exp = std::exp((fp.z_norm - agg.m) / cfg.gamma);
    const double a = fp.coverage * fp.depth_exp;
    agg.denom += a;
    a_total += a;
    color_sum += a * fp.color;
    depth_sum += a * fp.z_interp;
  }
  if (a_total > 0) {
    agg.color_faces = color_sum / agg.denom;
    agg.color = agg.cover * agg.color_faces;
    agg.depth = depth_sum / a_total;
  }
  return agg;
}

}  // namespace

RenderOutput render_hard(const NocsMesh& mesh, const RigidTransform& pose,
                         const CameraIntrinsics& k) {
  const ProjectedMesh pm = project_mesh(mesh, pose, k, kMinDepth);
  const TileGrid grid = bin_faces(mesh, pm, k, 1.0);

  RenderOutput out;
  out.mask = FloatImage(k.width, k.height, 0.0);
  out.nocs = NocsImage(k.width, k.height, Vec3::Zero());
  out.depth = FloatImage(k.width, k.height, kInf);

  for (int y = 0; y < k.height; ++y) {
    for (int x = 0; x < k.width; ++x) {
      const Vec2 p(x + 0.5, y + 0.5);
      double best_z = kInf;
      Vec3 best_color = Vec3::Zero();
      for (int f : grid.at(x, y)) {
        const auto& face = mesh.faces[f];
        const ProjectedVert* pv[3] = {&pm.verts[face[0]], &pm.verts[face[1]],
                                      &pm.verts[face[2]]};
        const Vec2 v0(pv[0]->u, pv[0]->v);
        const Vec2 e1(pv[1]->u - v0.x(), pv[1]->v - v0.y());
        const Vec2 e2(pv[2]->u - v0.x(), pv[2]->v - v0.y());
        const double det = e1.x() * e2.y() - e1.y() * e2.x();
        if (std::abs(det) < 1e-14) continue;
        const Vec2 rel = p - v0;
        const double b1 = (rel.x() * e2.y() - rel.y() * e2.x()) / det;
        const double b2 = (e1.x() * rel.y() - e1.y() * rel.x()) / det;
        const double b0 = 1.0 - b1 - b2;
        if (b0 < 0 || b1 < 0 || b2 < 0) continue;
        const double beta[3] = {b0, b1, b2};
        double sum = 0;
        Vec3 color = Vec3::Zero();
        for (int i = 0; i < 3; ++i) {
          const double rho = beta[i] / pv[i]->z;
          sum += rho;
          color += rho * mesh.vertex_nocs[face[i]];
        }
        const double z = 1.0 / sum;
        if (z < best_z) {
          best_z = z;
          best_color = color * z;
        }
      }
      if (best_z < kInf) {
        out.mask.at(x, y) = 1.0;
        out.depth.at(x, y) = best_z;
        out.nocs.at(x, y) = best_color;
      }
    }
  }
  return out;
}

RenderOutput render_soft(const NocsMesh& mesh, const RigidTransform& pose,
                         const CameraIntrinsics& k, const SoftRenderConfig& cfg) {
  const ProjectedMesh pm = project_mesh(mesh, pose, k, cfg.near);
  const double cutoff = std::sqrt(kCutoffSq * cfg.sigma);
  const TileGrid grid = bin_faces(mesh, pm, k, cutoff + 1.0);

  RenderOutput out;
  out.mask = FloatImage(k.width, k.height, 0.0);
  out.nocs = NocsImage(k.width, k.height, Vec3::Zero());
  out.depth = FloatImage(k.width, k.height, kInf);

  std::vector<FacePixel> cands;
  cands.reserve(64);

  for (int y = 0; y < k.height; ++y) {
    for (int x = 0; x < k.width; ++x) {
      const Vec2 p(x + 0.5, y + 0.5);
      cands.clear();
      for (int f : grid.at(x, y)) {
        const auto& face = mesh.faces[f];
        const ProjectedVert* pv[3] = {&pm.verts[face[0]], &pm.verts[face[1]],
                                      &pm.verts[face[2]]};
        FacePixel fp;
        if (!face_pixel_geometry(pv, p, cfg.sigma, &fp)) continue;
        fp.face = f;
        fill_face_terms(mesh, face, pv, cfg, &fp);
        cands.push_back(fp);
      }
      if (cands.empty()) continue;
      const PixelAggregate agg = combine(cands, cfg);
      out.mask.at(x, y) = agg.mask;
      out.nocs.at(x, y) = agg.color;
      out.depth.at(x, y) = agg.depth;
    }
  }
  return out;
}

PoseGradientRaw render_soft_backward_raw(const NocsMesh& mesh, const RigidTransform& pose,
                                         const CameraIntrinsics& k, const SoftRenderConfig& cfg,
                                         const NocsImage& d_nocs, const FloatImage& d_mask) {
  if (!d_nocs.same_size(k.width, k.height) || !d_mask.same_size(k.width, k.height)) {
    throw std::invalid_argument("render_soft_backward: upstream dimensions mismatch");
  }

  const ProjectedMesh pm = project_mesh(mesh, pose, k, cfg.near);
  const double cutoff = std::sqrt(kCutoffSq * cfg.sigma);
  const TileGrid grid = bin_faces(mesh, pm, k, cutoff + 1.0);

  const size_t n_verts = mesh.vertices.size();
  std::vector<Vec2> g_uv(n_verts, Vec2::Zero());
  std::vector<double> g_z(n_verts, 0.0);

  std::vector<FacePixel> cands;
  cands.reserve(64);
  std::vector<double> mask_pre, mask_suf, cov_pre, cov_suf;

  const double inv_range = 1.0 / (cfg.far - cfg.near);

  for (int y = 0; y < k.height; ++y) {
    for (int x = 0; x < k.width; ++x) {
      const Vec3 g_color_up = d_nocs.at(x, y);
      const double g_mask_up = d_mask.at(x, y);
      if (g_color_up.isZero(0.0) && g_mask_up == 0.0) continue;

      const Vec2 p(x + 0.5, y + 0.5);
      cands.clear();
      for (int f : grid.at(x, y)) {
        const auto& face = mesh.faces[f];
        const ProjectedVert* pv[3] = {&pm.verts[face[0]], &pm.verts[face[1]],
                                      &pm.verts[face[2]]};
        FacePixel fp;
        if (!face_pixel_geometry(pv, p, cfg.sigma, &fp)) continue;
        fp.face = f;
        fill_face_terms(mesh, face, pv, cfg, &fp);
        cands.push_back(fp);
      }
      if (cands.empty()) continue;
      const PixelAggregate agg = combine(cands, cfg);

      const size_t n = cands.size();
      // dS/dD_j and dS_cov/dcoverage_j via prefix/suffix products.
      mask_pre.assign(n + 1, 1.0);
      mask_suf.assign(n + 1, 1.0);
      cov_pre.assign(n + 1, 1.0);
      cov_suf.assign(n + 1, 1.0);
      for (size_t i = 0; i < n; ++i) {
        mask_pre[i + 1] = mask_pre[i] * (1.0 - cands[i].influence);
        cov_pre[i + 1] = cov_pre[i] * (1.0 - cands[i].coverage);
      }
      for (size_t i = n; i-- > 0;) {
        mask_suf[i] = mask_suf[i + 1] * (1.0 - cands[i].influence);
        cov_suf[i] = cov_suf[i + 1] * (1.0 - cands[i].coverage);
      }

      // color = S_cov * color_faces (background is the NOCS origin).
      const Vec3 g_color_faces = g_color_up * agg.cover;
      const double g_cover = g_color_up.dot(agg.color_faces);

      for (size_t i = 0; i < n; ++i) {
        const FacePixel& fp = cands[i];
        const auto& face = mesh.faces[fp.face];
        const ProjectedVert* pv[3] = {&pm.verts[face[0]], &pm.verts[face[1]],
                                      &pm.verts[face[2]]};

        double g_infl = g_mask_up * mask_pre[i] * mask_suf[i + 1];

        if (fp.coverage > 0) {
          const double amp = fp.coverage * fp.depth_exp;
          const double g_a = g_color_faces.dot(fp.color - agg.color_faces) / agg.denom;
          const Vec3 g_cj = g_color_faces * (amp / agg.denom);

          double g_coverage = g_cover * cov_pre[i] * cov_suf[i + 1];
          g_coverage += g_a * fp.depth_exp;
          g_infl += 2.0 * g_coverage;

          const double g_znorm = fp.z_norm_interior ? g_a * amp / cfg.gamma : 0.0;
          const double g_z_interp = -g_znorm * inv_range;

          // Both color and depth flow through rho_k = beta_k / z_k:
          // c = sum(rho_k n_k) / P, z = 1/P with P = sum rho.
          double g_beta[3];
          for (int j = 0; j < 3; ++j) {
            const Vec3& nj = mesh.vertex_nocs[face[j]];
            const double g_rho = g_cj.dot(nj - fp.color) * fp.z_interp +
                                 g_z_interp * (-fp.z_interp * fp.z_interp);
            g_beta[j] = g_rho / pv[j]->z;
            g_z[face[j]] += -g_rho * fp.beta[j] / (pv[j]->z * pv[j]->z);
          }

          // d(beta12) = -A^{-1} sum_k beta_k dV_k, beta0 eliminated.
          const double gb1 = g_beta[1] - g_beta[0];
          const double gb2 = g_beta[2] - g_beta[0];
          const Vec2 at_g(fp.inv_a[0] * gb1 + fp.inv_a[2] * gb2,
                          fp.inv_a[1] * gb1 + fp.inv_a[3] * gb2);
          for (int j = 0; j < 3; ++j) {
            g_uv[face[j]] += -fp.beta[j] * at_g;
          }
        }

        // influence = sigmoid(phi*|phi|/sigma).
        const double g_phi = g_infl * fp.influence * (1.0 - fp.influence) *
                             (2.0 * std::abs(fp.phi) / cfg.sigma);
        if (g_phi != 0.0) {
          const Vec2 verts2[3] = {{pv[0]->u, pv[0]->v}, {pv[1]->u, pv[1]->v},
                                  {pv[2]->u, pv[2]->v}};
          if (fp.inside) {
            // phi = 1/sum(1/l_e): d(phi)/d(l_e) = phi^2/l_e^2, and
            // l_e = s_e*cross_e/len_e.
            for (int e = 0; e < 3; ++e) {
              const double g_line =
                  g_phi * fp.phi * fp.phi / (fp.line_dist[e] * fp.line_dist[e]);
              const int ia = e, ib = (e + 1) % 3;
              const Vec2& a = verts2[ia];
              const Vec2& b = verts2[ib];
              const Vec2 ab = b - a;
              const double len = ab.norm();
              const Vec2 dcross_da(b.y() - p.y(), p.x() - b.x());
              const Vec2 dcross_db(p.y() - a.y(), a.x() - p.x());
              const Vec2 dlen_da = -ab / len;
              const Vec2 dlen_db = ab / len;
              const double s = fp.line_sign[e];
              g_uv[face[ia]] +=
                  g_line * (s * dcross_da - fp.line_dist[e] * dlen_da) / len;
              g_uv[face[ib]] +=
                  g_line * (s * dcross_db - fp.line_dist[e] * dlen_db) / len;
            }
          } else if (fp.n_dir.squaredNorm() > 0) {
            // phi = -|d| with d|d|/dV_k = -w_k n at the nearest-point
            // weights.
            const int ka = fp.near_edge;
            const int kb = (fp.near_edge + 1) % 3;
            const Vec2 contrib = g_phi * fp.n_dir;
            g_uv[face[ka]] += (1.0 - fp.near_t) * contrib;
            g_uv[face[kb]] += fp.near_t * contrib;
          }
        }
      }
    }
  }

  // Chain through projection and the rigid transform.
  PoseGradientRaw out;
  for (size_t i = 0; i < n_verts; ++i) {
    if (g_uv[i].isZero(0.0) && g_z[i] == 0.0) continue;
    const Vec3 pc = transform_point(pose, mesh.vertices[i]);
    const double inv_z = 1.0 / pc.z();
    Vec3 g_cam;
    g_cam.x() = g_uv[i].x() * k.fx * inv_z;
    g_cam.y() = g_uv[i].y() * k.fy * inv_z;
    g_cam.z() = -g_uv[i].x() * k.fx * pc.x() * inv_z * inv_z -
                g_uv[i].y() * k.fy * pc.y() * inv_z * inv_z + g_z[i];
    out.d_translation += g_cam;
    out.d_rotation += g_cam * mesh.vertices[i].transpose();
  }
  return out;
}

PoseGradient render_soft_backward(const NocsMesh& mesh, const RigidTransform& pose,
                                  const CameraIntrinsics& k, const SoftRenderConfig& cfg,
                                  const NocsImage& d_nocs, const FloatImage& d_mask) {
  const PoseGradientRaw raw = render_soft_backward_raw(mesh, pose, k, cfg, d_nocs, d_mask);
  PoseGradient out;
  out.d_rot6 = rotation_6d_backward(rotation_to_6d(pose.rotation), raw.d_rotation);
  out.d_trans = raw.d_translation;
  return out;
}

double iou(const FloatImage& mask_a, const FloatImage& mask_b, double threshold) {
  if (mask_a.width != mask_b.width || mask_a.height != mask_b.height) {
    throw std::invalid_argument("iou: dimension mismatch");
  }
  long long inter = 0, uni = 0;
  for (size_t i = 0; i < mask_a.data.size(); ++i) {
    const bool a = mask_a.data[i] > threshold;
    const bool b = mask_b.data[i] > threshold;
    inter += a && b;
    uni += a || b;
  }
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace mvpose
