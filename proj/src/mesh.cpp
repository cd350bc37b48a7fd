#include "mvpose/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mvpose {

namespace {

void validate_faces(const std::vector<Vec3>& vertices,
                    const std::vector<std::array<int, 3>>& faces) {
  if (faces.empty()) {
    throw std::invalid_argument("mesh: face count must be > 0");
  }
  const int n = static_cast<int>(vertices.size());
  for (const auto& f : faces) {
    for (int idx : f) {
      if (idx < 0 || idx >= n) {
        throw std::invalid_argument("mesh: face index out of range");
      }
    }
  }
}

std::vector<Vec3> nocs_colors(const std::vector<Vec3>& vertices, const NocsBounds& bounds) {
  std::vector<Vec3> out;
  out.reserve(vertices.size());
  for (const Vec3& v : vertices) {
    out.push_back(nocs_project(bounds, v));
  }
  return out;
}

}  // namespace

double mesh_diameter(std::span<const Vec3> vertices) {
  if (vertices.size() < 2) {
    throw std::invalid_argument("mesh_diameter: need at least 2 vertices");
  }
  double best_sq = 0;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      best_sq = std::max(best_sq, (vertices[i] - vertices[j]).squaredNorm());
    }
  }
  return std::sqrt(best_sq);
}

NocsMesh make_nocs_mesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> faces) {
  const NocsBounds bounds = nocs_bounds(vertices);
  return make_nocs_mesh_with_bounds(std::move(vertices), std::move(faces), bounds);
}

NocsMesh make_nocs_mesh_with_bounds(std::vector<Vec3> vertices,
                                    std::vector<std::array<int, 3>> faces,
                                    const NocsBounds& bounds) {
  validate_faces(vertices, faces);
  NocsMesh mesh;
  mesh.diameter = mesh_diameter(vertices);
  mesh.vertex_nocs = nocs_colors(vertices, bounds);
  mesh.vertices = std::move(vertices);
  mesh.faces = std::move(faces);
  mesh.bounds = bounds;
  return mesh;
}

namespace {

// --- PLY ------------------------------------------------------------------

struct PlyProperty {
  std::string type;
  std::string name;
  bool is_list = false;
  std::string count_type;
};

size_t scalar_size(const std::string& t) {
  if (t == "char" || t == "uchar" || t == "int8" || t == "uint8") return 1;
  if (t == "short" || t == "ushort" || t == "int16" || t == "uint16") return 2;
  if (t == "int" || t == "uint" || t == "int32" || t == "uint32" || t == "float" ||
      t == "float32") {
    return 4;
  }
  if (t == "double" || t == "float64" || t == "int64" || t == "uint64") return 8;
  throw std::runtime_error("ply: unknown scalar type " + t);
}

double read_binary_scalar(std::istream& in, const std::string& t) {
  char buf[8];
  const size_t n = scalar_size(t);
  in.read(buf, static_cast<std::streamsize>(n));
  if (!in) throw std::runtime_error("ply: truncated binary payload");
  if (t == "float" || t == "float32") {
    float v;
    std::memcpy(&v, buf, 4);
    return v;
  }
  if (t == "double" || t == "float64") {
    double v;
    std::memcpy(&v, buf, 8);
    return v;
  }
  if (n == 1) {
    if (t == "char" || t == "int8") return static_cast<int8_t>(buf[0]);
    return static_cast<uint8_t>(buf[0]);
  }
  if (n == 2) {
    if (t == "short" || t == "int16") {
      int16_t v;
      std::memcpy(&v, buf, 2);
      return v;
    }
    uint16_t v;
    std::memcpy(&v, buf, 2);
    return v;
  }
  if (t == "int" || t == "int32") {
    int32_t v;
    std::memcpy(&v, buf, 4);
    return v;
  }
  uint32_t v;
  std::memcpy(&v, buf, 4);
  return v;
}

NocsMesh load_ply(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path.string());

  std::string line;
  if (!std::getline(in, line) || line.rfind("ply", 0) != 0) {
    throw std::runtime_error("ply: missing magic in " + path.string());
  }

  enum class Format { kAscii, kBinaryLE } format = Format::kAscii;
  struct Element {
    std::string name;
    size_t count = 0;
    std::vector<PlyProperty> props;
  };
  std::vector<Element> elements;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "comment" || tok == "obj_info") continue;
    if (tok == "format") {
      std::string fmt;
      ls >> fmt;
      if (fmt == "ascii") {
        format = Format::kAscii;
      } else if (fmt == "binary_little_endian") {
        format = Format::kBinaryLE;
      } else {
        throw std::runtime_error("ply: unsupported format " + fmt);
      }
    } else if (tok == "element") {
      Element e;
      ls >> e.name >> e.count;
      elements.push_back(e);
    } else if (tok == "property") {
      if (elements.empty()) throw std::runtime_error("ply: property before element");
      PlyProperty p;
      ls >> p.type;
      if (p.type == "list") {
        p.is_list = true;
        ls >> p.count_type >> p.type >> p.name;
      } else {
        ls >> p.name;
      }
      elements.back().props.push_back(p);
    } else if (tok == "end_header") {
      break;
    }
  }

  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;

  auto ascii_tokens = [&in]() {
    std::string l;
    do {
      if (!std::getline(in, l)) throw std::runtime_error("ply: truncated ascii payload");
    } while (l.find_first_not_of(" \t\r") == std::string::npos);
    std::istringstream ls(l);
    std::vector<double> vals;
    double v;
    while (ls >> v) vals.push_back(v);
    return vals;
  };

  for (const auto& e : elements) {
    if (e.name == "vertex") {
      int ix = -1, iy = -1, iz = -1;
      for (size_t i = 0; i < e.props.size(); ++i) {
        if (e.props[i].name == "x") ix = static_cast<int>(i);
        if (e.props[i].name == "y") iy = static_cast<int>(i);
        if (e.props[i].name == "z") iz = static_cast<int>(i);
      }
      if (ix < 0 || iy < 0 || iz < 0) throw std::runtime_error("ply: vertex lacks x/y/z");
      vertices.reserve(e.count);
      for (size_t n = 0; n < e.count; ++n) {
        std::vector<double> vals(e.props.size());
        if (format == Format::kAscii) {
          vals = ascii_tokens();
          if (vals.size() < e.props.size()) throw std::runtime_error("ply: short vertex row");
        } else {
          for (size_t i = 0; i < e.props.size(); ++i) {
            if (e.props[i].is_list) throw std::runtime_error("ply: list property on vertex");
            vals[i] = read_binary_scalar(in, e.props[i].type);
          }
        }
        vertices.emplace_back(vals[ix], vals[iy], vals[iz]);
      }
    } else if (e.name == "face") {
      faces.reserve(e.count);
      for (size_t n = 0; n < e.count; ++n) {
        std::vector<int> poly;
        if (format == Format::kAscii) {
          const auto vals = ascii_tokens();
          if (vals.empty()) throw std::runtime_error("ply: empty face row");
          const int cnt = static_cast<int>(vals[0]);
          if (static_cast<int>(vals.size()) < cnt + 1) {
            throw std::runtime_error("ply: short face row");
          }
          for (int i = 0; i < cnt; ++i) poly.push_back(static_cast<int>(vals[1 + i]));
        } else {
          for (const auto& p : e.props) {
            if (p.is_list) {
              const int cnt = static_cast<int>(read_binary_scalar(in, p.count_type));
              for (int i = 0; i < cnt; ++i) {
                poly.push_back(static_cast<int>(read_binary_scalar(in, p.type)));
              }
            } else {
              read_binary_scalar(in, p.type);
            }
          }
        }
        for (size_t i = 2; i < poly.size(); ++i) {
          faces.push_back({poly[0], poly[i - 1], poly[i]});
        }
      }
    } else {
      // Skip unknown elements.
      for (size_t n = 0; n < e.count; ++n) {
        if (format == Format::kAscii) {
          ascii_tokens();
        } else {
          for (const auto& p : e.props) {
            if (p.is_list) {
              const int cnt = static_cast<int>(read_binary_scalar(in, p.count_type));
              for (int i = 0; i < cnt; ++i) read_binary_scalar(in, p.type);
            } else {
              read_binary_scalar(in, p.type);
            }
          }
        }
      }
    }
  }

  return make_nocs_mesh(std::move(vertices), std::move(faces));
}

NocsMesh load_obj(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path.string());

  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "v") {
      double x, y, z;
      ls >> x >> y >> z;
      vertices.emplace_back(x, y, z);
    } else if (tok == "f") {
      std::vector<int> poly;
      std::string ref;
      while (ls >> ref) {
        // "i", "i/t", "i/t/n", "i//n"; negative indices are relative.
        const int idx = std::stoi(ref.substr(0, ref.find('/')));
        poly.push_back(idx > 0 ? idx - 1 : static_cast<int>(vertices.size()) + idx);
      }
      for (size_t i = 2; i < poly.size(); ++i) {
        faces.push_back({poly[0], poly[i - 1], poly[i]});
      }
    }
  }
  return make_nocs_mesh(std::move(vertices), std::move(faces));
}

}  // namespace

NocsMesh load_mesh(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == ".ply") return load_ply(path);
  if (ext == ".obj") return load_obj(path);
  throw std::runtime_error("unsupported mesh format: " + path.string());
}

void save_mesh_ply(const NocsMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write mesh file: " + path.string());
  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << mesh.vertices.size() << "\n";
  out << "property double x\nproperty double y\nproperty double z\n";
  out << "element face " << mesh.faces.size() << "\n";
  out << "property list uchar int vertex_indices\nend_header\n";
  out.precision(17);
  for (const Vec3& v : mesh.vertices) {
    out << v.x() << " " << v.y() << " " << v.z() << "\n";
  }
  for (const auto& f : mesh.faces) {
    out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
  }
}

double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  // Closest point on triangle (Ericson, Real-Time Collision Detection).
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0 && d2 <= 0) return (p - a).norm();

  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0 && d4 <= d3) return (p - b).norm();

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) {
    const double v = d1 / (d1 - d3);
    return (p - (a + v * ab)).norm();
  }

  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0 && d5 <= d6) return (p - c).norm();

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) {
    const double w = d2 / (d2 - d6);
    return (p - (a + w * ac)).norm();
  }

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return (p - (b + w * (c - b))).norm();
  }

  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom, w = vc * denom;
  return (p - (a + v * ab + w * ac)).norm();
}

namespace {

struct ClusterResult {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
};

ClusterResult cluster_on_grid(const NocsMesh& mesh, double cell) {
  const Vec3 origin = mesh.bounds.min_d;
  std::unordered_map<int64_t, int> cluster_of_cell;
  std::vector<Vec3> sums;
  std::vector<int> counts;
  std::vector<int> vert_cluster(mesh.vertices.size());

  auto cell_key = [&](const Vec3& v) {
    const auto gx = static_cast<int64_t>(std::floor((v.x() - origin.x()) / cell));
    const auto gy = static_cast<int64_t>(std::floor((v.y() - origin.y()) / cell));
    const auto gz = static_cast<int64_t>(std::floor((v.z() - origin.z()) / cell));
    return (gx & 0x1FFFFF) | ((gy & 0x1FFFFF) << 21) | ((gz & 0x1FFFFF) << 42);
  };

  for (size_t i = 0; i < mesh.vertices.size(); ++i) {
    const int64_t key = cell_key(mesh.vertices[i]);
    auto it = cluster_of_cell.find(key);
    if (it == cluster_of_cell.end()) {
      it = cluster_of_cell.emplace(key, static_cast<int>(sums.size())).first;
      sums.push_back(Vec3::Zero());
      counts.push_back(0);
    }
    vert_cluster[i] = it->second;
    sums[it->second] += mesh.vertices[i];
    counts[it->second] += 1;
  }

  ClusterResult out;
  out.vertices.reserve(sums.size());
  for (size_t c = 0; c < sums.size(); ++c) {
    out.vertices.push_back(sums[c] / counts[c]);
  }

  std::map<std::array<int, 3>, bool> seen;
  for (const auto& f : mesh.faces) {
    std::array<int, 3> g = {vert_cluster[f[0]], vert_cluster[f[1]], vert_cluster[f[2]]};
    if (g[0] == g[1] || g[1] == g[2] || g[0] == g[2]) continue;
    // Dedupe up to cyclic order, keeping the original winding.
    std::array<int, 3> key = g;
    std::sort(key.begin(), key.end());
    if (seen.emplace(key, true).second) {
      out.faces.push_back(g);
    }
  }
  return out;
}

double sampled_hausdorff(const NocsMesh& from, const NocsMesh& to) {
  // Deterministic barycentric samples on every source face plus vertices.
  std::vector<Vec3> samples = from.vertices;
  static constexpr double kBary[4][3] = {
      {1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.6, 0.2, 0.2}, {0.2, 0.6, 0.2}, {0.2, 0.2, 0.6}};
  for (const auto& f : from.faces) {
    for (const auto& w : kBary) {
      samples.push_back(w[0] * from.vertices[f[0]] + w[1] * from.vertices[f[1]] +
                        w[2] * from.vertices[f[2]]);
    }
  }
  double worst = 0;
  for (const Vec3& p : samples) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : to.faces) {
      best = std::min(best, point_triangle_distance(p, to.vertices[f[0]], to.vertices[f[1]],
                                                    to.vertices[f[2]]));
      if (best == 0) break;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

DecimateResult decimate_mesh(const NocsMesh& mesh, int target_faces) {
  if (target_faces < 4) {
    throw std::invalid_argument("decimate_mesh: target_faces must be >= 4");
  }
  if (static_cast<int>(mesh.faces.size()) <= target_faces) {
    return DecimateResult{mesh, 0.0};
  }

  // Bisect the cluster cell size until the face budget is met; keep the
  // smallest cell (finest mesh) that satisfies it.
  const auto acceptable = [target_faces](const ClusterResult& r) {
    return !r.faces.empty() && r.vertices.size() >= 3 &&
           static_cast<int>(r.faces.size()) <= target_faces;
  };
  double lo = mesh.diameter * 1e-4;
  double hi = mesh.diameter;
  ClusterResult best = cluster_on_grid(mesh, hi);
  bool found = acceptable(best);
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    ClusterResult r = cluster_on_grid(mesh, mid);
    if (acceptable(r)) {
      best = std::move(r);
      found = true;
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (!found) {
    // Budget unreachable by clustering (tiny meshes): leave unchanged.
    return DecimateResult{mesh, 0.0};
  }

  NocsMesh out =
      make_nocs_mesh_with_bounds(std::move(best.vertices), std::move(best.faces), mesh.bounds);
  DecimateResult result;
  result.hausdorff = sampled_hausdorff(mesh, out);
  result.mesh = std::move(out);
  return result;
}

NocsMesh make_icosphere(double radius, int subdivisions) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (Vec3& v : verts) v = v.normalized() * radius;
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},
      {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},   {3, 4, 2},
      {3, 2, 6},  {3, 6, 8},  {3, 8, 9},   {4, 9, 5},  {2, 4, 11},  {6, 2, 10},
      {8, 6, 7},  {9, 8, 1}};

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const Vec3 m = (verts[a] + verts[b]).normalized() * radius;
      verts.push_back(m);
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  return make_nocs_mesh(std::move(verts), std::move(faces));
}

NocsMesh make_box(const Vec3& extents) {
  const Vec3 h = extents / 2.0;
  std::vector<Vec3> verts;
  for (int i = 0; i < 8; ++i) {
    verts.emplace_back((i & 1) ? h.x() : -h.x(), (i & 2) ? h.y() : -h.y(),
                       (i & 4) ? h.z() : -h.z());
  }
  const std::vector<std::array<int, 3>> faces = {
      {0, 2, 3}, {0, 3, 1}, {4, 5, 7}, {4, 7, 6}, {0, 1, 5}, {0, 5, 4},
      {2, 6, 7}, {2, 7, 3}, {0, 4, 6}, {0, 6, 2}, {1, 3, 7}, {1, 7, 5}};
  return make_nocs_mesh(std::move(verts), faces);
}

}  // namespace mvpose
