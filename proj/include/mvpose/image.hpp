#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mvpose/geometry.hpp"

namespace mvpose {

/// Row-major single-plane raster.
template <typename T>
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<T> data;

  Plane() = default;
  Plane(int w, int h, T fill = T{}) : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  T& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  const T& at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  bool same_size(int w, int h) const { return width == w && height == h; }
};

using MaskImage = Plane<uint8_t>;   // binary {0, 1}
using FloatImage = Plane<double>;   // soft mask / depth
using NocsImage = Plane<Vec3>;      // per-pixel NOCS triples

// Morphological helpers with a circular structuring element of the given
// radius (pixels). Used for silhouette-interior bands and mask corruption.
MaskImage erode_mask(const MaskImage& mask, int radius);
MaskImage dilate_mask(const MaskImage& mask, int radius);

inline MaskImage threshold_mask(const FloatImage& soft, double threshold = 0.5) {
  MaskImage out(soft.width, soft.height, 0);
  for (size_t i = 0; i < soft.data.size(); ++i) {
    out.data[i] = soft.data[i] > threshold ? 1 : 0;
  }
  return out;
}

}  // namespace mvpose
