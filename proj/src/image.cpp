#include "mvpose/image.hpp"

namespace mvpose {

namespace {

MaskImage morph(const MaskImage& mask, int radius, bool dilate) {
  if (radius <= 0) return mask;
  MaskImage out(mask.width, mask.height, 0);
  const int r2 = radius * radius;
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      // dilate: any set pixel in the disc; erode: all pixels in the disc set
      // (out-of-image counts as unset).
      bool result = !dilate;
      for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
          if (dx * dx + dy * dy > r2) continue;
          const int nx = x + dx, ny = y + dy;
          const bool inside = nx >= 0 && nx < mask.width && ny >= 0 && ny < mask.height;
          const bool v = inside && mask.at(nx, ny) != 0;
          if (dilate == v) {
            result = dilate;
            dy = radius + 1;
            break;
          }
        }
      }
      out.at(x, y) = result ? 1 : 0;
    }
  }
  return out;
}

}  // namespace

MaskImage erode_mask(const MaskImage& mask, int radius) { return morph(mask, radius, false); }
MaskImage dilate_mask(const MaskImage& mask, int radius) { return morph(mask, radius, true); }

}  // namespace mvpose
