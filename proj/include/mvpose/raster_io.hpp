#pragma once

#include <filesystem>

#include "mvpose/image.hpp"

namespace mvpose {

// NOCS maps as 3-channel 16-bit PNG, channel value = round(nocs * 65535).
void write_nocs_png(const NocsImage& nocs, const std::filesystem::path& path);
NocsImage read_nocs_png(const std::filesystem::path& path);

// Masks as 8-bit grayscale PNG with values {0, 255}.
void write_mask_png(const MaskImage& mask, const std::filesystem::path& path);
MaskImage read_mask_png(const std::filesystem::path& path);

// Depth as little-endian float32 raw with a 16-byte header:
// magic "DPTH", u32 width, u32 height, u32 reserved. Background is +inf.
void write_depth_raw(const FloatImage& depth, const std::filesystem::path& path);
FloatImage read_depth_raw(const std::filesystem::path& path);

}  // namespace mvpose
