#include "mvpose/raster_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <stdexcept>

namespace mvpose {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

void write_png(const std::filesystem::path& path, int width, int height, int bit_depth,
               int color_type, const std::vector<std::vector<png_byte>>& rows) {
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) throw std::runtime_error("cannot open for write: " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("png write failed: " + path.string());
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (const auto& row : rows) {
    png_write_row(png, const_cast<png_bytep>(row.data()));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

struct DecodedPng {
  int width = 0, height = 0, bit_depth = 0, channels = 0;
  std::vector<std::vector<png_byte>> rows;
};

DecodedPng read_png(const std::filesystem::path& path) {
  FilePtr fp(std::fopen(path.string().c_str(), "rb"));
  if (!fp) throw std::runtime_error("cannot open for read: " + path.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("png read failed: " + path.string());
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  DecodedPng out;
  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  out.bit_depth = png_get_bit_depth(png, info);
  out.channels = png_get_channels(png, info);

  const size_t row_bytes = png_get_rowbytes(png, info);
  out.rows.assign(out.height, std::vector<png_byte>(row_bytes));
  for (auto& row : out.rows) {
    png_read_row(png, row.data(), nullptr);
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

uint16_t quantize16(double v) {
  const double c = std::clamp(v, 0.0, 1.0);
  return static_cast<uint16_t>(std::lround(c * 65535.0));
}

}  // namespace

void write_nocs_png(const NocsImage& nocs, const std::filesystem::path& path) {
  std::vector<std::vector<png_byte>> rows(nocs.height,
                                          std::vector<png_byte>(static_cast<size_t>(nocs.width) * 6));
  for (int y = 0; y < nocs.height; ++y) {
    for (int x = 0; x < nocs.width; ++x) {
      const Vec3& n = nocs.at(x, y);
      for (int c = 0; c < 3; ++c) {
        const uint16_t q = quantize16(n[c]);
        rows[y][static_cast<size_t>(x) * 6 + c * 2] = static_cast<png_byte>(q >> 8);
        rows[y][static_cast<size_t>(x) * 6 + c * 2 + 1] = static_cast<png_byte>(q & 0xFF);
      }
    }
  }
  write_png(path, nocs.width, nocs.height, 16, PNG_COLOR_TYPE_RGB, rows);
}

NocsImage read_nocs_png(const std::filesystem::path& path) {
  const DecodedPng png = read_png(path);
  if (png.bit_depth != 16 || png.channels != 3) {
    throw std::runtime_error("expected 16-bit RGB png: " + path.string());
  }
  NocsImage out(png.width, png.height);
  for (int y = 0; y < png.height; ++y) {
    for (int x = 0; x < png.width; ++x) {
      Vec3 n;
      for (int c = 0; c < 3; ++c) {
        const uint16_t hi = png.rows[y][static_cast<size_t>(x) * 6 + c * 2];
        const uint16_t lo = png.rows[y][static_cast<size_t>(x) * 6 + c * 2 + 1];
        n[c] = static_cast<double>((hi << 8) | lo) / 65535.0;
      }
      out.at(x, y) = n;
    }
  }
  return out;
}

void write_mask_png(const MaskImage& mask, const std::filesystem::path& path) {
  std::vector<std::vector<png_byte>> rows(mask.height, std::vector<png_byte>(mask.width));
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      rows[y][x] = mask.at(x, y) ? 255 : 0;
    }
  }
  write_png(path, mask.width, mask.height, 8, PNG_COLOR_TYPE_GRAY, rows);
}

MaskImage read_mask_png(const std::filesystem::path& path) {
  const DecodedPng png = read_png(path);
  if (png.bit_depth != 8 || png.channels != 1) {
    throw std::runtime_error("expected 8-bit gray png: " + path.string());
  }
  MaskImage out(png.width, png.height);
  for (int y = 0; y < png.height; ++y) {
    for (int x = 0; x < png.width; ++x) {
      out.at(x, y) = png.rows[y][x] >= 128 ? 1 : 0;
    }
  }
  return out;
}

void write_depth_raw(const FloatImage& depth, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for write: " + path.string());
  const char magic[4] = {'D', 'P', 'T', 'H'};
  const uint32_t w = static_cast<uint32_t>(depth.width);
  const uint32_t h = static_cast<uint32_t>(depth.height);
  const uint32_t reserved = 0;
  out.write(magic, 4);
  out.write(reinterpret_cast<const char*>(&w), 4);
  out.write(reinterpret_cast<const char*>(&h), 4);
  out.write(reinterpret_cast<const char*>(&reserved), 4);
  for (double d : depth.data) {
    const float f = static_cast<float>(d);
    out.write(reinterpret_cast<const char*>(&f), 4);
  }
}

FloatImage read_depth_raw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for read: " + path.string());
  char magic[4];
  uint32_t w = 0, h = 0, reserved = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&w), 4);
  in.read(reinterpret_cast<char*>(&h), 4);
  in.read(reinterpret_cast<char*>(&reserved), 4);
  if (!in || std::memcmp(magic, "DPTH", 4) != 0) {
    throw std::runtime_error("bad depth header: " + path.string());
  }
  FloatImage out(static_cast<int>(w), static_cast<int>(h));
  for (double& d : out.data) {
    float f;
    in.read(reinterpret_cast<char*>(&f), 4);
    d = f;
  }
  if (!in) throw std::runtime_error("truncated depth payload: " + path.string());
  return out;
}

}  // namespace mvpose
