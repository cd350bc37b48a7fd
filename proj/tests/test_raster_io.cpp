#include <doctest.h>

#include <cmath>
#include <random>

#include "mvpose/raster_io.hpp"
#include "support.hpp"

using namespace mvpose;

TEST_CASE("nocs png quantized round trip") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  NocsImage img(17, 9);
  for (Vec3& v : img.data) v = Vec3(u(rng), u(rng), u(rng));

  const auto path = testing::temp_dir("io") / "nocs.png";
  write_nocs_png(img, path);
  const NocsImage back = read_nocs_png(path);
  REQUIRE(back.same_size(img.width, img.height));
  for (size_t i = 0; i < img.data.size(); ++i) {
    // Half a quantization step at 16 bits.
    CHECK((back.data[i] - img.data[i]).cwiseAbs().maxCoeff() <= 0.5 / 65535.0 + 1e-12);
  }

  // Quantized values survive a second round trip exactly.
  const auto path2 = testing::temp_dir("io") / "nocs2.png";
  write_nocs_png(back, path2);
  const NocsImage back2 = read_nocs_png(path2);
  for (size_t i = 0; i < back.data.size(); ++i) {
    CHECK(back2.data[i] == back.data[i]);
  }
}

TEST_CASE("mask png round trip") {
  MaskImage mask(12, 7, 0);
  mask.at(3, 2) = 1;
  mask.at(11, 6) = 1;
  const auto path = testing::temp_dir("io") / "mask.png";
  write_mask_png(mask, path);
  const MaskImage back = read_mask_png(path);
  REQUIRE(back.same_size(mask.width, mask.height));
  CHECK(back.data == mask.data);
}

TEST_CASE("depth raw round trip with infinity background") {
  FloatImage depth(5, 4, std::numeric_limits<double>::infinity());
  depth.at(1, 1) = 0.75;
  depth.at(4, 3) = 2.5;
  const auto path = testing::temp_dir("io") / "depth.bin";
  write_depth_raw(depth, path);
  const FloatImage back = read_depth_raw(path);
  REQUIRE(back.same_size(depth.width, depth.height));
  CHECK(back.at(1, 1) == doctest::Approx(0.75));
  CHECK(back.at(4, 3) == doctest::Approx(2.5));
  CHECK(std::isinf(back.at(0, 0)));
}

TEST_CASE("mask morphology") {
  MaskImage mask(9, 9, 0);
  for (int y = 3; y <= 5; ++y) {
    for (int x = 3; x <= 5; ++x) mask.at(x, y) = 1;
  }
  const MaskImage grown = dilate_mask(mask, 1);
  CHECK(grown.at(2, 4) == 1);
  CHECK(grown.at(1, 4) == 0);
  const MaskImage shrunk = erode_mask(mask, 1);
  CHECK(shrunk.at(4, 4) == 1);
  CHECK(shrunk.at(3, 4) == 0);
}
