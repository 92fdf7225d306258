#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace ogan {

struct Rgb8Image {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;  // row-major RGB, 3 bytes per pixel
};

// Fixed encoder settings so identical pixel data yields identical files.
void write_png_rgb8(const std::filesystem::path& path, const Rgb8Image& image);
Rgb8Image read_png_rgb8(const std::filesystem::path& path);

}  // namespace ogan
