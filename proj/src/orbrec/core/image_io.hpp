#pragma once

#include <filesystem>
#include <string>

#include "orbrec/core/image.hpp"

namespace orbrec {

// 8-bit PNG I/O. RGB images round-trip through quantize8; masks are stored
// as 0/255 grayscale. All throw std::runtime_error on I/O or format failure.
void write_png(const std::filesystem::path& path, const Image& image);
Image read_png(const std::filesystem::path& path);

void write_mask_png(const std::filesystem::path& path, const Mask& mask);
Mask read_mask_png(const std::filesystem::path& path);

// Row-major little-endian float32 blob with an 8-byte (width,height) header.
void write_depth_bin(const std::filesystem::path& path, const DepthMap& depth);
DepthMap read_depth_bin(const std::filesystem::path& path);

}  // namespace orbrec
