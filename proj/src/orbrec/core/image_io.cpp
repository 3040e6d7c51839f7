#include "orbrec/core/image_io.hpp"

#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

#include <png.h>

namespace orbrec {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void write_png_bytes(const std::filesystem::path& path, const std::uint8_t* bytes, int width,
                     int height, int channels) {
    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) throw std::runtime_error("write_png: cannot open " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (!png || !info) throw std::runtime_error("write_png: libpng init failed");
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("write_png: libpng error on " + path.string());
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, width, height, 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y)
        rows[y] = const_cast<png_bytep>(bytes + size_t(y) * width * channels);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

std::vector<std::uint8_t> read_png_bytes(const std::filesystem::path& path, int& width,
                                         int& height, int& channels) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) throw std::runtime_error("read_png: cannot open " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (!png || !info) throw std::runtime_error("read_png: libpng init failed");
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("read_png: libpng error on " + path.string());
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);

    width = png_get_image_width(png, info);
    height = png_get_image_height(png, info);
    channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("read_png: unsupported channel count in " + path.string());
    }
    std::vector<std::uint8_t> bytes(size_t(width) * height * channels);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) rows[y] = bytes.data() + size_t(y) * width * channels;
    png_read_image(png, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);
    return bytes;
}

}  // namespace

void write_png(const std::filesystem::path& path, const Image& image) {
    std::vector<std::uint8_t> bytes(image.data.size());
    for (size_t i = 0; i < image.data.size(); ++i) bytes[i] = quantize8(image.data[i]);
    write_png_bytes(path, bytes.data(), image.width, image.height, image.channels);
}

Image read_png(const std::filesystem::path& path) {
    int w = 0, h = 0, c = 0;
    const auto bytes = read_png_bytes(path, w, h, c);
    Image img(w, h, c);
    for (size_t i = 0; i < bytes.size(); ++i) img.data[i] = float(bytes[i]) / 255.0f;
    return img;
}

void write_mask_png(const std::filesystem::path& path, const Mask& mask) {
    std::vector<std::uint8_t> bytes(mask.bits.size());
    for (size_t i = 0; i < mask.bits.size(); ++i) bytes[i] = mask.bits[i] ? 255 : 0;
    write_png_bytes(path, bytes.data(), mask.width, mask.height, 1);
}

Mask read_mask_png(const std::filesystem::path& path) {
    int w = 0, h = 0, c = 0;
    const auto bytes = read_png_bytes(path, w, h, c);
    if (c != 1) throw std::runtime_error("read_mask_png: expected grayscale " + path.string());
    Mask m(w, h);
    for (size_t i = 0; i < bytes.size(); ++i) m.bits[i] = bytes[i] >= 128 ? 1 : 0;
    return m;
}

void write_depth_bin(const std::filesystem::path& path, const DepthMap& depth) {
    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) throw std::runtime_error("write_depth_bin: cannot open " + path.string());
    const std::uint32_t wh[2] = {std::uint32_t(depth.width), std::uint32_t(depth.height)};
    if (std::fwrite(wh, sizeof(wh), 1, fp.get()) != 1 ||
        std::fwrite(depth.data.data(), sizeof(float), depth.data.size(), fp.get()) !=
            depth.data.size())
        throw std::runtime_error("write_depth_bin: short write on " + path.string());
}

DepthMap read_depth_bin(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) throw std::runtime_error("read_depth_bin: cannot open " + path.string());
    std::uint32_t wh[2];
    if (std::fread(wh, sizeof(wh), 1, fp.get()) != 1)
        throw std::runtime_error("read_depth_bin: short read on " + path.string());
    DepthMap d(int(wh[0]), int(wh[1]), 0.0f);
    if (std::fread(d.data.data(), sizeof(float), d.data.size(), fp.get()) != d.data.size())
        throw std::runtime_error("read_depth_bin: short read on " + path.string());
    return d;
}

}  // namespace orbrec
