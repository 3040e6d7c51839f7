#pragma once

#include <cstdint>
#include <vector>

#include "orbrec/core/types.hpp"

namespace orbrec {

// Row-major float image, values nominally in [0,1]. channels is 1 or 3.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<float> data;

    Image() = default;
    Image(int w, int h, int c, float fill = 0.0f)
        : width(w), height(h), channels(c), data(size_t(w) * h * c, fill) {}

    float& at(int x, int y, int c = 0) { return data[(size_t(y) * width + x) * channels + c]; }
    float at(int x, int y, int c = 0) const {
        return data[(size_t(y) * width + x) * channels + c];
    }

    Vec3f rgb(int x, int y) const {
        const float* p = &data[(size_t(y) * width + x) * channels];
        return channels == 3 ? Vec3f(p[0], p[1], p[2]) : Vec3f(p[0], p[0], p[0]);
    }
    void set_rgb(int x, int y, const Vec3f& v) {
        float* p = &data[(size_t(y) * width + x) * channels];
        if (channels == 3) {
            p[0] = v.x();
            p[1] = v.y();
            p[2] = v.z();
        } else {
            p[0] = v.x();
        }
    }

    // Rec.709 luma; equals the single channel for grayscale images.
    float luminance(int x, int y) const {
        if (channels == 1) return at(x, y);
        const float* p = &data[(size_t(y) * width + x) * channels];
        return 0.2126f * p[0] + 0.7152f * p[1] + 0.0722f * p[2];
    }

    size_t pixel_count() const { return size_t(width) * height; }
    bool same_shape(const Image& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

// Binary mask; bits holds 0/1 per pixel (files store 0/255).
struct Mask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    Mask() = default;
    Mask(int w, int h, std::uint8_t fill = 0) : width(w), height(h), bits(size_t(w) * h, fill) {}

    std::uint8_t& at(int x, int y) { return bits[size_t(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return bits[size_t(y) * width + x]; }

    size_t count() const;
    bool empty_mask() const { return count() == 0; }
    bool same_shape(const Mask& o) const { return width == o.width && height == o.height; }
};

// Row-major float depth map; +inf marks background (no surface hit).
struct DepthMap {
    int width = 0;
    int height = 0;
    std::vector<float> data;

    DepthMap() = default;
    DepthMap(int w, int h, float fill) : width(w), height(h), data(size_t(w) * h, fill) {}

    float& at(int x, int y) { return data[size_t(y) * width + x]; }
    float at(int x, int y) const { return data[size_t(y) * width + x]; }
};

// |intersection| / |union|; 1.0 when both masks are empty.
// Throws std::invalid_argument on dimension mismatch.
double mask_iou(const Mask& a, const Mask& b);

// Pixels outside the mask are set to black; inside pixels are untouched.
// Throws std::invalid_argument on dimension mismatch.
Image apply_mask(const Image& frame, const Mask& mask);

std::uint8_t quantize8(float v);

}  // namespace orbrec
