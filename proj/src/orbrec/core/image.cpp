#include "orbrec/core/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace orbrec {

size_t Mask::count() const {
    return std::accumulate(bits.begin(), bits.end(), size_t(0),
                           [](size_t s, std::uint8_t b) { return s + (b != 0); });
}

double mask_iou(const Mask& a, const Mask& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("mask_iou: dimension mismatch");
    size_t inter = 0, uni = 0;
    for (size_t i = 0; i < a.bits.size(); ++i) {
        const bool pa = a.bits[i] != 0, pb = b.bits[i] != 0;
        inter += pa && pb;
        uni += pa || pb;
    }
    if (uni == 0) return 1.0;
    return double(inter) / double(uni);
}

Image apply_mask(const Image& frame, const Mask& mask) {
    if (frame.width != mask.width || frame.height != mask.height)
        throw std::invalid_argument("apply_mask: dimension mismatch");
    Image out = frame;
    for (int y = 0; y < frame.height; ++y)
        for (int x = 0; x < frame.width; ++x)
            if (!mask.at(x, y))
                for (int c = 0; c < frame.channels; ++c) out.at(x, y, c) = 0.0f;
    return out;
}

std::uint8_t quantize8(float v) {
    const float c = std::clamp(v, 0.0f, 1.0f);
    return static_cast<std::uint8_t>(std::lround(c * 255.0f));
}

}  // namespace orbrec
