#pragma once

#include <cstdint>
#include <vector>

#include "lens3de/render/colormap.hpp"

namespace lens3de {

/// Straight-alpha RGBA layer; transparent (alpha 0) by default.
struct RgbaLayer {
    int width = 0;
    int height = 0;
    std::vector<Color> pixels;

    RgbaLayer() = default;
    RgbaLayer(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h) {}

    Color& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    const Color& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// One byte per pixel, nonzero = set.
using PixelMask = std::vector<std::uint8_t>;

/// Source-over with straight alpha.
inline void blend_over(Color& dst, const Color& src) {
    const double a = src.a;
    if (a <= 0.0) return;
    const double out_a = a + dst.a * (1.0 - a);
    if (out_a <= 0.0) {
        dst = {};
        return;
    }
    dst.r = (src.r * a + dst.r * dst.a * (1.0 - a)) / out_a;
    dst.g = (src.g * a + dst.g * dst.a * (1.0 - a)) / out_a;
    dst.b = (src.b * a + dst.b * dst.a * (1.0 - a)) / out_a;
    dst.a = out_a;
}

}  // namespace lens3de
