#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "lens3de/render/composite.hpp"

namespace lens3de {

namespace {

std::uint8_t quantize(double v) { return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)); }

}  // namespace

FrameImage composite(const CompositeLayers& layers, int width, int height, const Color& background,
                     const RenderOptions& opts) {
    const std::array<const RgbaLayer*, 7> ordered{layers.context_surface, layers.silhouette, layers.unselected_lines,
                                                  layers.selected_lines,  layers.decal,      layers.lens_sphere,
                                                  layers.widgets};
    for (const auto* l : ordered)
        if (l && (l->width != width || l->height != height ||
                  l->pixels.size() != static_cast<std::size_t>(width) * height))
            throw std::invalid_argument("composite: layer resolution mismatch");

    FrameImage img(width, height);
    const TileGrid grid(width, height);
    for_each_tile(grid, opts.threads, [&](const PixelRect& rect) {
        for (int y = rect.y0; y < rect.y1; ++y) {
            for (int x = rect.x0; x < rect.x1; ++x) {
                const std::size_t idx = static_cast<std::size_t>(y) * width + x;
                Color c = background;
                for (const auto* l : ordered)
                    if (l) blend_over(c, l->pixels[idx]);
                std::uint8_t* px = img.at(x, y);
                px[0] = quantize(c.r);
                px[1] = quantize(c.g);
                px[2] = quantize(c.b);
                px[3] = quantize(c.a);
            }
        }
    });
    return img;
}

}  // namespace lens3de
