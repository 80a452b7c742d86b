#pragma once

#include "lens3de/io/image.hpp"
#include "lens3de/render/colormap.hpp"
#include "lens3de/render/layer.hpp"
#include "lens3de/render/tiles.hpp"

namespace lens3de {

/// Layers blended back to front in member order over the background.
/// Null entries are skipped.
struct CompositeLayers {
    const RgbaLayer* context_surface = nullptr;
    const RgbaLayer* silhouette = nullptr;
    const RgbaLayer* unselected_lines = nullptr;
    const RgbaLayer* selected_lines = nullptr;
    const RgbaLayer* decal = nullptr;
    const RgbaLayer* lens_sphere = nullptr;
    const RgbaLayer* widgets = nullptr;
};

/// Source-over blending, quantized to 8 bits with round-to-nearest.
/// Throws std::invalid_argument when a layer's resolution differs.
FrameImage composite(const CompositeLayers& layers, int width, int height, const Color& background,
                     const RenderOptions& opts = {});

}  // namespace lens3de
