#pragma once

#include "lens3de/geometry.hpp"
#include "lens3de/render/camera.hpp"
#include "lens3de/render/layer.hpp"
#include "lens3de/render/style.hpp"
#include "lens3de/render/tiles.hpp"

namespace lens3de {

inline constexpr int kDiskSegments = 64;

struct LensLayers {
    RgbaLayer sphere;   // Fresnel-shaded lens ball
    RgbaLayer widgets;  // disk circle, orientation arrow, center ball
    PixelMask sphere_mask;
    PixelMask circle_mask;
    PixelMask arrow_mask;
    PixelMask center_ball_mask;
};

/// Tessellated lens sphere with alpha = fresnel_opacity(v, n, style.lens_fresnel_r);
/// with show_disk and a disk normal, a 64-segment wireframe circle plus an
/// arrow along the normal; with show_center_ball, a small opaque ball at the
/// center. The circle's pixel set does not depend on the normal's sign.
LensLayers render_lens_and_widgets(const Lens3De& lens, const Camera& camera, bool show_disk, bool show_center_ball,
                                   const RenderStyle& style, const RenderOptions& opts = {});

}  // namespace lens3de
