#pragma once

#include <optional>
#include <string>

#include "lens3de/geometry.hpp"
#include "lens3de/render/camera.hpp"
#include "lens3de/render/colormap.hpp"
#include "lens3de/render/gbuffer.hpp"
#include "lens3de/render/layer.hpp"
#include "lens3de/render/tiles.hpp"

namespace lens3de {

/// Conservative screen rectangle of the projected ball, clamped to the
/// viewport. The whole viewport when the ball reaches the near plane;
/// nullopt when the ball is wholly behind the camera or off-screen.
std::optional<PixelRect> projected_ball_bounds(const Ball& ball, const Camera& camera);

struct DecalLayer {
    RgbaLayer layer;
    PixelMask mask;
    std::optional<PixelRect> bounds;  // region that was scanned
};

/// Screen-space decal: scans only the projected ball bounds and, where the
/// G-buffer has a surface point inside the lens ball, writes the opaque
/// colormapped value of `surface_attr` from the AL-buffer.
/// Throws std::invalid_argument for an unknown attribute or mismatched buffers.
DecalLayer decal_pass(const GBuffer& gbuffer, const ALBuffer& albuffer, const Lens3De& lens,
                      const std::string& surface_attr, const Colormap& cmap, const Camera& camera,
                      const RenderOptions& opts = {});

}  // namespace lens3de
