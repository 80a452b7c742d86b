#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lens3de/render/decal.hpp"

namespace lens3de {

std::optional<PixelRect> projected_ball_bounds(const Ball& ball, const Camera& camera) {
    const ViewPoint c = camera.to_view(ball.center());
    const double r = ball.radius();
    const PixelRect full{0, 0, camera.width(), camera.height()};
    if (c.z + r < camera.near()) return std::nullopt;
    if (c.z - r < camera.near()) return full;

    // Corners of the view-aligned box around the ball all lie in front of
    // the near plane, so the hull of their projections bounds the ball's.
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (int i = 0; i < 8; ++i) {
        const ViewPoint v{c.x + ((i & 1) ? r : -r), c.y + ((i & 2) ? r : -r), c.z + ((i & 4) ? r : -r)};
        const ScreenPoint s = camera.view_to_screen(v);
        min_x = std::min(min_x, s.x);
        max_x = std::max(max_x, s.x);
        min_y = std::min(min_y, s.y);
        max_y = std::max(max_y, s.y);
    }
    auto clampi = [](double v, int hi) { return static_cast<int>(std::clamp(v, 0.0, static_cast<double>(hi))); };
    PixelRect rect{clampi(std::floor(min_x), camera.width()), clampi(std::floor(min_y), camera.height()),
                   clampi(std::ceil(max_x), camera.width()), clampi(std::ceil(max_y), camera.height())};
    if (rect.empty()) return std::nullopt;
    return rect;
}

DecalLayer decal_pass(const GBuffer& gbuffer, const ALBuffer& albuffer, const Lens3De& lens,
                      const std::string& surface_attr, const Colormap& cmap, const Camera& camera,
                      const RenderOptions& opts) {
    const int layer_index = albuffer.layer_index(surface_attr);
    if (layer_index < 0) throw std::invalid_argument("unknown surface attribute '" + surface_attr + "'");
    if (gbuffer.width != albuffer.width || gbuffer.height != albuffer.height || gbuffer.width != camera.width() ||
        gbuffer.height != camera.height())
        throw std::invalid_argument("decal pass buffers have inconsistent resolution");

    DecalLayer out;
    out.layer = RgbaLayer(gbuffer.width, gbuffer.height);
    out.mask.assign(static_cast<std::size_t>(gbuffer.width) * gbuffer.height, 0);
    out.bounds = projected_ball_bounds(lens.ball(), camera);
    if (!out.bounds) return out;

    const PixelRect bounds = *out.bounds;
    const TileGrid grid(gbuffer.width, gbuffer.height);
    for_each_tile(grid, opts.threads, [&](const PixelRect& tile) {
        const int x0 = std::max(tile.x0, bounds.x0), x1 = std::min(tile.x1, bounds.x1);
        const int y0 = std::max(tile.y0, bounds.y0), y1 = std::min(tile.y1, bounds.y1);
        for (int y = y0; y < y1; ++y) {
            for (int x = x0; x < x1; ++x) {
                const std::size_t idx = gbuffer.index(x, y);
                if (!gbuffer.hit[idx] || !point_in_ball(gbuffer.position[idx], lens.ball())) continue;
                out.layer.pixels[idx] = colormap_lookup(cmap, albuffer.value(layer_index, x, y));
                out.mask[idx] = 1;
            }
        }
    });
    return out;
}

}  // namespace lens3de
