#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lens3de/mesh.hpp"
#include "lens3de/render/camera.hpp"
#include "lens3de/render/layer.hpp"
#include "lens3de/render/tiles.hpp"

namespace lens3de {

inline constexpr std::uint32_t kNoTriangle = std::numeric_limits<std::uint32_t>::max();

/// Nearest-surface geometry per pixel. Besides position, normal and depth it
/// keeps the winning triangle and its perspective-correct barycentrics so
/// later passes can resolve per-vertex data without re-rasterizing.
struct GBuffer {
    int width = 0;
    int height = 0;
    std::vector<Vec3> position;
    std::vector<Vec3> normal;  // unit where hit
    std::vector<double> depth;  // camera-space forward distance; +inf where not hit
    std::vector<std::uint8_t> hit;
    std::vector<std::uint32_t> triangle;
    std::vector<std::array<double, 3>> bary;

    GBuffer(int w, int h);

    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
    bool is_hit(int x, int y) const { return hit[index(x, y)] != 0; }
    std::size_t hit_count() const;
};

/// Attribute-layer buffer: one screen-space scalar layer per mesh attribute
/// layer, in mesh order. NaN where the G-buffer has no hit.
struct ALBuffer {
    int width = 0;
    int height = 0;
    std::vector<std::string> names;
    std::vector<std::vector<double>> layers;

    int layer_index(const std::string& name) const;
    double value(int layer, int x, int y) const { return layers[layer][static_cast<std::size_t>(y) * width + x]; }
};

/// Perspective rasterization with nearest-depth resolution; on equal depth
/// the lower triangle index wins. Output is independent of `opts.threads`.
GBuffer rasterize_gbuffer(const SurfaceMesh& mesh, const Camera& camera, const RenderOptions& opts = {});

ALBuffer rasterize_albuffer(const SurfaceMesh& mesh, const Camera& camera, const GBuffer& gbuffer,
                            const RenderOptions& opts = {});

/// Binary coverage of the triangles over `vertices`.
PixelMask coverage_mask(std::span<const Vec3> vertices, std::span<const Triangle> triangles, const Camera& camera,
                        const RenderOptions& opts = {});

}  // namespace lens3de
