#pragma once

#include "lens3de/mesh.hpp"
#include "lens3de/render/camera.hpp"
#include "lens3de/render/gbuffer.hpp"
#include "lens3de/render/layer.hpp"
#include "lens3de/render/style.hpp"
#include "lens3de/vec3.hpp"

namespace lens3de {

/// Fresnel opacity 1 - |v.n|^r. Surfaces facing the viewer become
/// transparent, grazing ones opaque. |v.n| is clamped to [0, 1].
/// Throws std::invalid_argument for r < 0.
double fresnel_opacity(const Vec3& view, const Vec3& normal, double r);

struct BillboardPair {
    Vec3 upper;  // p + t * w
    Vec3 lower;  // p - t * w
};

/// View-aligned billboard vertices for streamline point `p` heading toward
/// `next`: p +/- thickness * w with w = normalize(v x d), v pointing to the
/// eye and d along the line. When v and d are (nearly) parallel, w falls back
/// to a vector perpendicular to v built from world +y, then +x.
/// Throws std::invalid_argument when p == next or thickness <= 0.
BillboardPair billboard_vertices(const Vec3& p, const Vec3& next, const Camera& camera, double thickness);
BillboardPair billboard_vertices(const Vec3& p, const Vec3& next, const Vec3& eye, double thickness);

/// Semi-transparent context surface: alpha from the Fresnel opacity with
/// style.context_fresnel_r, color with a headlight term.
RgbaLayer shade_context(const GBuffer& gbuffer, const Camera& camera, const RenderStyle& style,
                        const RenderOptions& opts = {});

/// Outline pixels: coverage of the mesh with vertices pushed out along their
/// normals by `extrusion`, minus coverage of the mesh itself.
/// Throws std::invalid_argument for extrusion <= 0.
PixelMask silhouette_mask(const SurfaceMesh& mesh, const Camera& camera, double extrusion,
                          const RenderOptions& opts = {});
/// Same, reusing an already computed base coverage.
PixelMask silhouette_mask(const SurfaceMesh& mesh, const Camera& camera, double extrusion, const PixelMask& base,
                          const RenderOptions& opts = {});

RgbaLayer silhouette_layer(const PixelMask& mask, int width, int height, const Color& color);

}  // namespace lens3de
