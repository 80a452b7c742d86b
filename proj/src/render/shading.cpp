#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lens3de/render/shading.hpp"

namespace lens3de {

double fresnel_opacity(const Vec3& view, const Vec3& normal, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("fresnel edge fall-off must be >= 0");
    const double c = std::clamp(std::abs(dot(view, normal)), 0.0, 1.0);
    return std::clamp(1.0 - std::pow(c, r), 0.0, 1.0);
}

namespace {

constexpr double kDegenerateCross = 1e-8;

UnitVec3 perpendicular_to(const UnitVec3& v) {
    for (const Vec3 axis : {Vec3{0, 1, 0}, Vec3{1, 0, 0}}) {
        const Vec3 w = axis - v.vec() * dot(axis, v);
        if (w.length() > 1e-6) return UnitVec3::normalize(w);
    }
    return UnitVec3::normalize(Vec3{0, 0, 1} - v.vec() * v.z());
}

}  // namespace

BillboardPair billboard_vertices(const Vec3& p, const Vec3& next, const Vec3& eye, double thickness) {
    if (!(thickness > 0.0)) throw std::invalid_argument("billboard thickness must be > 0");
    auto d = UnitVec3::try_normalize(next - p);
    if (!d) throw std::invalid_argument("billboard needs distinct current and next points");
    auto v = UnitVec3::try_normalize(eye - p);
    if (!v) v = d;  // eye on the line: any perpendicular will do
    const Vec3 c = cross(*v, *d);
    const UnitVec3 w = c.length() < kDegenerateCross ? perpendicular_to(*v) : UnitVec3::normalize(c);
    return {p + w.vec() * thickness, p - w.vec() * thickness};
}

BillboardPair billboard_vertices(const Vec3& p, const Vec3& next, const Camera& camera, double thickness) {
    return billboard_vertices(p, next, camera.position(), thickness);
}

RgbaLayer shade_context(const GBuffer& gbuffer, const Camera& camera, const RenderStyle& style,
                        const RenderOptions& opts) {
    RgbaLayer layer(gbuffer.width, gbuffer.height);
    const TileGrid grid(gbuffer.width, gbuffer.height);
    for_each_tile(grid, opts.threads, [&](const PixelRect& rect) {
        for (int y = rect.y0; y < rect.y1; ++y) {
            for (int x = rect.x0; x < rect.x1; ++x) {
                const std::size_t idx = gbuffer.index(x, y);
                if (!gbuffer.hit[idx]) continue;
                auto v = UnitVec3::try_normalize(camera.position() - gbuffer.position[idx]);
                if (!v) continue;
                const double facing = std::min(1.0, std::abs(dot(*v, gbuffer.normal[idx])));
                const double light = 0.45 + 0.55 * facing;
                const Color& base = style.surface_color;
                layer.pixels[idx] = {base.r * light, base.g * light, base.b * light,
                                     fresnel_opacity(*v, gbuffer.normal[idx], style.context_fresnel_r)};
            }
        }
    });
    return layer;
}

PixelMask silhouette_mask(const SurfaceMesh& mesh, const Camera& camera, double extrusion, const PixelMask& base,
                          const RenderOptions& opts) {
    if (!(extrusion > 0.0)) throw std::invalid_argument("silhouette extrusion must be > 0");
    std::vector<Vec3> pushed(mesh.vertices.size());
    for (std::size_t i = 0; i < pushed.size(); ++i) pushed[i] = mesh.vertices[i] + mesh.normals[i].vec() * extrusion;
    PixelMask mask = coverage_mask(pushed, mesh.triangles, camera, opts);
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = (mask[i] && !base[i]) ? 1 : 0;
    return mask;
}

PixelMask silhouette_mask(const SurfaceMesh& mesh, const Camera& camera, double extrusion, const RenderOptions& opts) {
    if (!(extrusion > 0.0)) throw std::invalid_argument("silhouette extrusion must be > 0");
    const PixelMask base = coverage_mask(mesh.vertices, mesh.triangles, camera, opts);
    return silhouette_mask(mesh, camera, extrusion, base, opts);
}

RgbaLayer silhouette_layer(const PixelMask& mask, int width, int height, const Color& color) {
    RgbaLayer layer(width, height);
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) layer.pixels[i] = {color.r, color.g, color.b, 1.0};
    return layer;
}

}  // namespace lens3de
