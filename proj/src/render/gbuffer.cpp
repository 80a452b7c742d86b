#include <cmath>
#include <stdexcept>

#include "lens3de/render/gbuffer.hpp"
#include "lens3de/render/raster.hpp"

namespace lens3de {

GBuffer::GBuffer(int w, int h) : width(w), height(h) {
    const std::size_t n = static_cast<std::size_t>(w) * h;
    position.assign(n, Vec3{});
    normal.assign(n, Vec3{});
    depth.assign(n, std::numeric_limits<double>::infinity());
    hit.assign(n, 0);
    triangle.assign(n, kNoTriangle);
    bary.assign(n, {0, 0, 0});
}

std::size_t GBuffer::hit_count() const {
    std::size_t n = 0;
    for (auto h : hit) n += h;
    return n;
}

int ALBuffer::layer_index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<ScreenTriangle> project_all(std::span<const Vec3> vertices, std::span<const Triangle> triangles,
                                        const Camera& camera) {
    std::vector<ScreenTriangle> out;
    out.reserve(triangles.size());
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        const auto& tri = triangles[t];
        clip_and_project(camera, vertices[tri[0]], vertices[tri[1]], vertices[tri[2]], static_cast<std::uint32_t>(t),
                         out);
    }
    return out;
}

}  // namespace

GBuffer rasterize_gbuffer(const SurfaceMesh& mesh, const Camera& camera, const RenderOptions& opts) {
    GBuffer g(camera.width(), camera.height());
    if (mesh.triangles.empty()) return g;

    const auto screen = project_all(mesh.vertices, mesh.triangles, camera);
    const TileGrid grid(camera.width(), camera.height());
    const auto bins = bin_triangles(screen, grid);

    parallel_for(grid.size(), opts.threads, [&](std::size_t tile_index) {
        const PixelRect rect = grid.tile(tile_index);
        for (auto i : bins[tile_index]) {
            const ScreenTriangle& st = screen[i];
            rasterize_triangle(st, rect, [&](const Fragment& f) {
                const std::size_t idx = g.index(f.x, f.y);
                if (!(f.depth < g.depth[idx])) return;
                g.depth[idx] = f.depth;
                g.triangle[idx] = st.source;
                g.bary[idx] = f.bary;
                g.hit[idx] = 1;
            });
        }
        // Resolve geometry once per pixel from the winning triangle.
        for (int y = rect.y0; y < rect.y1; ++y) {
            for (int x = rect.x0; x < rect.x1; ++x) {
                const std::size_t idx = g.index(x, y);
                if (!g.hit[idx]) continue;
                const auto& tri = mesh.triangles[g.triangle[idx]];
                const auto& b = g.bary[idx];
                g.position[idx] = mesh.vertices[tri[0]] * b[0] + mesh.vertices[tri[1]] * b[1] +
                                  mesh.vertices[tri[2]] * b[2];
                const Vec3 n = mesh.normals[tri[0]].vec() * b[0] + mesh.normals[tri[1]].vec() * b[1] +
                               mesh.normals[tri[2]].vec() * b[2];
                auto un = UnitVec3::try_normalize(n);
                if (!un) {
                    const Vec3& a = mesh.vertices[tri[0]];
                    un = UnitVec3::try_normalize(cross(mesh.vertices[tri[1]] - a, mesh.vertices[tri[2]] - a));
                }
                g.normal[idx] = un ? un->vec() : camera.forward().vec() * -1.0;
            }
        }
    });
    return g;
}

ALBuffer rasterize_albuffer(const SurfaceMesh& mesh, const Camera& camera, const GBuffer& gbuffer,
                            const RenderOptions& opts) {
    if (gbuffer.width != camera.width() || gbuffer.height != camera.height())
        throw std::invalid_argument("G-buffer resolution does not match camera viewport");
    ALBuffer al;
    al.width = gbuffer.width;
    al.height = gbuffer.height;
    const std::size_t n = static_cast<std::size_t>(al.width) * al.height;
    for (const auto& layer : mesh.attribute_layers) {
        al.names.push_back(layer.name);
        al.layers.emplace_back(n, std::numeric_limits<double>::quiet_NaN());
    }
    if (al.layers.empty()) return al;

    const TileGrid grid(al.width, al.height);
    for_each_tile(grid, opts.threads, [&](const PixelRect& rect) {
        for (int y = rect.y0; y < rect.y1; ++y) {
            for (int x = rect.x0; x < rect.x1; ++x) {
                const std::size_t idx = gbuffer.index(x, y);
                if (!gbuffer.hit[idx]) continue;
                const auto& tri = mesh.triangles[gbuffer.triangle[idx]];
                const auto& b = gbuffer.bary[idx];
                for (std::size_t l = 0; l < al.layers.size(); ++l) {
                    const auto& vals = mesh.attribute_layers[l].values;
                    al.layers[l][idx] = vals[tri[0]] * b[0] + vals[tri[1]] * b[1] + vals[tri[2]] * b[2];
                }
            }
        }
    });
    return al;
}

PixelMask coverage_mask(std::span<const Vec3> vertices, std::span<const Triangle> triangles, const Camera& camera,
                        const RenderOptions& opts) {
    PixelMask mask(static_cast<std::size_t>(camera.width()) * camera.height(), 0);
    if (triangles.empty()) return mask;
    const auto screen = project_all(vertices, triangles, camera);
    const TileGrid grid(camera.width(), camera.height());
    const auto bins = bin_triangles(screen, grid);
    parallel_for(grid.size(), opts.threads, [&](std::size_t tile_index) {
        const PixelRect rect = grid.tile(tile_index);
        for (auto i : bins[tile_index])
            rasterize_triangle(screen[i], rect, [&](const Fragment& f) {
                mask[static_cast<std::size_t>(f.y) * camera.width() + f.x] = 1;
            });
    });
    return mask;
}

}  // namespace lens3de
