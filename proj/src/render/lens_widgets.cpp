#include <array>
#include <cmath>
#include <limits>

#include "lens3de/render/lens_widgets.hpp"
#include "lens3de/render/raster.hpp"
#include "lens3de/render/shading.hpp"

namespace lens3de {

namespace {

constexpr int kSphereSlices = 48;
constexpr int kSphereStacks = 24;
constexpr double kCenterBallScale = 0.08;
constexpr double kWidgetHalfWidthPx = 0.9;

struct SphereMesh {
    std::vector<Vec3> vertices;
    std::vector<Triangle> triangles;
};

SphereMesh tessellate_sphere(const Vec3& c, double r) {
    SphereMesh m;
    for (int i = 0; i <= kSphereStacks; ++i) {
        const double theta = kPi * i / kSphereStacks;
        for (int j = 0; j < kSphereSlices; ++j) {
            const double phi = 2.0 * kPi * j / kSphereSlices;
            m.vertices.push_back(
                c + Vec3{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)} * r);
        }
    }
    for (int i = 0; i < kSphereStacks; ++i) {
        for (int j = 0; j < kSphereSlices; ++j) {
            const auto a = static_cast<std::uint32_t>(i * kSphereSlices + j);
            const auto b = static_cast<std::uint32_t>(i * kSphereSlices + (j + 1) % kSphereSlices);
            const auto c2 = static_cast<std::uint32_t>((i + 1) * kSphereSlices + j);
            const auto d = static_cast<std::uint32_t>((i + 1) * kSphereSlices + (j + 1) % kSphereSlices);
            if (i != 0) m.triangles.push_back({a, c2, b});
            if (i != kSphereStacks - 1) m.triangles.push_back({b, c2, d});
        }
    }
    return m;
}

// Nearest-surface world positions of a sphere mesh; NaN-free only where hit.
struct SphereHits {
    std::vector<double> depth;
    std::vector<Vec3> position;
};

SphereHits rasterize_sphere(const SphereMesh& m, const Camera& camera, const RenderOptions& opts) {
    const std::size_t n = static_cast<std::size_t>(camera.width()) * camera.height();
    SphereHits hits{std::vector<double>(n, std::numeric_limits<double>::infinity()), std::vector<Vec3>(n)};
    std::vector<ScreenTriangle> screen;
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
        const auto& tri = m.triangles[t];
        clip_and_project(camera, m.vertices[tri[0]], m.vertices[tri[1]], m.vertices[tri[2]],
                         static_cast<std::uint32_t>(t), screen);
    }
    const TileGrid grid(camera.width(), camera.height());
    const auto bins = bin_triangles(screen, grid);
    parallel_for(grid.size(), opts.threads, [&](std::size_t tile_index) {
        const PixelRect rect = grid.tile(tile_index);
        for (auto si : bins[tile_index]) {
            const ScreenTriangle& st = screen[si];
            const auto& tri = m.triangles[st.source];
            rasterize_triangle(st, rect, [&](const Fragment& f) {
                const std::size_t idx = static_cast<std::size_t>(f.y) * camera.width() + f.x;
                if (!(f.depth < hits.depth[idx])) return;
                hits.depth[idx] = f.depth;
                hits.position[idx] = m.vertices[tri[0]] * f.bary[0] + m.vertices[tri[1]] * f.bary[1] +
                                     m.vertices[tri[2]] * f.bary[2];
            });
        }
    });
    return hits;
}

// Orthonormal in-plane basis whose first axis is identical for n and -n.
std::pair<Vec3, Vec3> disk_basis(const UnitVec3& n) {
    const double ax = std::abs(n.x()), ay = std::abs(n.y()), az = std::abs(n.z());
    Vec3 a{1, 0, 0};
    if (ay < ax && ay <= az) a = {0, 1, 0};
    else if (az < ax && az < ay) a = {0, 0, 1};
    const UnitVec3 u = UnitVec3::normalize(a - n.vec() * dot(a, n));
    return {u.vec(), cross(n, u)};
}

void draw_world_segment(const Camera& camera, const Vec3& a, const Vec3& b, PixelMask& mask) {
    ScreenPoint sa, sb;
    if (!clip_and_project_segment(camera, a, b, sa, sb)) return;
    const PixelRect full{0, 0, camera.width(), camera.height()};
    rasterize_segment(sa, sb, kWidgetHalfWidthPx, full,
                      [&](int x, int y) { mask[static_cast<std::size_t>(y) * camera.width() + x] = 1; });
}

}  // namespace

LensLayers render_lens_and_widgets(const Lens3De& lens, const Camera& camera, bool show_disk, bool show_center_ball,
                                   const RenderStyle& style, const RenderOptions& opts) {
    const int w = camera.width();
    const int h = camera.height();
    const std::size_t n = static_cast<std::size_t>(w) * h;
    LensLayers out{RgbaLayer(w, h), RgbaLayer(w, h), PixelMask(n, 0), PixelMask(n, 0), PixelMask(n, 0),
                   PixelMask(n, 0)};
    const Vec3& c = lens.ball().center();
    const double r = lens.ball().radius();

    const SphereHits sphere = rasterize_sphere(tessellate_sphere(c, r), camera, opts);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(sphere.depth[i])) continue;
        const auto normal = UnitVec3::try_normalize(sphere.position[i] - c);
        const auto view = UnitVec3::try_normalize(camera.position() - sphere.position[i]);
        if (!normal || !view) continue;
        const Color& lc = style.lens_color;
        out.sphere.pixels[i] = {lc.r, lc.g, lc.b, fresnel_opacity(*view, *normal, style.lens_fresnel_r)};
        out.sphere_mask[i] = 1;
    }

    const Color& wc = style.widget_color;
    if (show_center_ball) {
        const double br = r * kCenterBallScale;
        const SphereHits ball = rasterize_sphere(tessellate_sphere(c, br), camera, opts);
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(ball.depth[i])) continue;
            const auto normal = UnitVec3::try_normalize(ball.position[i] - c);
            const auto view = UnitVec3::try_normalize(camera.position() - ball.position[i]);
            const double shade = normal && view ? 0.4 + 0.6 * std::abs(dot(*normal, *view)) : 1.0;
            out.widgets.pixels[i] = {wc.r * shade, wc.g * shade, wc.b * shade, 1.0};
            out.center_ball_mask[i] = 1;
        }
    }

    if (show_disk && lens.disk_normal()) {
        const UnitVec3& normal = *lens.disk_normal();
        const auto [u, v] = disk_basis(normal);
        // Angles k and N-k share cos and negate sin exactly, so flipping the
        // normal (v -> -v) maps the vertex set onto itself bit for bit.
        std::array<Vec3, kDiskSegments> ring;
        for (int k = 0; k < kDiskSegments; ++k) {
            const int m = k <= kDiskSegments / 2 ? k : kDiskSegments - k;
            const double theta = 2.0 * kPi * m / kDiskSegments;
            const double cs = std::cos(theta);
            double sn = (m == 0 || m == kDiskSegments / 2) ? 0.0 : std::sin(theta);
            if (k > kDiskSegments / 2) sn = -sn;
            ring[k] = c + (u * cs + v * sn) * r;
        }
        for (int k = 0; k < kDiskSegments; ++k)
            draw_world_segment(camera, ring[k], ring[(k + 1) % kDiskSegments], out.circle_mask);

        const Vec3 tip = c + normal.vec() * r;
        draw_world_segment(camera, c, tip, out.arrow_mask);
        draw_world_segment(camera, tip, tip - normal.vec() * (0.25 * r) + u * (0.12 * r), out.arrow_mask);
        draw_world_segment(camera, tip, tip - normal.vec() * (0.25 * r) - u * (0.12 * r), out.arrow_mask);

        for (std::size_t i = 0; i < n; ++i)
            if (out.circle_mask[i] || out.arrow_mask[i]) out.widgets.pixels[i] = {wc.r, wc.g, wc.b, 1.0};
    }
    return out;
}

}  // namespace lens3de
