#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "lens3de/render/camera.hpp"
#include "lens3de/render/tiles.hpp"
#include "lens3de/vec3.hpp"

namespace lens3de {

/// Projected vertex of a (possibly near-clipped) triangle. `source_bary` are
/// the vertex's barycentric coordinates in the unclipped source triangle.
struct RasterVertex {
    ScreenPoint screen;
    double depth = 0.0;  // camera-space forward distance
    std::array<double, 3> source_bary{};
};

struct ScreenTriangle {
    std::array<RasterVertex, 3> v;
    std::uint32_t source = 0;  // caller-defined id of the source triangle
};

/// Clips a world-space triangle against the near plane, drops it when it
/// lies wholly beyond the far plane, and appends 0-2 screen triangles.
void clip_and_project(const Camera& camera, const Vec3& a, const Vec3& b, const Vec3& c, std::uint32_t source,
                      std::vector<ScreenTriangle>& out);

/// Screen-space bounding box of a triangle, clamped to the viewport.
PixelRect triangle_pixel_bounds(const ScreenTriangle& tri, int width, int height);

/// Per-tile lists of indices into `tris`, ascending within each tile.
std::vector<std::vector<std::uint32_t>> bin_triangles(std::span<const ScreenTriangle> tris, const TileGrid& grid);

struct Fragment {
    int x = 0;
    int y = 0;
    double depth = 0.0;
    std::array<double, 3> bary{};  // perspective-correct, w.r.t. the source triangle
};

namespace detail {

struct EdgeSetup {
    ScreenPoint a;
    ScreenPoint b;
    double sign = 1.0;
    bool include_ties = false;

    double eval(double px, double py) const {
        return sign * ((b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x));
    }
};

// Edge function evaluated with endpoints in a canonical order, so two
// triangles sharing an edge see exactly negated values.
inline EdgeSetup make_edge(ScreenPoint p, ScreenPoint q) {
    const bool swap = (q.x < p.x) || (q.x == p.x && q.y < p.y);
    EdgeSetup e;
    e.a = swap ? q : p;
    e.b = swap ? p : q;
    e.sign = swap ? -1.0 : 1.0;
    return e;
}

// Top-left style tie rule: a sample exactly on an edge belongs to the
// triangle whose inward edge normal points toward +x (or +y when vertical).
inline void finalize_edge(EdgeSetup& e) {
    const double gx = -e.sign * (e.b.y - e.a.y);
    const double gy = e.sign * (e.b.x - e.a.x);
    e.include_ties = gx > 0.0 || (gx == 0.0 && gy > 0.0);
}

inline bool inside(double e, const EdgeSetup& s) { return e > 0.0 || (e == 0.0 && s.include_ties); }

}  // namespace detail

/// Visits every pixel of `clip` whose center lies inside the triangle,
/// row-major. Shared edges are covered exactly once.
template <class FragmentFn>
void rasterize_triangle(const ScreenTriangle& tri, const PixelRect& clip, FragmentFn&& fn) {
    const auto& v = tri.v;
    std::array<detail::EdgeSetup, 3> edges{detail::make_edge(v[1].screen, v[2].screen),
                                           detail::make_edge(v[2].screen, v[0].screen),
                                           detail::make_edge(v[0].screen, v[1].screen)};
    const double area = edges[0].eval(v[0].screen.x, v[0].screen.y);
    if (!(area != 0.0) || !std::isfinite(area)) return;
    if (area < 0.0)
        for (auto& e : edges) e.sign = -e.sign;
    for (auto& e : edges) detail::finalize_edge(e);

    const double min_x = std::min({v[0].screen.x, v[1].screen.x, v[2].screen.x});
    const double max_x = std::max({v[0].screen.x, v[1].screen.x, v[2].screen.x});
    const double min_y = std::min({v[0].screen.y, v[1].screen.y, v[2].screen.y});
    const double max_y = std::max({v[0].screen.y, v[1].screen.y, v[2].screen.y});
    const int x0 = std::max(clip.x0, static_cast<int>(std::floor(std::max(min_x - 0.5, -1.0e9))));
    const int x1 = std::min(clip.x1, static_cast<int>(std::ceil(std::min(max_x + 0.5, 1.0e9))));
    const int y0 = std::max(clip.y0, static_cast<int>(std::floor(std::max(min_y - 0.5, -1.0e9))));
    const int y1 = std::min(clip.y1, static_cast<int>(std::ceil(std::min(max_y + 0.5, 1.0e9))));

    const double inv_z0 = 1.0 / v[0].depth;
    const double inv_z1 = 1.0 / v[1].depth;
    const double inv_z2 = 1.0 / v[2].depth;

    for (int y = y0; y < y1; ++y) {
        const double py = y + 0.5;
        for (int x = x0; x < x1; ++x) {
            const double px = x + 0.5;
            const double e0 = edges[0].eval(px, py);
            if (!detail::inside(e0, edges[0])) continue;
            const double e1 = edges[1].eval(px, py);
            if (!detail::inside(e1, edges[1])) continue;
            const double e2 = edges[2].eval(px, py);
            if (!detail::inside(e2, edges[2])) continue;

            const double sum = e0 + e1 + e2;
            const double w0 = e0 / sum * inv_z0;
            const double w1 = e1 / sum * inv_z1;
            const double w2 = e2 / sum * inv_z2;
            const double inv_depth = w0 + w1 + w2;
            const double depth = 1.0 / inv_depth;
            const double b0 = w0 * depth;
            const double b1 = w1 * depth;
            const double b2 = w2 * depth;

            Fragment f;
            f.x = x;
            f.y = y;
            f.depth = depth;
            for (int k = 0; k < 3; ++k)
                f.bary[k] = b0 * v[0].source_bary[k] + b1 * v[1].source_bary[k] + b2 * v[2].source_bary[k];
            fn(f);
        }
    }
}

/// Pixels within `half_width` pixels of the screen segment [a, b], visited
/// row-major. Endpoint order does not affect the result.
template <class PixelFn>
void rasterize_segment(ScreenPoint a, ScreenPoint b, double half_width, const PixelRect& clip, PixelFn&& fn) {
    if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);
    const int x0 = std::max(clip.x0, static_cast<int>(std::floor(std::min(a.x, b.x) - half_width)));
    const int x1 = std::min(clip.x1, static_cast<int>(std::ceil(std::max(a.x, b.x) + half_width)));
    const int y0 = std::max(clip.y0, static_cast<int>(std::floor(std::min(a.y, b.y) - half_width)));
    const int y1 = std::min(clip.y1, static_cast<int>(std::ceil(std::max(a.y, b.y) + half_width)));
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    const double hw2 = half_width * half_width;
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            const double px = x + 0.5 - a.x;
            const double py = y + 0.5 - a.y;
            double t = len2 > 0.0 ? (px * dx + py * dy) / len2 : 0.0;
            t = std::clamp(t, 0.0, 1.0);
            const double ex = px - t * dx;
            const double ey = py - t * dy;
            if (ex * ex + ey * ey <= hw2) fn(x, y);
        }
    }
}

/// Clips a world-space segment to the near plane and projects it; false when
/// it lies wholly in front of the near plane.
bool clip_and_project_segment(const Camera& camera, const Vec3& a, const Vec3& b, ScreenPoint& sa, ScreenPoint& sb);

}  // namespace lens3de
