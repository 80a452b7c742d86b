#include <algorithm>

#include "lens3de/render/raster.hpp"

namespace lens3de {

namespace {

struct ClipPoint {
    ViewPoint view;
    std::array<double, 3> bary;
};

ClipPoint lerp_clip(const ClipPoint& a, const ClipPoint& b, double t) {
    ClipPoint r;
    r.view = {a.view.x + (b.view.x - a.view.x) * t, a.view.y + (b.view.y - a.view.y) * t,
              a.view.z + (b.view.z - a.view.z) * t};
    for (int k = 0; k < 3; ++k) r.bary[k] = a.bary[k] + (b.bary[k] - a.bary[k]) * t;
    return r;
}

}  // namespace

void clip_and_project(const Camera& camera, const Vec3& a, const Vec3& b, const Vec3& c, std::uint32_t source,
                      std::vector<ScreenTriangle>& out) {
    const std::array<ClipPoint, 3> in{ClipPoint{camera.to_view(a), {1, 0, 0}}, ClipPoint{camera.to_view(b), {0, 1, 0}},
                                      ClipPoint{camera.to_view(c), {0, 0, 1}}};
    const double near = camera.near();
    if (in[0].view.z > camera.far() && in[1].view.z > camera.far() && in[2].view.z > camera.far()) return;

    std::array<ClipPoint, 4> poly;
    int count = 0;
    for (int i = 0; i < 3; ++i) {
        const ClipPoint& cur = in[i];
        const ClipPoint& nxt = in[(i + 1) % 3];
        const bool cur_in = cur.view.z >= near;
        const bool nxt_in = nxt.view.z >= near;
        if (cur_in) poly[count++] = cur;
        if (cur_in != nxt_in) {
            const double t = (near - cur.view.z) / (nxt.view.z - cur.view.z);
            ClipPoint p = lerp_clip(cur, nxt, t);
            p.view.z = near;
            poly[count++] = p;
        }
    }
    if (count < 3) return;

    std::array<RasterVertex, 4> rv;
    for (int i = 0; i < count; ++i) rv[i] = {camera.view_to_screen(poly[i].view), poly[i].view.z, poly[i].bary};
    for (int i = 1; i + 1 < count; ++i) out.push_back(ScreenTriangle{{rv[0], rv[i], rv[i + 1]}, source});
}

PixelRect triangle_pixel_bounds(const ScreenTriangle& tri, int width, int height) {
    double min_x = tri.v[0].screen.x, max_x = min_x, min_y = tri.v[0].screen.y, max_y = min_y;
    for (int i = 1; i < 3; ++i) {
        min_x = std::min(min_x, tri.v[i].screen.x);
        max_x = std::max(max_x, tri.v[i].screen.x);
        min_y = std::min(min_y, tri.v[i].screen.y);
        max_y = std::max(max_y, tri.v[i].screen.y);
    }
    auto clampi = [](double v, int hi) { return static_cast<int>(std::clamp(v, 0.0, static_cast<double>(hi))); };
    return {clampi(std::floor(min_x - 0.5), width), clampi(std::floor(min_y - 0.5), height),
            clampi(std::ceil(max_x + 0.5), width), clampi(std::ceil(max_y + 0.5), height)};
}

std::vector<std::vector<std::uint32_t>> bin_triangles(std::span<const ScreenTriangle> tris, const TileGrid& grid) {
    std::vector<std::vector<std::uint32_t>> bins(grid.size());
    const int ts = grid.tile_size();
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const PixelRect r = triangle_pixel_bounds(tris[i], grid.width(), grid.height());
        if (r.empty()) continue;
        const int tx0 = r.x0 / ts, tx1 = (r.x1 - 1) / ts;
        const int ty0 = r.y0 / ts, ty1 = (r.y1 - 1) / ts;
        for (int ty = ty0; ty <= ty1; ++ty)
            for (int tx = tx0; tx <= tx1; ++tx)
                bins[static_cast<std::size_t>(ty) * grid.columns() + tx].push_back(static_cast<std::uint32_t>(i));
    }
    return bins;
}

bool clip_and_project_segment(const Camera& camera, const Vec3& a, const Vec3& b, ScreenPoint& sa, ScreenPoint& sb) {
    ViewPoint va = camera.to_view(a);
    ViewPoint vb = camera.to_view(b);
    const double near = camera.near();
    if (va.z < near && vb.z < near) return false;
    auto clip = [near](ViewPoint& p, const ViewPoint& other) {
        const double t = (near - p.z) / (other.z - p.z);
        p = {p.x + (other.x - p.x) * t, p.y + (other.y - p.y) * t, near};
    };
    if (va.z < near) clip(va, vb);
    if (vb.z < near) clip(vb, va);
    sa = camera.view_to_screen(va);
    sb = camera.view_to_screen(vb);
    return true;
}

}  // namespace lens3de
