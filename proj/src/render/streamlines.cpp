#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lens3de/render/raster.hpp"
#include "lens3de/render/shading.hpp"
#include "lens3de/render/streamlines.hpp"

namespace lens3de {

namespace {

struct StripVertex {
    Vec3 position;
    double arc = 0.0;     // arclength from the line start
    double across = 0.0;  // +1 upper edge, -1 lower edge
    double value = 0.0;
};

struct Quad {
    std::array<StripVertex, 4> v;  // upper_j, lower_j, upper_j+1, lower_j+1
    double depth = 0.0;
    std::size_t line = 0;
    std::size_t segment = 0;
};

// Billboard strips for one group of lines, ordered far to near.
std::vector<Quad> build_quads(const StreamlineSet& lines, const std::vector<std::size_t>& which,
                              const std::vector<std::size_t>& offsets, const AttributeLayer& attr,
                              const Camera& camera, double thickness) {
    std::vector<Quad> quads;
    std::vector<BillboardPair> pairs;
    std::vector<double> arc;
    for (auto li : which) {
        const auto& pts = lines.lines[li];
        const std::size_t n = pts.size();
        pairs.assign(n, BillboardPair{});
        arc.assign(n, 0.0);
        std::vector<std::uint8_t> ok(n, 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) arc[j] = arc[j - 1] + distance(pts[j - 1], pts[j]);
            const Vec3 next = j + 1 < n ? pts[j + 1] : pts[j] + (pts[j] - pts[j - 1]);
            if (next == pts[j]) {
                ok[j] = 0;
                continue;
            }
            pairs[j] = billboard_vertices(pts[j], next, camera, thickness);
        }
        for (std::size_t j = 0; j + 1 < n; ++j) {
            if (!ok[j] || !ok[j + 1]) continue;
            const double va = attr.values[offsets[li] + j];
            const double vb = attr.values[offsets[li] + j + 1];
            Quad q;
            q.v[0] = {pairs[j].upper, arc[j], 1.0, va};
            q.v[1] = {pairs[j].lower, arc[j], -1.0, va};
            q.v[2] = {pairs[j + 1].upper, arc[j + 1], 1.0, vb};
            q.v[3] = {pairs[j + 1].lower, arc[j + 1], -1.0, vb};
            q.depth = camera.to_view((pts[j] + pts[j + 1]) * 0.5).z;
            q.line = li;
            q.segment = j;
            quads.push_back(q);
        }
    }
    std::stable_sort(quads.begin(), quads.end(), [](const Quad& a, const Quad& b) {
        if (a.depth != b.depth) return a.depth > b.depth;
        if (a.line != b.line) return a.line < b.line;
        return a.segment < b.segment;
    });
    return quads;
}

constexpr std::array<std::array<int, 3>, 2> kQuadTriangles{{{0, 1, 2}, {1, 3, 2}}};

template <class ShadeFn>
void draw_quads(const std::vector<Quad>& quads, const Camera& camera, const RenderOptions& opts, RgbaLayer& layer,
                PixelMask& coverage, ShadeFn&& shade) {
    std::vector<ScreenTriangle> screen;
    screen.reserve(quads.size() * 2);
    for (std::size_t qi = 0; qi < quads.size(); ++qi) {
        const auto& q = quads[qi];
        for (std::size_t t = 0; t < 2; ++t) {
            const auto& idx = kQuadTriangles[t];
            clip_and_project(camera, q.v[idx[0]].position, q.v[idx[1]].position, q.v[idx[2]].position,
                             static_cast<std::uint32_t>(2 * qi + t), screen);
        }
    }
    const TileGrid grid(layer.width, layer.height);
    const auto bins = bin_triangles(screen, grid);
    parallel_for(grid.size(), opts.threads, [&](std::size_t tile_index) {
        const PixelRect rect = grid.tile(tile_index);
        for (auto si : bins[tile_index]) {
            const ScreenTriangle& st = screen[si];
            const Quad& q = quads[st.source / 2];
            const auto& idx = kQuadTriangles[st.source % 2];
            rasterize_triangle(st, rect, [&](const Fragment& f) {
                StripVertex sv;
                for (int k = 0; k < 3; ++k) {
                    const StripVertex& src = q.v[idx[k]];
                    sv.arc += src.arc * f.bary[k];
                    sv.across += src.across * f.bary[k];
                    sv.value += src.value * f.bary[k];
                }
                const std::size_t p = static_cast<std::size_t>(f.y) * layer.width + f.x;
                blend_over(layer.pixels[p], shade(sv));
                coverage[p] = 1;
            });
        }
    });
}

}  // namespace

StreamlineLayers render_streamlines(const StreamlineSet& lines, const SelectionBuffer& selection,
                                    const std::string& attr, const Colormap& cmap, const Camera& camera, double phase,
                                    const RenderStyle& style, const RenderOptions& opts) {
    const AttributeLayer* layer = lines.find_layer(attr);
    if (!layer) throw std::invalid_argument("unknown streamline attribute '" + attr + "'");
    if (selection.size() != lines.size()) throw std::invalid_argument("selection buffer does not match line count");
    if (!std::isfinite(phase)) throw std::invalid_argument("phase must be finite");
    if (!(style.line_thickness > 0.0)) throw std::invalid_argument("line thickness must be > 0");
    phase -= std::floor(phase);

    const int w = camera.width();
    const int h = camera.height();
    const std::size_t npx = static_cast<std::size_t>(w) * h;
    StreamlineLayers out{RgbaLayer(w, h), RgbaLayer(w, h), PixelMask(npx, 0), PixelMask(npx, 0)};

    const auto offsets = lines.point_offsets();
    std::vector<std::size_t> sel_ids, unsel_ids;
    for (std::size_t i = 0; i < lines.size(); ++i) (selection[i] ? sel_ids : unsel_ids).push_back(i);

    const double t = style.line_thickness;
    const Color gray{style.unselected_line_color.r, style.unselected_line_color.g, style.unselected_line_color.b,
                     style.unselected_alpha};
    draw_quads(build_quads(lines, unsel_ids, offsets, *layer, camera, t), camera, opts, out.unselected,
               out.unselected_coverage, [&](const StripVertex&) { return gray; });

    const double spacing = kArrowSpacingFactor * t;
    const double length = kArrowLengthFactor * t;
    draw_quads(build_quads(lines, sel_ids, offsets, *layer, camera, t), camera, opts, out.selected,
               out.selected_coverage, [&](const StripVertex& sv) {
                   Color c = colormap_lookup(cmap, sv.value);
                   double cycle = sv.arc / spacing - phase;
                   cycle -= std::floor(cycle);
                   const double local = cycle * spacing;
                   // Arrow head: full width at its base, tapering to a tip downstream.
                   if (local < length && std::abs(sv.across) <= 1.0 - local / length) {
                       c.r *= 0.35;
                       c.g *= 0.35;
                       c.b *= 0.35;
                   }
                   return c;
               });
    return out;
}

}  // namespace lens3de
