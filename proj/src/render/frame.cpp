#include <chrono>

#include "lens3de/render/composite.hpp"
#include "lens3de/render/decal.hpp"
#include "lens3de/render/frame.hpp"
#include "lens3de/render/gbuffer.hpp"
#include "lens3de/render/lens_widgets.hpp"
#include "lens3de/render/shading.hpp"
#include "lens3de/render/streamlines.hpp"

namespace lens3de {

namespace {

class StageClock {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

FrameResult render_frame(const Scene& scene, const Lens3De& lens, const Camera& camera,
                         const SelectionBuffer& selection, double phase, const RenderOptions& opts) {
    const RenderStyle& style = scene.config.style;
    const int w = camera.width();
    const int h = camera.height();
    FrameResult result;
    StageClock clock;

    const GBuffer gbuffer = rasterize_gbuffer(scene.mesh, camera, opts);
    const PixelMask outline = scene.mesh.empty()
                                  ? PixelMask(static_cast<std::size_t>(w) * h, 0)
                                  : silhouette_mask(scene.mesh, camera, style.silhouette_extrusion, gbuffer.hit, opts);
    result.timings.gbuffer_ms = clock.lap();

    const ALBuffer albuffer = rasterize_albuffer(scene.mesh, camera, gbuffer, opts);
    result.timings.albuffer_ms = clock.lap();

    DecalLayer decal;
    const bool has_decal = !scene.mesh.empty() && !scene.config.surface_focus_attribute.empty();
    if (has_decal)
        decal = decal_pass(gbuffer, albuffer, lens, scene.config.surface_focus_attribute, scene.surface_colormap(),
                           camera, opts);
    result.timings.decal_ms = clock.lap();

    StreamlineLayers lines;
    const bool has_lines = scene.lines.size() > 0;
    if (has_lines)
        lines = render_streamlines(scene.lines, selection, scene.config.flow_focus_attribute, scene.flow_colormap(),
                                   camera, phase, style, opts);
    result.timings.lines_ms = clock.lap();

    const RgbaLayer context = shade_context(gbuffer, camera, style, opts);
    const RgbaLayer outline_layer = silhouette_layer(outline, w, h, style.silhouette_color);
    const LensLayers lens_layers =
        render_lens_and_widgets(lens, camera, style.show_disk, style.show_center_ball, style, opts);

    CompositeLayers layers;
    layers.context_surface = &context;
    layers.silhouette = &outline_layer;
    layers.unselected_lines = has_lines ? &lines.unselected : nullptr;
    layers.selected_lines = has_lines ? &lines.selected : nullptr;
    layers.decal = has_decal ? &decal.layer : nullptr;
    layers.lens_sphere = &lens_layers.sphere;
    layers.widgets = &lens_layers.widgets;
    result.image = composite(layers, w, h, scene.config.background, opts);
    result.timings.composite_ms = clock.lap();
    return result;
}

}  // namespace lens3de
