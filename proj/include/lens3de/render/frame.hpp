#pragma once

#include "lens3de/geometry.hpp"
#include "lens3de/io/image.hpp"
#include "lens3de/io/scene.hpp"
#include "lens3de/render/camera.hpp"
#include "lens3de/render/tiles.hpp"
#include "lens3de/selection.hpp"

namespace lens3de {

/// Wall time per pipeline stage, milliseconds. "gbuffer" includes the
/// silhouette coverage pass; "composite" includes context shading and the
/// lens layers.
struct StageTimings {
    double gbuffer_ms = 0.0;
    double albuffer_ms = 0.0;
    double decal_ms = 0.0;
    double lines_ms = 0.0;
    double composite_ms = 0.0;

    double total_ms() const { return gbuffer_ms + albuffer_ms + decal_ms + lines_ms + composite_ms; }
};

struct FrameResult {
    FrameImage image;
    StageTimings timings;
};

/// Full deferred frame: G-buffer, AL-buffer, silhouette, Fresnel context,
/// streamline billboards, decal, lens sphere and widgets, composited in
/// that order. Pixel output is independent of opts.threads.
FrameResult render_frame(const Scene& scene, const Lens3De& lens, const Camera& camera,
                         const SelectionBuffer& selection, double phase, const RenderOptions& opts = {});

}  // namespace lens3de
