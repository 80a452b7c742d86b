#pragma once

#include <string>

#include "lens3de/mesh.hpp"
#include "lens3de/render/camera.hpp"
#include "lens3de/render/colormap.hpp"
#include "lens3de/render/layer.hpp"
#include "lens3de/render/style.hpp"
#include "lens3de/render/tiles.hpp"
#include "lens3de/selection.hpp"

namespace lens3de {

/// Arrow glyph layout along selected lines, in multiples of the thickness.
inline constexpr double kArrowSpacingFactor = 8.0;
inline constexpr double kArrowLengthFactor = 4.0;

struct StreamlineLayers {
    RgbaLayer unselected;
    RgbaLayer selected;
    PixelMask unselected_coverage;
    PixelMask selected_coverage;
};

/// Billboard strips for every line. Unselected lines: flat gray at
/// style.unselected_alpha. Selected lines: opaque, colored by `attr` through
/// `cmap`, with arrow glyphs whose offset along the line is `phase` (in
/// units of the arrow spacing, wrapped to [0, 1)). Within each layer quads
/// are blended back to front by segment depth.
/// Throws std::invalid_argument for an unknown attribute or a selection of
/// the wrong size.
StreamlineLayers render_streamlines(const StreamlineSet& lines, const SelectionBuffer& selection,
                                    const std::string& attr, const Colormap& cmap, const Camera& camera, double phase,
                                    const RenderStyle& style, const RenderOptions& opts = {});

}  // namespace lens3de
