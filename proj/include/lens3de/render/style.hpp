#pragma once

#include "lens3de/render/colormap.hpp"

namespace lens3de {

struct RenderStyle {
    double context_fresnel_r = 0.5;
    double lens_fresnel_r = 3.0;
    double line_thickness = 0.03;
    double silhouette_extrusion = 0.04;
    double unselected_alpha = 0.15;
    Color surface_color{0.80, 0.80, 0.84, 1.0};
    Color silhouette_color{0.08, 0.08, 0.10, 1.0};
    Color unselected_line_color{0.5, 0.5, 0.5, 1.0};
    Color lens_color{1.0, 1.0, 1.0, 1.0};
    Color widget_color{1.0, 0.78, 0.10, 1.0};
    bool show_disk = true;
    bool show_center_ball = true;
};

}  // namespace lens3de
