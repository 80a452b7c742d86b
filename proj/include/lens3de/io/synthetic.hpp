#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lens3de/mesh.hpp"

namespace lens3de {

struct SyntheticSpec {
    std::size_t triangles = 15000;
    std::size_t lines = 2000;
    std::uint64_t seed = 7;
    std::size_t points_per_line = 64;
};

/// How a synthetic streamline was constructed.
enum class LineKind : std::uint8_t {
    Axial,    // follows the tube axis in the +s direction
    Helical,  // near-wall helix, pitch angle well above 15 degrees
    Reverse,  // axial but traversed in -s direction
};

/// Analytic description of the synthetic vessel: a tube of length 10 along
/// x whose axis bends in the xy-plane, with a bulge halfway along.
class TubeShape {
public:
    static constexpr double kLength = 10.0;
    static constexpr double kBaseRadius = 1.0;
    static constexpr double kBend = 1.5;
    static constexpr double kBulge = 0.6;
    static constexpr double kBulgeWidth = 0.12;

    /// s in [0, 1] along the axis.
    static Vec3 axis_point(double s);
    static UnitVec3 axis_tangent(double s);
    /// In-plane normal; (normal, +z) span the cross-section.
    static UnitVec3 axis_normal(double s);
    static double radius(double s);
    /// Bulge profile in [0, 1].
    static double bulge(double s);
};

struct SyntheticScene {
    SurfaceMesh mesh;
    StreamlineSet lines;
    std::vector<LineKind> line_kinds;  // parallel to lines
};

/// Deterministic in `spec`. The triangle count is 2 * around * along with the
/// grid chosen to land within 1% of spec.triangles. Mesh layers: "curvature"
/// (mean curvature of the local tube cross-section) and "pressure". Line
/// layers: "speed" and "vorticity".
SyntheticScene generate_synthetic_scene(const SyntheticSpec& spec);

}  // namespace lens3de
