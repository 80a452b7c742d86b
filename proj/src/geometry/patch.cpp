#include <stdexcept>

#include "lens3de/geometry.hpp"

namespace lens3de {

PatchSelection ball_surface_patch(const SurfaceMesh& mesh, const Ball& ball) {
    PatchSelection patch;
    patch.vertex_mask.resize(mesh.vertices.size());
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
        patch.vertex_mask[v] = point_in_ball(mesh.vertices[v], ball) ? 1 : 0;

    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        int inside = 0;
        for (auto idx : mesh.triangles[t]) inside += patch.vertex_mask[idx];
        if (inside == 3)
            patch.full_triangle_ids.push_back(static_cast<std::uint32_t>(t));
        else if (inside > 0)
            patch.partial_triangle_ids.push_back(static_cast<std::uint32_t>(t));
    }
    return patch;
}

double patch_area(const SurfaceMesh& mesh, const Ball& ball, const PatchSelection& patch,
                  int subdivisions) {
    if (subdivisions < 1) throw std::invalid_argument("patch_area: subdivisions must be >= 1");
    double area = 0.0;
    for (auto t : patch.full_triangle_ids) area += mesh.triangle_area(t);

    // Regular subdivision of the barycentric domain: n^2 congruent
    // sub-triangles, each tested at its centroid.
    const int n = subdivisions;
    const double inv = 1.0 / n;
    for (auto t : patch.partial_triangle_ids) {
        const auto& tri = mesh.triangles[t];
        const Vec3& a = mesh.vertices[tri[0]];
        const Vec3 e1 = mesh.vertices[tri[1]] - a;
        const Vec3 e2 = mesh.vertices[tri[2]] - a;
        int hits = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n - i; ++j) {
                // upward sub-triangle (i,j),(i+1,j),(i,j+1)
                const double u = (i + 1.0 / 3.0) * inv;
                const double v = (j + 1.0 / 3.0) * inv;
                if (point_in_ball(a + e1 * u + e2 * v, ball)) ++hits;
                if (j < n - i - 1) {
                    // downward sub-triangle (i+1,j),(i,j+1),(i+1,j+1)
                    const double u2 = (i + 2.0 / 3.0) * inv;
                    const double v2 = (j + 2.0 / 3.0) * inv;
                    if (point_in_ball(a + e1 * u2 + e2 * v2, ball)) ++hits;
                }
            }
        }
        area += mesh.triangle_area(t) * hits / static_cast<double>(n * n);
    }
    return area;
}

}  // namespace lens3de
