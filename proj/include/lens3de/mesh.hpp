#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lens3de/vec3.hpp"

namespace lens3de {

/// Named per-element scalar array. Layer order is significant: it fixes the
/// slice order of the attribute-layer buffer.
struct AttributeLayer {
    std::string name;
    std::vector<double> values;
};

using Triangle = std::array<std::uint32_t, 3>;

struct SurfaceMesh {
    std::vector<Vec3> vertices;
    std::vector<UnitVec3> normals;  // one per vertex
    std::vector<Triangle> triangles;
    std::vector<AttributeLayer> attribute_layers;  // one value per vertex

    bool empty() const { return triangles.empty(); }

    /// Returns nullptr when the layer does not exist.
    const AttributeLayer* find_layer(const std::string& name) const;
    /// Index into attribute_layers, or -1.
    int layer_index(const std::string& name) const;

    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const;

    double triangle_area(std::size_t t) const;
};

/// Area-weighted average of incident face normals, normalized. Vertices with
/// no incident area get +z.
std::vector<UnitVec3> compute_vertex_normals(std::span<const Vec3> vertices,
                                             std::span<const Triangle> triangles);

using Polyline = std::vector<Vec3>;

struct StreamlineSet {
    std::vector<Polyline> lines;
    std::vector<std::int64_t> seed_ids;  // one per line, unique
    std::vector<AttributeLayer> attribute_layers;  // per point, concatenated in line order

    std::size_t size() const { return lines.size(); }
    std::size_t total_points() const;
    /// offsets[i] = index of the first point of line i in the concatenated
    /// attribute arrays; offsets.back() = total_points().
    std::vector<std::size_t> point_offsets() const;

    const AttributeLayer* find_layer(const std::string& name) const;

    void validate() const;
};

}  // namespace lens3de
