#include <stdexcept>
#include <string>
#include <unordered_set>

#include "lens3de/mesh.hpp"

namespace lens3de {

namespace {

const AttributeLayer* find_in(const std::vector<AttributeLayer>& layers, const std::string& name) {
    for (const auto& l : layers)
        if (l.name == name) return &l;
    return nullptr;
}

}  // namespace

const AttributeLayer* SurfaceMesh::find_layer(const std::string& name) const {
    return find_in(attribute_layers, name);
}

int SurfaceMesh::layer_index(const std::string& name) const {
    for (std::size_t i = 0; i < attribute_layers.size(); ++i)
        if (attribute_layers[i].name == name) return static_cast<int>(i);
    return -1;
}

void SurfaceMesh::validate() const {
    const std::size_t n = vertices.size();
    if (normals.size() != n)
        throw std::invalid_argument("mesh has " + std::to_string(normals.size()) + " normals for " +
                                    std::to_string(n) + " vertices");
    for (std::size_t i = 0; i < n; ++i)
        if (!vertices[i].is_finite())
            throw std::invalid_argument("mesh vertex " + std::to_string(i) + " is not finite");
    for (std::size_t t = 0; t < triangles.size(); ++t)
        for (auto idx : triangles[t])
            if (idx >= n)
                throw std::invalid_argument("triangle " + std::to_string(t) + " references vertex " +
                                            std::to_string(idx) + " of " + std::to_string(n));
    for (const auto& layer : attribute_layers)
        if (layer.values.size() != n)
            throw std::invalid_argument("attribute '" + layer.name + "' has " +
                                        std::to_string(layer.values.size()) + " values for " +
                                        std::to_string(n) + " vertices");
}

double SurfaceMesh::triangle_area(std::size_t t) const {
    const auto& tri = triangles[t];
    const Vec3& a = vertices[tri[0]];
    return 0.5 * cross(vertices[tri[1]] - a, vertices[tri[2]] - a).length();
}

std::vector<UnitVec3> compute_vertex_normals(std::span<const Vec3> vertices,
                                             std::span<const Triangle> triangles) {
    std::vector<Vec3> acc(vertices.size());
    for (const auto& tri : triangles) {
        const Vec3& a = vertices[tri[0]];
        // Unnormalized cross product has length 2*area, which is the weight.
        const Vec3 n = cross(vertices[tri[1]] - a, vertices[tri[2]] - a);
        for (auto idx : tri) acc[idx] += n;
    }
    std::vector<UnitVec3> out;
    out.reserve(vertices.size());
    for (const auto& n : acc) out.push_back(UnitVec3::try_normalize(n).value_or(UnitVec3::unit_z()));
    return out;
}

std::size_t StreamlineSet::total_points() const {
    std::size_t n = 0;
    for (const auto& l : lines) n += l.size();
    return n;
}

std::vector<std::size_t> StreamlineSet::point_offsets() const {
    std::vector<std::size_t> off(lines.size() + 1, 0);
    for (std::size_t i = 0; i < lines.size(); ++i) off[i + 1] = off[i] + lines[i].size();
    return off;
}

const AttributeLayer* StreamlineSet::find_layer(const std::string& name) const {
    return find_in(attribute_layers, name);
}

void StreamlineSet::validate() const {
    if (seed_ids.size() != lines.size())
        throw std::invalid_argument("streamline set has " + std::to_string(seed_ids.size()) +
                                    " seed ids for " + std::to_string(lines.size()) + " lines");
    std::unordered_set<std::int64_t> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].size() < 2)
            throw std::invalid_argument("streamline " + std::to_string(i) + " has fewer than 2 points");
        for (const auto& p : lines[i])
            if (!p.is_finite())
                throw std::invalid_argument("streamline " + std::to_string(i) + " has a non-finite point");
        if (!seen.insert(seed_ids[i]).second)
            throw std::invalid_argument("duplicate seed id " + std::to_string(seed_ids[i]));
    }
    const std::size_t total = total_points();
    for (const auto& layer : attribute_layers)
        if (layer.values.size() != total)
            throw std::invalid_argument("streamline attribute '" + layer.name + "' has " +
                                        std::to_string(layer.values.size()) + " values for " +
                                        std::to_string(total) + " points");
}

}  // namespace lens3de
