#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>

#include "lens3de/mesh.hpp"
#include "lens3de/vec3.hpp"

namespace lens3de::testing {

/// Square grid on z = z0 spanning [-half, half]^2 with n x n cells.
inline SurfaceMesh grid_plane(double half, int n, double z0 = 0.0) {
    SurfaceMesh m;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            m.vertices.push_back({-half + 2.0 * half * i / n, -half + 2.0 * half * j / n, z0});
    auto id = [n](int i, int j) { return static_cast<std::uint32_t>(j * (n + 1) + i); };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            m.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            m.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    m.normals = compute_vertex_normals(m.vertices, m.triangles);
    return m;
}

/// Subdivided icosahedron projected onto a sphere.
inline SurfaceMesh icosphere(int subdivisions, double radius = 1.0, Vec3 center = {}) {
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                           {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
    for (auto& p : v) p = p / p.length();
    std::vector<Triangle> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
                               {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
                               {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
    for (int s = 0; s < subdivisions; ++s) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> mid;
        auto midpoint = [&](std::uint32_t a, std::uint32_t b) {
            const auto key = std::minmax(a, b);
            if (auto it = mid.find(key); it != mid.end()) return it->second;
            Vec3 p = (v[a] + v[b]) * 0.5;
            v.push_back(p / p.length());
            return mid[key] = static_cast<std::uint32_t>(v.size() - 1);
        };
        std::vector<Triangle> next;
        for (const auto& tri : f) {
            const auto a = midpoint(tri[0], tri[1]);
            const auto b = midpoint(tri[1], tri[2]);
            const auto c = midpoint(tri[2], tri[0]);
            next.push_back({tri[0], a, c});
            next.push_back({tri[1], b, a});
            next.push_back({tri[2], c, b});
            next.push_back({a, b, c});
        }
        f = std::move(next);
    }
    SurfaceMesh m;
    for (const auto& p : v) m.vertices.push_back(center + p * radius);
    m.triangles = f;
    m.normals = compute_vertex_normals(m.vertices, m.triangles);
    return m;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("lens3de_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    while (true) {
        const Vec3 v{g(rng), g(rng), g(rng)};
        if (v.length() > 1e-6) return v / v.length();
    }
}

}  // namespace lens3de::testing
