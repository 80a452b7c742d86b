#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lens3de/io/synthetic.hpp"

namespace lens3de {

namespace {

// splitmix64; fixed arithmetic so output is identical across platforms
// (std:: distributions are implementation-defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

constexpr double kAxialFraction = 0.60;
constexpr double kHelicalFraction = 0.25;
constexpr double kHelixTwistPerUnit = 0.75;  // rad per unit of axis length
constexpr double kLineStart = 0.005;
constexpr double kLineEnd = 0.995;

}  // namespace

Vec3 TubeShape::axis_point(double s) { return {kLength * s, kBend * std::sin(kPi * s), 0.0}; }

UnitVec3 TubeShape::axis_tangent(double s) {
    return UnitVec3::normalize({kLength, kBend * kPi * std::cos(kPi * s), 0.0});
}

UnitVec3 TubeShape::axis_normal(double s) {
    const UnitVec3 t = axis_tangent(s);
    return UnitVec3::normalize({-t.y(), t.x(), 0.0});
}

double TubeShape::bulge(double s) {
    const double u = (s - 0.5) / kBulgeWidth;
    return std::exp(-u * u);
}

double TubeShape::radius(double s) { return kBaseRadius * (1.0 + kBulge * bulge(s)); }

SyntheticScene generate_synthetic_scene(const SyntheticSpec& spec) {
    if (spec.triangles == 0 || spec.lines == 0)
        throw std::invalid_argument("synthetic scene needs positive triangle and line counts");
    if (spec.points_per_line < 2) throw std::invalid_argument("synthetic lines need at least 2 points");

    SyntheticScene scene;

    // Grid of `around` x `along` quads, aspect roughly 1:3.
    const double half = static_cast<double>(spec.triangles) / 2.0;
    const std::size_t around = std::max<std::size_t>(3, static_cast<std::size_t>(std::llround(std::sqrt(half / 3.0))));
    const std::size_t along = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(half / around)));

    auto& mesh = scene.mesh;
    mesh.vertices.reserve((along + 1) * around);
    AttributeLayer curvature{"curvature", {}};
    AttributeLayer pressure{"pressure", {}};
    for (std::size_t j = 0; j <= along; ++j) {
        const double s = static_cast<double>(j) / along;
        const Vec3 c = TubeShape::axis_point(s);
        const Vec3 n = TubeShape::axis_normal(s);
        const Vec3 z{0, 0, 1};
        const double rho = TubeShape::radius(s);
        for (std::size_t k = 0; k < around; ++k) {
            const double phi = 2.0 * kPi * static_cast<double>(k) / around;
            mesh.vertices.push_back(c + (n * std::cos(phi) + z * std::sin(phi)) * rho);
            curvature.values.push_back(1.0 / (2.0 * rho));
            pressure.values.push_back(1.0 - s + 0.15 * std::cos(phi) * (1.0 + TubeShape::bulge(s)));
        }
    }
    mesh.triangles.reserve(2 * around * along);
    for (std::size_t j = 0; j < along; ++j) {
        for (std::size_t k = 0; k < around; ++k) {
            const auto v00 = static_cast<std::uint32_t>(j * around + k);
            const auto v01 = static_cast<std::uint32_t>(j * around + (k + 1) % around);
            const auto v10 = static_cast<std::uint32_t>((j + 1) * around + k);
            const auto v11 = static_cast<std::uint32_t>((j + 1) * around + (k + 1) % around);
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
        }
    }
    mesh.normals = compute_vertex_normals(mesh.vertices, mesh.triangles);
    mesh.attribute_layers.push_back(std::move(curvature));
    mesh.attribute_layers.push_back(std::move(pressure));

    SplitMix64 rng(spec.seed);
    auto& lines = scene.lines;
    const std::size_t npts = spec.points_per_line;
    lines.lines.reserve(spec.lines);
    AttributeLayer speed{"speed", {}};
    AttributeLayer vorticity{"vorticity", {}};
    speed.values.reserve(spec.lines * npts);
    vorticity.values.reserve(spec.lines * npts);

    for (std::size_t i = 0; i < spec.lines; ++i) {
        const double u_kind = rng.uniform();
        const double u_r = rng.uniform();
        const double u_theta = rng.uniform();
        LineKind kind = LineKind::Reverse;
        if (u_kind < kAxialFraction)
            kind = LineKind::Axial;
        else if (u_kind < kAxialFraction + kHelicalFraction)
            kind = LineKind::Helical;

        // Axial/reverse lines fill the cross-section uniformly; helices stay
        // near the wall where their pitch angle is large.
        const double q = kind == LineKind::Helical ? 0.65 + 0.2 * u_r : 0.85 * std::sqrt(u_r);
        const double theta0 = 2.0 * kPi * u_theta;

        Polyline poly;
        poly.reserve(npts);
        std::vector<double> sp, vo;
        for (std::size_t j = 0; j < npts; ++j) {
            const double s = kLineStart + (kLineEnd - kLineStart) * static_cast<double>(j) / (npts - 1);
            const double theta = kind == LineKind::Helical ? theta0 + kHelixTwistPerUnit * TubeShape::kLength * s : theta0;
            const Vec3 n = TubeShape::axis_normal(s);
            const Vec3 off = (n * std::cos(theta) + Vec3{0, 0, 1} * std::sin(theta)) * (q * TubeShape::kBaseRadius);
            poly.push_back(TubeShape::axis_point(s) + off);
            const double slow = 1.0 - 0.3 * TubeShape::bulge(s);
            switch (kind) {
                case LineKind::Axial:
                    sp.push_back((0.2 + 1.2 * (1.0 - q * q)) * slow);
                    vo.push_back(0.1 * q);
                    break;
                case LineKind::Helical:
                    sp.push_back((0.6 + 0.3 * std::cos(theta)) * slow);
                    vo.push_back(1.0 + 0.2 * std::sin(theta));
                    break;
                case LineKind::Reverse:
                    sp.push_back(0.3 * (1.0 - q * q) * slow);
                    vo.push_back(0.4);
                    break;
            }
        }
        if (kind == LineKind::Reverse) {
            std::reverse(poly.begin(), poly.end());
            std::reverse(sp.begin(), sp.end());
            std::reverse(vo.begin(), vo.end());
        }
        lines.lines.push_back(std::move(poly));
        lines.seed_ids.push_back(static_cast<std::int64_t>(i));
        speed.values.insert(speed.values.end(), sp.begin(), sp.end());
        vorticity.values.insert(vorticity.values.end(), vo.begin(), vo.end());
        scene.line_kinds.push_back(kind);
    }
    lines.attribute_layers.push_back(std::move(speed));
    lines.attribute_layers.push_back(std::move(vorticity));
    return scene;
}

}  // namespace lens3de
