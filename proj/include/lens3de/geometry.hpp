#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lens3de/mesh.hpp"
#include "lens3de/vec3.hpp"

namespace lens3de {

class Ball {
public:
    /// Throws std::invalid_argument unless radius > 0 and all values finite.
    Ball(const Vec3& center, double radius);

    const Vec3& center() const { return center_; }
    double radius() const { return radius_; }

    bool operator==(const Ball&) const = default;

private:
    Vec3 center_;
    double radius_;
};

/// Shares center and radius with the ball that owns it.
struct Disk {
    Vec3 center;
    double radius;
    UnitVec3 normal;
};

inline constexpr double kDefaultAngularToleranceDeg = 15.0;

/// The single manipulable lens: a ball region with an optional orienting disk.
class Lens3De {
public:
    /// Throws std::invalid_argument unless tolerance is in (0, 90].
    explicit Lens3De(Ball ball, std::optional<UnitVec3> disk_normal = std::nullopt,
                     double angular_tolerance_deg = kDefaultAngularToleranceDeg);

    const Ball& ball() const { return ball_; }
    const std::optional<UnitVec3>& disk_normal() const { return disk_normal_; }
    double angular_tolerance_deg() const { return tolerance_deg_; }

    Lens3De with_center(const Vec3& c) const;
    Lens3De with_radius(double r) const;
    Lens3De with_disk_normal(std::optional<UnitVec3> n) const;
    Lens3De with_tolerance(double deg) const;

    bool operator==(const Lens3De&) const = default;

private:
    Ball ball_;
    std::optional<UnitVec3> disk_normal_;
    double tolerance_deg_;
};

struct PatchSelection {
    std::vector<std::uint32_t> full_triangle_ids;     // ascending
    std::vector<std::uint32_t> partial_triangle_ids;  // ascending
    std::vector<std::uint8_t> vertex_mask;

    bool empty() const { return full_triangle_ids.empty() && partial_triangle_ids.empty(); }
};

/// Inclusive: |p - c| <= r.
bool point_in_ball(const Vec3& p, const Ball& b);

/// True iff some point of the closed segment [a, b] lies within the ball.
/// Symmetric in (a, b) bit-for-bit.
bool segment_intersects_ball(const Vec3& a, const Vec3& b, const Ball& ball);

/// Parameter interval [t0, t1] within [0, 1] of the segment a + t (b - a)
/// that lies inside the ball, or nullopt if the segment misses it.
std::optional<std::pair<double, double>> segment_ball_interval(const Vec3& a, const Vec3& b,
                                                               const Ball& ball);

/// Per-vertex classification of triangles against the ball. A triangle is
/// full when all three vertices are inside, partial when one or two are.
PatchSelection ball_surface_patch(const SurfaceMesh& mesh, const Ball& ball);

/// Area of the patch: full triangles exactly, partial triangles by midpoint
/// quadrature on a regular subdivision with `subdivisions`^2 sub-triangles.
double patch_area(const SurfaceMesh& mesh, const Ball& ball, const PatchSelection& patch,
                  int subdivisions = 32);

/// sqrt(r^2 - d^2) for d < r, else 0. Throws std::invalid_argument on negative input.
double spherical_cap_radius(double r, double d);

std::optional<Disk> disk_from_lens(const Lens3De& lens);

}  // namespace lens3de
