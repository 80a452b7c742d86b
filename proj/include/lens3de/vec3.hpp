#pragma once

#include <cmath>
#include <optional>

namespace lens3de {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    constexpr bool operator==(const Vec3&) const = default;

    double length() const { return std::sqrt(x * x + y * y + z * z); }
    constexpr double length_squared() const { return x * x + y * y + z * z; }
    bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).length(); }

constexpr Vec3 lerp(const Vec3& a, const Vec3& b, double t) { return a + (b - a) * t; }

/// A direction of length one (within 1e-9). Only constructible through
/// normalization, so every instance upholds the invariant.
class UnitVec3 {
public:
    /// Returns nullopt for zero-length or non-finite input.
    static std::optional<UnitVec3> try_normalize(const Vec3& v);
    /// Throws std::invalid_argument for zero-length or non-finite input.
    static UnitVec3 normalize(const Vec3& v);

    static constexpr UnitVec3 unit_x() { return UnitVec3(Vec3{1, 0, 0}); }
    static constexpr UnitVec3 unit_y() { return UnitVec3(Vec3{0, 1, 0}); }
    static constexpr UnitVec3 unit_z() { return UnitVec3(Vec3{0, 0, 1}); }

    constexpr double x() const { return v_.x; }
    constexpr double y() const { return v_.y; }
    constexpr double z() const { return v_.z; }
    constexpr const Vec3& vec() const { return v_; }
    constexpr operator const Vec3&() const { return v_; }

    constexpr UnitVec3 operator-() const { return UnitVec3(-v_); }
    constexpr bool operator==(const UnitVec3&) const = default;

private:
    constexpr explicit UnitVec3(const Vec3& v) : v_(v) {}
    Vec3 v_;
};

/// Angle between two directions in degrees, computed as atan2(|a x b|, a.b).
double angle_deg(const Vec3& a, const Vec3& b);

constexpr double kPi = 3.14159265358979323846;
constexpr double deg_to_rad(double d) { return d * kPi / 180.0; }
constexpr double rad_to_deg(double r) { return r * 180.0 / kPi; }

}  // namespace lens3de
