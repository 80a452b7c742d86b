#pragma once

#include <optional>

#include "lens3de/vec3.hpp"

namespace lens3de {

/// Point in camera space: x right, y up, z forward distance from the eye.
struct ViewPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Continuous pixel coordinates; pixel (i, j) covers [i, i+1) x [j, j+1)
/// with row 0 at the top of the image.
struct ScreenPoint {
    double x = 0.0;
    double y = 0.0;
};

struct Ray {
    Vec3 origin;
    UnitVec3 direction;
};

/// Perspective pinhole camera with a fixed viewport.
class Camera {
public:
    /// Throws std::invalid_argument when near <= 0, far <= near, vfov is not
    /// in (0, 180), the viewport is empty, or up is parallel to the view axis.
    Camera(const Vec3& position, const Vec3& look_at, const Vec3& up, double vfov_deg, double near,
           double far, int width, int height);

    const Vec3& position() const { return position_; }
    const Vec3& look_at() const { return look_at_; }
    const UnitVec3& up_hint() const { return up_hint_; }
    double vfov_deg() const { return vfov_deg_; }
    double near() const { return near_; }
    double far() const { return far_; }
    int width() const { return width_; }
    int height() const { return height_; }

    const UnitVec3& forward() const { return forward_; }
    const UnitVec3& right() const { return right_; }
    const UnitVec3& up() const { return up_; }

    Camera with_viewport(int width, int height) const;

    ViewPoint to_view(const Vec3& p) const;
    /// Valid for z > 0 only.
    ScreenPoint view_to_screen(const ViewPoint& v) const;
    /// nullopt when p is closer than the near plane.
    std::optional<ScreenPoint> project(const Vec3& p) const;

    /// Ray through continuous pixel coordinates (use i + 0.5 for centers).
    Ray pixel_ray(double sx, double sy) const;

    /// World-space edge length of one pixel on a view-parallel plane at depth z.
    double pixel_size_at_depth(double z) const;

private:
    Vec3 position_;
    Vec3 look_at_;
    UnitVec3 up_hint_;
    double vfov_deg_;
    double near_;
    double far_;
    int width_;
    int height_;

    UnitVec3 forward_;
    UnitVec3 right_;
    UnitVec3 up_;
    double tan_half_y_;
    double tan_half_x_;
};

}  // namespace lens3de
