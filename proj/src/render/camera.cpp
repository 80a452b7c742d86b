#include <cmath>
#include <stdexcept>

#include "lens3de/render/camera.hpp"

namespace lens3de {

namespace {

UnitVec3 checked_forward(const Vec3& position, const Vec3& look_at) {
    auto f = UnitVec3::try_normalize(look_at - position);
    if (!f) throw std::invalid_argument("camera position and look_at coincide");
    return *f;
}

}  // namespace

Camera::Camera(const Vec3& position, const Vec3& look_at, const Vec3& up, double vfov_deg,
               double near, double far, int width, int height)
    : position_(position),
      look_at_(look_at),
      up_hint_(UnitVec3::normalize(up)),
      vfov_deg_(vfov_deg),
      near_(near),
      far_(far),
      width_(width),
      height_(height),
      forward_(checked_forward(position, look_at)),
      right_(UnitVec3::unit_x()),
      up_(UnitVec3::unit_y()) {
    if (!(near > 0.0)) throw std::invalid_argument("camera near plane must be > 0");
    if (!(far > near)) throw std::invalid_argument("camera far plane must exceed near plane");
    if (!(vfov_deg > 0.0 && vfov_deg < 180.0))
        throw std::invalid_argument("camera vertical field of view must be in (0, 180) degrees");
    if (width <= 0 || height <= 0) throw std::invalid_argument("camera viewport must be non-empty");
    auto r = UnitVec3::try_normalize(cross(forward_, up_hint_));
    if (!r || cross(forward_, up_hint_).length() < 1e-9)
        throw std::invalid_argument("camera up vector is parallel to the view direction");
    right_ = *r;
    up_ = UnitVec3::normalize(cross(right_, forward_));
    tan_half_y_ = std::tan(deg_to_rad(vfov_deg) * 0.5);
    tan_half_x_ = tan_half_y_ * static_cast<double>(width) / static_cast<double>(height);
}

Camera Camera::with_viewport(int width, int height) const {
    return Camera(position_, look_at_, up_hint_, vfov_deg_, near_, far_, width, height);
}

ViewPoint Camera::to_view(const Vec3& p) const {
    const Vec3 d = p - position_;
    return {dot(d, right_), dot(d, up_), dot(d, forward_)};
}

ScreenPoint Camera::view_to_screen(const ViewPoint& v) const {
    const double ndc_x = v.x / (v.z * tan_half_x_);
    const double ndc_y = v.y / (v.z * tan_half_y_);
    return {(ndc_x + 1.0) * 0.5 * width_, (1.0 - ndc_y) * 0.5 * height_};
}

std::optional<ScreenPoint> Camera::project(const Vec3& p) const {
    const ViewPoint v = to_view(p);
    if (v.z < near_) return std::nullopt;
    return view_to_screen(v);
}

Ray Camera::pixel_ray(double sx, double sy) const {
    const double ndc_x = sx / width_ * 2.0 - 1.0;
    const double ndc_y = 1.0 - sy / height_ * 2.0;
    const Vec3 dir = forward_.vec() + right_.vec() * (ndc_x * tan_half_x_) + up_.vec() * (ndc_y * tan_half_y_);
    return {position_, UnitVec3::normalize(dir)};
}

double Camera::pixel_size_at_depth(double z) const { return 2.0 * z * tan_half_y_ / height_; }

}  // namespace lens3de
