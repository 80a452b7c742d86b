#include "lens3de/vec3.hpp"

#include <stdexcept>

namespace lens3de {

std::optional<UnitVec3> UnitVec3::try_normalize(const Vec3& v) {
    if (!v.is_finite()) return std::nullopt;
    const double len = v.length();
    if (!(len > 0.0) || !std::isfinite(len)) return std::nullopt;
    return UnitVec3(v / len);
}

UnitVec3 UnitVec3::normalize(const Vec3& v) {
    auto u = try_normalize(v);
    if (!u) throw std::invalid_argument("cannot normalize a zero-length or non-finite vector");
    return *u;
}

double angle_deg(const Vec3& a, const Vec3& b) {
    return rad_to_deg(std::atan2(cross(a, b).length(), dot(a, b)));
}

}  // namespace lens3de
