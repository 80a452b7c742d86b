#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lens3de/geometry.hpp"

namespace lens3de {

Ball::Ball(const Vec3& center, double radius) : center_(center), radius_(radius) {
    if (!center.is_finite()) throw std::invalid_argument("ball center must be finite");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("ball radius must be finite and > 0, got " + std::to_string(radius));
}

Lens3De::Lens3De(Ball ball, std::optional<UnitVec3> disk_normal, double angular_tolerance_deg)
    : ball_(ball), disk_normal_(disk_normal), tolerance_deg_(angular_tolerance_deg) {
    if (!(angular_tolerance_deg > 0.0 && angular_tolerance_deg <= 90.0))
        throw std::invalid_argument("angular tolerance must be in (0, 90] degrees, got " +
                                    std::to_string(angular_tolerance_deg));
}

Lens3De Lens3De::with_center(const Vec3& c) const {
    return Lens3De(Ball(c, ball_.radius()), disk_normal_, tolerance_deg_);
}

Lens3De Lens3De::with_radius(double r) const {
    return Lens3De(Ball(ball_.center(), r), disk_normal_, tolerance_deg_);
}

Lens3De Lens3De::with_disk_normal(std::optional<UnitVec3> n) const {
    return Lens3De(ball_, n, tolerance_deg_);
}

Lens3De Lens3De::with_tolerance(double deg) const { return Lens3De(ball_, disk_normal_, deg); }

bool point_in_ball(const Vec3& p, const Ball& b) {
    return (p - b.center()).length_squared() <= b.radius() * b.radius();
}

namespace {

bool lex_less(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

}  // namespace

bool segment_intersects_ball(const Vec3& a_in, const Vec3& b_in, const Ball& ball) {
    // Evaluate in a canonical endpoint order so that swapping a and b cannot
    // change the rounding.
    const bool swap = lex_less(b_in, a_in);
    const Vec3& a = swap ? b_in : a_in;
    const Vec3& b = swap ? a_in : b_in;

    const Vec3 d = b - a;
    const double len2 = d.length_squared();
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(dot(ball.center() - a, d) / len2, 0.0, 1.0);
    const Vec3 closest = a + d * t;
    return point_in_ball(closest, ball);
}

std::optional<std::pair<double, double>> segment_ball_interval(const Vec3& a, const Vec3& b,
                                                               const Ball& ball) {
    const Vec3 d = b - a;
    const Vec3 m = a - ball.center();
    const double qa = d.length_squared();
    const double qc = m.length_squared() - ball.radius() * ball.radius();
    if (qa == 0.0) {
        if (qc <= 0.0) return std::pair{0.0, 0.0};
        return std::nullopt;
    }
    const double qb = 2.0 * dot(d, m);
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return std::nullopt;
    const double sq = std::sqrt(disc);
    double t0 = (-qb - sq) / (2.0 * qa);
    double t1 = (-qb + sq) / (2.0 * qa);
    if (t0 > 1.0 || t1 < 0.0) return std::nullopt;
    t0 = std::max(t0, 0.0);
    t1 = std::min(t1, 1.0);
    return std::pair{t0, t1};
}

double spherical_cap_radius(double r, double d) {
    if (r < 0.0 || d < 0.0) throw std::invalid_argument("spherical_cap_radius: negative input");
    if (d >= r) return 0.0;
    return std::sqrt(r * r - d * d);
}

std::optional<Disk> disk_from_lens(const Lens3De& lens) {
    if (!lens.disk_normal()) return std::nullopt;
    return Disk{lens.ball().center(), lens.ball().radius(), *lens.disk_normal()};
}

}  // namespace lens3de
