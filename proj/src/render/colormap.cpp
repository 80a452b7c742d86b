#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lens3de/render/colormap.hpp"

namespace lens3de {

namespace {

using ControlPoints = std::array<std::array<int, 3>, 3>;

constexpr ControlPoints kCoolWarm{{{59, 76, 192}, {221, 221, 221}, {180, 4, 38}}};
constexpr ControlPoints kPurpleGreen{{{118, 42, 131}, {247, 247, 247}, {27, 120, 55}}};

Color blend(const std::array<int, 3>& a, const std::array<int, 3>& b, double t) {
    auto ch = [t](int x, int y) { return (x + (y - x) * t) / 255.0; };
    return {ch(a[0], b[0]), ch(a[1], b[1]), ch(a[2], b[2]), 1.0};
}

}  // namespace

ColormapName parse_colormap_name(const std::string& name) {
    if (name == "cool_warm") return ColormapName::CoolWarm;
    if (name == "purple_green") return ColormapName::PurpleGreen;
    throw std::invalid_argument("unknown colormap '" + name + "'");
}

std::string to_string(ColormapName name) {
    return name == ColormapName::CoolWarm ? "cool_warm" : "purple_green";
}

Colormap::Colormap(ColormapName name, double min, double max) : name_(name), min_(min), max_(max) {
    if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
        throw std::invalid_argument("colormap domain requires finite min < max");
}

const ControlPoints& Colormap::control_points() const {
    return name_ == ColormapName::CoolWarm ? kCoolWarm : kPurpleGreen;
}

Color colormap_lookup(const Colormap& cmap, double value) {
    const auto& cp = cmap.control_points();
    double t = (value - cmap.min()) / (cmap.max() - cmap.min());
    if (std::isnan(t)) t = 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (t < 0.5) return blend(cp[0], cp[1], t * 2.0);
    return blend(cp[1], cp[2], t * 2.0 - 1.0);
}

}  // namespace lens3de
