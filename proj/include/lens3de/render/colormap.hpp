#pragma once

#include <array>
#include <string>

namespace lens3de {

/// Straight (non-premultiplied) RGBA, components in [0, 1].
struct Color {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
    double a = 0.0;

    bool operator==(const Color&) const = default;
};

enum class ColormapName { CoolWarm, PurpleGreen };

/// Throws std::invalid_argument for unknown names. Accepts "cool_warm" and
/// "purple_green".
ColormapName parse_colormap_name(const std::string& name);
std::string to_string(ColormapName name);

/// Diverging three-point colormap over [min, max]. Control points are 8-bit
/// sRGB triples, interpolated linearly in RGB:
///   cool_warm:    (59,76,192)  -> (221,221,221) -> (180,4,38)
///   purple_green: (118,42,131) -> (247,247,247) -> (27,120,55)
class Colormap {
public:
    /// Throws std::invalid_argument unless min < max (both finite).
    Colormap(ColormapName name, double min, double max);

    ColormapName name() const { return name_; }
    double min() const { return min_; }
    double max() const { return max_; }

    /// Control colors (low, mid, high) as 8-bit triples.
    const std::array<std::array<int, 3>, 3>& control_points() const;

private:
    ColormapName name_;
    double min_;
    double max_;
};

/// Clamped piecewise-linear lookup; alpha is always 1. NaN maps to the low end.
Color colormap_lookup(const Colormap& cmap, double value);

}  // namespace lens3de
