#include <algorithm>
#include <stdexcept>

#include "lens3de/selection.hpp"

namespace lens3de {

std::size_t SelectionBuffer::count() const {
    return static_cast<std::size_t>(std::count_if(flags.begin(), flags.end(), [](auto f) { return f != 0; }));
}

bool SelectionBuffer::subset_of(const SelectionBuffer& other) const {
    if (flags.size() != other.flags.size()) return false;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i] && !other.flags[i]) return false;
    return true;
}

bool polyline_intersects_ball(std::span<const Vec3> line, const Ball& ball) {
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
        if (segment_intersects_ball(line[i], line[i + 1], ball)) return true;
    return line.size() == 1 && point_in_ball(line[0], ball);
}

SelectionBuffer select_containment(const StreamlineSet& lines, const Ball& ball) {
    SelectionBuffer sel;
    sel.flags.resize(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        sel.flags[i] = polyline_intersects_ball(lines.lines[i], ball) ? 1 : 0;
    return sel;
}

std::optional<UnitVec3> mean_tangent(std::span<const Vec3> line, const Ball& ball) {
    Vec3 sum;
    bool any = false;
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        auto iv = segment_ball_interval(line[i], line[i + 1], ball);
        if (!iv || !(iv->second > iv->first)) continue;
        // length_inside * unit_direction == (t1 - t0) * (b - a)
        sum += (line[i + 1] - line[i]) * (iv->second - iv->first);
        any = true;
    }
    if (!any) return std::nullopt;
    return UnitVec3::try_normalize(sum);
}

SelectionBuffer select_angular(const StreamlineSet& lines, const SelectionBuffer& base, const Disk& disk,
                               double tol_deg) {
    if (!(tol_deg > 0.0 && tol_deg <= 90.0))
        throw std::invalid_argument("angular tolerance must be in (0, 90] degrees");
    if (base.size() != lines.size()) throw std::invalid_argument("selection buffer does not match line count");
    const Ball ball(disk.center, disk.radius);
    SelectionBuffer sel;
    sel.flags.assign(lines.size(), 0);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!base.flags[i]) continue;
        auto t = mean_tangent(lines.lines[i], ball);
        if (t && angle_deg(*t, disk.normal) <= tol_deg) sel.flags[i] = 1;
    }
    return sel;
}

SelectionBuffer select_with_lens(const StreamlineSet& lines, const Lens3De& lens) {
    SelectionBuffer sel = select_containment(lines, lens.ball());
    if (auto disk = disk_from_lens(lens)) sel = select_angular(lines, sel, *disk, lens.angular_tolerance_deg());
    return sel;
}

std::vector<std::int64_t> selected_seed_ids(const StreamlineSet& lines, const SelectionBuffer& sel) {
    std::vector<std::int64_t> ids;
    for (std::size_t i = 0; i < sel.size() && i < lines.seed_ids.size(); ++i)
        if (sel.flags[i]) ids.push_back(lines.seed_ids[i]);
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace lens3de
