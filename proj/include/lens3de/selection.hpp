#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lens3de/geometry.hpp"
#include "lens3de/mesh.hpp"

namespace lens3de {

/// Whole-line selection flags, one per streamline in set order (position i
/// holds the flag of the line whose seed id is seed_ids[i]).
struct SelectionBuffer {
    std::vector<std::uint8_t> flags;

    std::size_t size() const { return flags.size(); }
    bool operator[](std::size_t i) const { return flags[i] != 0; }
    std::size_t count() const;
    /// True when every flag set here is also set in `other`.
    bool subset_of(const SelectionBuffer& other) const;

    bool operator==(const SelectionBuffer&) const = default;
};

/// flag[i] = some segment of line i touches the ball.
SelectionBuffer select_containment(const StreamlineSet& lines, const Ball& ball);
bool polyline_intersects_ball(std::span<const Vec3> line, const Ball& ball);

/// Normalized sum of in-ball segment directions weighted by in-ball arc
/// length; nullopt when no positive-length portion is inside (or the
/// portions cancel).
std::optional<UnitVec3> mean_tangent(std::span<const Vec3> line, const Ball& ball);

/// flag[i] = base[i] and angle(mean_tangent(line i), disk.normal) <= tol_deg.
/// Signed: lines running against the normal are rejected.
/// Throws std::invalid_argument unless tol_deg is in (0, 90] and base matches.
SelectionBuffer select_angular(const StreamlineSet& lines, const SelectionBuffer& base, const Disk& disk,
                               double tol_deg);

/// Containment, then the angular filter when the lens has a disk normal.
SelectionBuffer select_with_lens(const StreamlineSet& lines, const Lens3De& lens);

/// Seed ids of the flagged lines, ascending.
std::vector<std::int64_t> selected_seed_ids(const StreamlineSet& lines, const SelectionBuffer& sel);

}  // namespace lens3de
