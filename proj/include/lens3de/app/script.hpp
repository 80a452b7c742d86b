#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "lens3de/geometry.hpp"

namespace lens3de {

struct Keyframe {
    double time = 0.0;
    Vec3 center;
    double radius = 1.0;
    std::optional<UnitVec3> disk_normal;
    double tol_deg = kDefaultAngularToleranceDeg;
    double phase = 0.0;  // arrow glyph phase
};

/// {"keyframes":[{"time":s,"center":[x,y,z],"radius":r,"disk_normal":[..]|null,"tol_deg":deg,"phase":p}, ...]}
/// disk_normal, tol_deg and phase are optional.
/// Times strictly increasing, radii positive.
struct LensScript {
    std::vector<Keyframe> keyframes;

    double duration() const { return keyframes.back().time - keyframes.front().time; }
};

/// Throws IoError on schema or invariant violations.
LensScript parse_lens_script(const nlohmann::json& doc);
LensScript load_lens_script(const std::filesystem::path& path);

/// Frames at t0, t0 + 1/fps, ... up to and including the last keyframe.
/// Throws std::invalid_argument unless fps > 0.
std::size_t animation_frame_count(const LensScript& script, double fps);

/// Linear interpolation of center, radius and tolerance; the normal is
/// lerped and renormalized. When only one side has a normal, or the lerp
/// collapses to zero, the earlier keyframe's normal is kept.
Lens3De lens_at(const LensScript& script, double time);

/// Arrow phase, linearly interpolated; clamped to the end keyframes.
double phase_at(const LensScript& script, double time);

}  // namespace lens3de
