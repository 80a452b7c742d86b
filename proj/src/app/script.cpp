#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "lens3de/app/script.hpp"
#include "lens3de/io/errors.hpp"
#include "lens3de/io/scene.hpp"

namespace lens3de {

using nlohmann::json;

LensScript parse_lens_script(const json& doc) {
    if (!doc.is_object() || !doc.contains("keyframes") || !doc["keyframes"].is_array())
        throw IoError("lens script needs a 'keyframes' array");
    LensScript script;
    std::size_t i = 0;
    for (const auto& k : doc["keyframes"]) {
        const std::string where = "keyframe " + std::to_string(i++) + ": ";
        if (!k.is_object() || !k.contains("time") || !k.contains("center") || !k.contains("radius"))
            throw IoError(where + "needs 'time', 'center' and 'radius'");
        Keyframe kf;
        try {
            kf.time = k["time"].get<double>();
            kf.center = vec3_from_json(k["center"]);
            kf.radius = k["radius"].get<double>();
            if (k.contains("disk_normal") && !k["disk_normal"].is_null()) {
                kf.disk_normal = UnitVec3::try_normalize(vec3_from_json(k["disk_normal"]));
                if (!kf.disk_normal) throw IoError("disk_normal must be non-zero");
            }
            kf.tol_deg = k.value("tol_deg", kDefaultAngularToleranceDeg);
            kf.phase = k.value("phase", 0.0);
        } catch (const json::exception& e) {
            throw IoError(where + e.what());
        } catch (const IoError& e) {
            throw IoError(where + e.what());
        }
        if (!std::isfinite(kf.time)) throw IoError(where + "time must be finite");
        if (!std::isfinite(kf.phase)) throw IoError(where + "phase must be finite");
        if (!(kf.radius > 0.0) || !std::isfinite(kf.radius)) throw IoError(where + "radius must be positive");
        if (!(kf.tol_deg > 0.0 && kf.tol_deg <= 90.0)) throw IoError(where + "tol_deg must be in (0, 90]");
        if (!script.keyframes.empty() && !(kf.time > script.keyframes.back().time))
            throw IoError(where + "times must be strictly increasing");
        script.keyframes.push_back(kf);
    }
    if (script.keyframes.empty()) throw IoError("lens script has no keyframes");
    return script;
}

LensScript load_lens_script(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lens script '" + path.string() + "'");
    try {
        return parse_lens_script(json::parse(in));
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

std::size_t animation_frame_count(const LensScript& script, double fps) {
    if (!(fps > 0.0) || !std::isfinite(fps)) throw std::invalid_argument("fps must be positive");
    // The epsilon keeps 1.0 s * 10 fps from rounding down to 9 intervals.
    return static_cast<std::size_t>(std::floor(script.duration() * fps + 1e-9)) + 1;
}

Lens3De lens_at(const LensScript& script, double time) {
    const auto& ks = script.keyframes;
    auto make = [](const Keyframe& k) { return Lens3De(Ball(k.center, k.radius), k.disk_normal, k.tol_deg); };
    if (time <= ks.front().time) return make(ks.front());
    if (time >= ks.back().time) return make(ks.back());
    const auto next = std::upper_bound(ks.begin(), ks.end(), time,
                                       [](double t, const Keyframe& k) { return t < k.time; });
    const Keyframe& b = *next;
    const Keyframe& a = *(next - 1);
    const double u = (time - a.time) / (b.time - a.time);

    std::optional<UnitVec3> normal = a.disk_normal;
    if (a.disk_normal && b.disk_normal) {
        const Vec3 mixed = lerp(*a.disk_normal, *b.disk_normal, u);
        if (mixed.length() > 1e-9) normal = UnitVec3::normalize(mixed);
    }
    const double radius = a.radius + (b.radius - a.radius) * u;
    const double tol = std::clamp(a.tol_deg + (b.tol_deg - a.tol_deg) * u, std::min(a.tol_deg, b.tol_deg),
                                  std::max(a.tol_deg, b.tol_deg));
    return Lens3De(Ball(lerp(a.center, b.center, u), radius), normal, tol);
}

double phase_at(const LensScript& script, double time) {
    const auto& ks = script.keyframes;
    if (time <= ks.front().time) return ks.front().phase;
    if (time >= ks.back().time) return ks.back().phase;
    const auto next = std::upper_bound(ks.begin(), ks.end(), time,
                                       [](double t, const Keyframe& k) { return t < k.time; });
    const Keyframe& a = *(next - 1);
    const double u = (time - a.time) / (next->time - a.time);
    return a.phase + (next->phase - a.phase) * u;
}

}  // namespace lens3de
