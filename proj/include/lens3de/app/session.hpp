#pragma once

#include <mutex>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "lens3de/interaction.hpp"
#include "lens3de/io/image.hpp"
#include "lens3de/io/scene.hpp"
#include "lens3de/selection.hpp"

namespace lens3de {

/// Request-level failure reported to the client as
/// {"error":{"code":..., "message":...}}.
class ProtocolError : public std::runtime_error {
public:
    ProtocolError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// event:{type, position?, normal?, delta?, tol_deg?}
/// Types: grab, move, ungrab, grab_disk, orient, ungrab_disk, clear_disk,
/// set_tolerance, grab_scale, scale, ungrab_scale.
InteractionEvent event_from_json(const nlohmann::json& ev);
nlohmann::json event_to_json(const InteractionEvent& ev);

nlohmann::json error_json(const std::string& code, const std::string& message);

/// The single interaction session behind the service. Event handling is
/// serialized; read-only queries work on snapshots.
class LensSession {
public:
    explicit LensSession(Scene scene, InteractionConfig config = {});

    const Scene& scene() const { return scene_; }
    InteractionState state() const;
    SelectionBuffer selection() const;

    /// Body is {"event":{...}} or the bare event object. Returns
    /// {"mode", "lens", "effects":[{"type", "selected_seed_ids"?}], "selected_seed_ids"}.
    /// Throws ProtocolError with the state untouched.
    nlohmann::json handle_event(const nlohmann::json& body);

    /// Mesh, streamline and attribute metadata plus geometry.
    const std::string& scene_payload() const { return scene_payload_; }
    nlohmann::json selection_json() const;
    nlohmann::json patch_json() const;
    FrameImage frame(double phase, int threads) const;

private:
    nlohmann::json status_json(const InteractionState& st, const SelectionBuffer& sel) const;

    Scene scene_;
    InteractionConfig config_;
    std::string scene_payload_;
    mutable std::mutex mu_;
    InteractionState state_;
    SelectionBuffer selection_;
};

}  // namespace lens3de
