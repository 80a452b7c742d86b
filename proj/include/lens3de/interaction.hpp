#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "lens3de/geometry.hpp"
#include "lens3de/selection.hpp"

namespace lens3de {

enum class InteractionMode { Idle, GrabbingLens, GrabbingDisk, GrabbingScale };

struct InteractionState {
    InteractionMode mode = InteractionMode::Idle;
    Lens3De lens;

    bool operator==(const InteractionState&) const = default;
};

namespace event {
struct GrabLens {};
struct MoveTo {
    Vec3 position;
};
struct Ungrab {};
struct GrabDisk {};
struct OrientTo {
    UnitVec3 normal;
};
struct UngrabDisk {};
/// Removes the disk normal while the disk is grabbed.
struct ClearDisk {};
/// Tolerance slider; accepted while Idle or GrabbingDisk.
struct SetTolerance {
    double degrees;
};
struct GrabScale {};
struct ScaleDelta {
    double delta;
};
struct UngrabScale {};
}  // namespace event

using InteractionEvent =
    std::variant<event::GrabLens, event::MoveTo, event::Ungrab, event::GrabDisk, event::OrientTo, event::UngrabDisk,
                 event::ClearDisk, event::SetTolerance, event::GrabScale, event::ScaleDelta, event::UngrabScale>;

enum class EffectKind { None, DecalPreview, SelectionTriggered, AngularSelectionUpdated, LensScaled };

struct InteractionEffect {
    EffectKind kind = EffectKind::None;
    /// Set for SelectionTriggered and AngularSelectionUpdated.
    std::optional<SelectionBuffer> selection;
};

struct InteractionConfig {
    double scale_gain = 1.0;  // radius *= exp(scale_gain * delta)
    double min_radius = 0.01;
    double max_radius = 100.0;
};

struct StepResult {
    InteractionState state;
    std::vector<InteractionEffect> effects;
};

/// Deterministic transition table:
///   Idle          + GrabLens     -> GrabbingLens   [None]
///   Idle          + GrabDisk     -> GrabbingDisk   [None]
///   Idle          + GrabScale    -> GrabbingScale  [None]
///   Idle          + SetTolerance -> Idle           [AngularSelectionUpdated]
///   GrabbingLens  + MoveTo       -> GrabbingLens   [DecalPreview]   (center = position)
///   GrabbingLens  + Ungrab       -> Idle           [SelectionTriggered]
///   GrabbingDisk  + OrientTo     -> GrabbingDisk   [AngularSelectionUpdated]
///   GrabbingDisk  + ClearDisk    -> GrabbingDisk   [AngularSelectionUpdated]
///   GrabbingDisk  + SetTolerance -> GrabbingDisk   [AngularSelectionUpdated]
///   GrabbingDisk  + UngrabDisk   -> Idle           [None]
///   GrabbingScale + ScaleDelta   -> GrabbingScale  [LensScaled]     (clamped exponential)
///   GrabbingScale + UngrabScale  -> Idle           [None]
/// Any other pair, or a non-finite/out-of-range payload, leaves the state
/// unchanged and yields [None].
StepResult step_interaction(const InteractionState& state, const InteractionEvent& ev, const StreamlineSet& lines,
                            const InteractionConfig& config = {});

std::string_view to_string(InteractionMode mode);
std::string_view to_string(EffectKind kind);
std::string_view event_name(const InteractionEvent& ev);

}  // namespace lens3de
