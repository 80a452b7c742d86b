#include <algorithm>
#include <cmath>

#include "lens3de/interaction.hpp"

namespace lens3de {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

StepResult unchanged(const InteractionState& s) { return {s, {InteractionEffect{}}}; }

StepResult with_selection(InteractionState s, EffectKind kind, const StreamlineSet& lines) {
    InteractionEffect effect{kind, select_with_lens(lines, s.lens)};
    return {std::move(s), {std::move(effect)}};
}

}  // namespace

StepResult step_interaction(const InteractionState& state, const InteractionEvent& ev, const StreamlineSet& lines,
                            const InteractionConfig& config) {
    using M = InteractionMode;
    const M mode = state.mode;

    return std::visit(
        overloaded{
            [&](const event::GrabLens&) -> StepResult {
                if (mode != M::Idle) return unchanged(state);
                return {{M::GrabbingLens, state.lens}, {InteractionEffect{}}};
            },
            [&](const event::MoveTo& e) -> StepResult {
                if (mode != M::GrabbingLens || !e.position.is_finite()) return unchanged(state);
                return {{mode, state.lens.with_center(e.position)}, {InteractionEffect{EffectKind::DecalPreview, {}}}};
            },
            [&](const event::Ungrab&) -> StepResult {
                if (mode != M::GrabbingLens) return unchanged(state);
                return with_selection({M::Idle, state.lens}, EffectKind::SelectionTriggered, lines);
            },
            [&](const event::GrabDisk&) -> StepResult {
                if (mode != M::Idle) return unchanged(state);
                return {{M::GrabbingDisk, state.lens}, {InteractionEffect{}}};
            },
            [&](const event::OrientTo& e) -> StepResult {
                if (mode != M::GrabbingDisk) return unchanged(state);
                return with_selection({mode, state.lens.with_disk_normal(e.normal)},
                                      EffectKind::AngularSelectionUpdated, lines);
            },
            [&](const event::ClearDisk&) -> StepResult {
                if (mode != M::GrabbingDisk) return unchanged(state);
                return with_selection({mode, state.lens.with_disk_normal(std::nullopt)},
                                      EffectKind::AngularSelectionUpdated, lines);
            },
            [&](const event::SetTolerance& e) -> StepResult {
                if (mode != M::Idle && mode != M::GrabbingDisk) return unchanged(state);
                if (!(e.degrees > 0.0 && e.degrees <= 90.0)) return unchanged(state);
                return with_selection({mode, state.lens.with_tolerance(e.degrees)},
                                      EffectKind::AngularSelectionUpdated, lines);
            },
            [&](const event::UngrabDisk&) -> StepResult {
                if (mode != M::GrabbingDisk) return unchanged(state);
                return {{M::Idle, state.lens}, {InteractionEffect{}}};
            },
            [&](const event::GrabScale&) -> StepResult {
                if (mode != M::Idle) return unchanged(state);
                return {{M::GrabbingScale, state.lens}, {InteractionEffect{}}};
            },
            [&](const event::ScaleDelta& e) -> StepResult {
                if (mode != M::GrabbingScale || !std::isfinite(e.delta)) return unchanged(state);
                const double r = std::clamp(state.lens.ball().radius() * std::exp(config.scale_gain * e.delta),
                                            config.min_radius, config.max_radius);
                return {{mode, state.lens.with_radius(r)}, {InteractionEffect{EffectKind::LensScaled, {}}}};
            },
            [&](const event::UngrabScale&) -> StepResult {
                if (mode != M::GrabbingScale) return unchanged(state);
                return {{M::Idle, state.lens}, {InteractionEffect{}}};
            },
        },
        ev);
}

std::string_view to_string(InteractionMode mode) {
    switch (mode) {
        case InteractionMode::Idle: return "idle";
        case InteractionMode::GrabbingLens: return "grabbing_lens";
        case InteractionMode::GrabbingDisk: return "grabbing_disk";
        case InteractionMode::GrabbingScale: return "grabbing_scale";
    }
    return "idle";
}

std::string_view to_string(EffectKind kind) {
    switch (kind) {
        case EffectKind::None: return "none";
        case EffectKind::DecalPreview: return "decal_preview";
        case EffectKind::SelectionTriggered: return "selection_triggered";
        case EffectKind::AngularSelectionUpdated: return "angular_selection_updated";
        case EffectKind::LensScaled: return "lens_scaled";
    }
    return "none";
}

std::string_view event_name(const InteractionEvent& ev) {
    return std::visit(overloaded{
                          [](const event::GrabLens&) { return std::string_view("grab"); },
                          [](const event::MoveTo&) { return std::string_view("move"); },
                          [](const event::Ungrab&) { return std::string_view("ungrab"); },
                          [](const event::GrabDisk&) { return std::string_view("grab_disk"); },
                          [](const event::OrientTo&) { return std::string_view("orient"); },
                          [](const event::UngrabDisk&) { return std::string_view("ungrab_disk"); },
                          [](const event::ClearDisk&) { return std::string_view("clear_disk"); },
                          [](const event::SetTolerance&) { return std::string_view("set_tolerance"); },
                          [](const event::GrabScale&) { return std::string_view("grab_scale"); },
                          [](const event::ScaleDelta&) { return std::string_view("scale"); },
                          [](const event::UngrabScale&) { return std::string_view("ungrab_scale"); },
                      },
                      ev);
}

}  // namespace lens3de
