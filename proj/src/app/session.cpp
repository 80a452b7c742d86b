#include <cmath>

#include "lens3de/app/commands.hpp"
#include "lens3de/app/session.hpp"
#include "lens3de/render/frame.hpp"

namespace lens3de {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

const json& require(const json& ev, const char* field) {
    if (!ev.contains(field)) throw ProtocolError("missing_field", std::string("event needs '") + field + "'");
    return ev[field];
}

Vec3 require_vec3(const json& ev, const char* field) {
    const json& v = require(ev, field);
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number())
        throw ProtocolError("invalid_value", std::string("'") + field + "' must be [x,y,z]");
    const Vec3 p{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    if (!p.is_finite()) throw ProtocolError("invalid_value", std::string("'") + field + "' must be finite");
    return p;
}

double require_number(const json& ev, const char* field) {
    const json& v = require(ev, field);
    if (!v.is_number() || !std::isfinite(v.get<double>()))
        throw ProtocolError("invalid_value", std::string("'") + field + "' must be a finite number");
    return v.get<double>();
}

json flat(const std::vector<Vec3>& pts) {
    json a = json::array();
    for (const auto& p : pts) {
        a.push_back(p.x);
        a.push_back(p.y);
        a.push_back(p.z);
    }
    return a;
}

json layers_json(const std::vector<AttributeLayer>& layers) {
    json o = json::object();
    for (const auto& l : layers) o[l.name] = l.values;
    return o;
}

json colormap_json(const Colormap& cm) {
    return {{"name", to_string(cm.name())}, {"domain", {cm.min(), cm.max()}}};
}

std::string build_scene_payload(const Scene& scene, const Lens3De& lens) {
    const auto& mesh = scene.mesh;
    json normals = json::array();
    for (const auto& n : mesh.normals) {
        normals.push_back(n.x());
        normals.push_back(n.y());
        normals.push_back(n.z());
    }
    json tris = json::array();
    for (const auto& t : mesh.triangles)
        for (auto i : t) tris.push_back(i);

    json points = json::array();
    for (const auto& l : scene.lines.lines)
        for (const auto& p : l) {
            points.push_back(p.x);
            points.push_back(p.y);
            points.push_back(p.z);
        }

    const auto& cam = scene.config.camera;
    json j;
    j["counts"] = {{"vertices", mesh.vertices.size()},
                   {"triangles", mesh.triangles.size()},
                   {"lines", scene.lines.size()},
                   {"points", scene.lines.total_points()}};
    j["mesh"] = {{"vertices", flat(mesh.vertices)},
                 {"normals", normals},
                 {"triangles", tris},
                 {"attributes", layers_json(mesh.attribute_layers)}};
    j["streamlines"] = {{"seed_ids", scene.lines.seed_ids},
                        {"offsets", scene.lines.point_offsets()},
                        {"points", points},
                        {"attributes", layers_json(scene.lines.attribute_layers)}};
    j["focus"] = {{"surface", scene.config.surface_focus_attribute}, {"flow", scene.config.flow_focus_attribute}};
    j["colormaps"] = {{"surface", colormap_json(scene.surface_colormap())},
                      {"flow", colormap_json(scene.flow_colormap())}};
    j["camera"] = {{"position", vec3_to_json(cam.position)},
                   {"look_at", vec3_to_json(cam.look_at)},
                   {"up", vec3_to_json(cam.up)},
                   {"vfov_deg", cam.vfov_deg},
                   {"near", cam.near},
                   {"far", cam.far},
                   {"resolution", {cam.width, cam.height}}};
    j["lens"] = lens_to_json(lens);
    return j.dump() + "\n";
}

}  // namespace

json error_json(const std::string& code, const std::string& message) {
    return {{"error", {{"code", code}, {"message", message}}}};
}

InteractionEvent event_from_json(const json& ev) {
    if (!ev.is_object()) throw ProtocolError("invalid_value", "event must be an object");
    const json& type = require(ev, "type");
    if (!type.is_string()) throw ProtocolError("invalid_value", "'type' must be a string");
    const std::string t = type.get<std::string>();
    if (t == "grab") return event::GrabLens{};
    if (t == "move") return event::MoveTo{require_vec3(ev, "position")};
    if (t == "ungrab") return event::Ungrab{};
    if (t == "grab_disk") return event::GrabDisk{};
    if (t == "orient") {
        auto n = UnitVec3::try_normalize(require_vec3(ev, "normal"));
        if (!n) throw ProtocolError("invalid_value", "'normal' must be non-zero");
        return event::OrientTo{*n};
    }
    if (t == "ungrab_disk") return event::UngrabDisk{};
    if (t == "clear_disk") return event::ClearDisk{};
    if (t == "set_tolerance") return event::SetTolerance{require_number(ev, "tol_deg")};
    if (t == "grab_scale") return event::GrabScale{};
    if (t == "scale") return event::ScaleDelta{require_number(ev, "delta")};
    if (t == "ungrab_scale") return event::UngrabScale{};
    throw ProtocolError("unknown_event_type", "unknown event type '" + t + "'");
}

json event_to_json(const InteractionEvent& ev) {
    json j;
    j["type"] = std::string(event_name(ev));
    std::visit(overloaded{
                   [&](const event::MoveTo& e) { j["position"] = vec3_to_json(e.position); },
                   [&](const event::OrientTo& e) { j["normal"] = vec3_to_json(e.normal); },
                   [&](const event::SetTolerance& e) { j["tol_deg"] = e.degrees; },
                   [&](const event::ScaleDelta& e) { j["delta"] = e.delta; },
                   [](const auto&) {},
               },
               ev);
    return j;
}

LensSession::LensSession(Scene scene, InteractionConfig config)
    : scene_(std::move(scene)), config_(config), state_{InteractionMode::Idle, initial_lens(scene_)} {
    selection_ = select_with_lens(scene_.lines, state_.lens);
    scene_payload_ = build_scene_payload(scene_, state_.lens);
}

InteractionState LensSession::state() const {
    std::lock_guard lock(mu_);
    return state_;
}

SelectionBuffer LensSession::selection() const {
    std::lock_guard lock(mu_);
    return selection_;
}

json LensSession::status_json(const InteractionState& st, const SelectionBuffer& sel) const {
    json j;
    j["mode"] = std::string(to_string(st.mode));
    j["lens"] = lens_to_json(st.lens);
    j["selected_seed_ids"] = selected_seed_ids(scene_.lines, sel);
    return j;
}

json LensSession::handle_event(const json& body) {
    if (!body.is_object()) throw ProtocolError("invalid_value", "request body must be a JSON object");
    const InteractionEvent ev = event_from_json(body.contains("event") ? body["event"] : body);

    std::lock_guard lock(mu_);
    const StepResult r = step_interaction(state_, ev, scene_.lines, config_);
    state_ = r.state;
    json effects = json::array();
    for (const auto& e : r.effects) {
        json je;
        je["type"] = std::string(to_string(e.kind));
        if (e.selection) {
            selection_ = *e.selection;
            je["selected_seed_ids"] = selected_seed_ids(scene_.lines, *e.selection);
        }
        effects.push_back(std::move(je));
    }
    json j = status_json(state_, selection_);
    j["event"] = std::string(event_name(ev));
    j["effects"] = std::move(effects);
    return j;
}

json LensSession::selection_json() const {
    const auto [st, sel] = [&] {
        std::lock_guard lock(mu_);
        return std::pair{state_, selection_};
    }();
    return status_json(st, sel);
}

json LensSession::patch_json() const {
    const Lens3De lens = state().lens;
    const PatchSelection patch = ball_surface_patch(scene_.mesh, lens.ball());
    json j;
    j["patch_full"] = patch.full_triangle_ids;
    j["patch_partial"] = patch.partial_triangle_ids;
    j["lens"] = lens_to_json(lens);
    return j;
}

FrameImage LensSession::frame(double phase, int threads) const {
    const auto [st, sel] = [&] {
        std::lock_guard lock(mu_);
        return std::pair{state_, selection_};
    }();
    return render_frame(scene_, st.lens, scene_.camera(), sel, phase, {threads}).image;
}

}  // namespace lens3de
