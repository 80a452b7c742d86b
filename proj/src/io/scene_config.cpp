#include <algorithm>
#include <fstream>

#include "lens3de/io/mesh_io.hpp"
#include "lens3de/io/scene.hpp"
#include "lens3de/io/streamline_io.hpp"

namespace lens3de {

using nlohmann::json;

Vec3 vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
        throw IoError("expected [x,y,z], got " + j.dump());
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json lens_to_json(const Lens3De& lens) {
    json j;
    j["center"] = vec3_to_json(lens.ball().center());
    j["radius"] = lens.ball().radius();
    j["disk_normal"] = lens.disk_normal() ? vec3_to_json(*lens.disk_normal()) : json(nullptr);
    j["tol_deg"] = lens.angular_tolerance_deg();
    return j;
}

Lens3De lens_from_json(const json& j) {
    if (!j.is_object() || !j.contains("center") || !j.contains("radius"))
        throw IoError("lens requires 'center' and 'radius'");
    try {
        std::optional<UnitVec3> normal;
        if (j.contains("disk_normal") && !j["disk_normal"].is_null())
            normal = UnitVec3::normalize(vec3_from_json(j["disk_normal"]));
        const double tol = j.value("tol_deg", kDefaultAngularToleranceDeg);
        if (!j["radius"].is_number()) throw IoError("lens radius must be a number");
        return Lens3De(Ball(vec3_from_json(j["center"]), j["radius"].get<double>()), normal, tol);
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("invalid lens: ") + e.what());
    }
}

Camera CameraSettings::make() const {
    return Camera(position, look_at, up, vfov_deg, near, far, width, height);
}

namespace {

ColormapBinding binding_from_json(const json& j, ColormapBinding fallback) {
    if (j.contains("name")) fallback.name = parse_colormap_name(j["name"].get<std::string>());
    if (j.contains("domain") && !j["domain"].is_null()) {
        const auto& d = j["domain"];
        if (!d.is_array() || d.size() != 2) throw IoError("colormap domain must be [min,max]");
        const double lo = d[0].get<double>();
        const double hi = d[1].get<double>();
        if (!(lo < hi)) throw IoError("colormap domain requires min < max");
        fallback.domain = std::pair{lo, hi};
    }
    return fallback;
}

Color color_from_json(const json& j) {
    if (!j.is_array() || (j.size() != 3 && j.size() != 4)) throw IoError("color must be [r,g,b] or [r,g,b,a]");
    Color c{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j.size() == 4 ? j[3].get<double>() : 1.0};
    return c;
}

Colormap make_colormap(const ColormapBinding& binding, const std::vector<double>& values) {
    if (binding.domain) return Colormap(binding.name, binding.domain->first, binding.domain->second);
    if (values.empty()) return Colormap(binding.name, 0.0, 1.0);
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (!(*lo < *hi)) return Colormap(binding.name, *lo - 0.5, *lo + 0.5);
    return Colormap(binding.name, *lo, *hi);
}

}  // namespace

SceneConfig parse_scene_config(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) throw IoError("scene config must be a JSON object");
    SceneConfig cfg;
    try {
        if (doc.contains("synthetic")) {
            const auto& s = doc["synthetic"];
            SyntheticSpec spec;
            spec.triangles = s.value("triangles", spec.triangles);
            spec.lines = s.value("lines", spec.lines);
            spec.seed = s.value("seed", spec.seed);
            spec.points_per_line = s.value("points_per_line", spec.points_per_line);
            cfg = synthetic_scene_config(spec);
        } else {
            if (!doc.contains("mesh") || !doc.contains("streamlines"))
                throw IoError("scene config needs 'mesh' and 'streamlines' (or 'synthetic')");
            cfg.mesh_path = base_dir / doc["mesh"].get<std::string>();
            cfg.streamline_path = base_dir / doc["streamlines"].get<std::string>();
        }
        if (doc.contains("surface_focus_attribute"))
            cfg.surface_focus_attribute = doc["surface_focus_attribute"].get<std::string>();
        if (doc.contains("flow_focus_attribute"))
            cfg.flow_focus_attribute = doc["flow_focus_attribute"].get<std::string>();
        if (doc.contains("colormaps")) {
            const auto& cm = doc["colormaps"];
            if (cm.contains("surface")) cfg.surface_colormap = binding_from_json(cm["surface"], cfg.surface_colormap);
            if (cm.contains("flow")) cfg.flow_colormap = binding_from_json(cm["flow"], cfg.flow_colormap);
        }
        if (doc.contains("camera")) {
            const auto& c = doc["camera"];
            auto& cam = cfg.camera;
            if (c.contains("position")) cam.position = vec3_from_json(c["position"]);
            if (c.contains("look_at")) cam.look_at = vec3_from_json(c["look_at"]);
            if (c.contains("up")) cam.up = vec3_from_json(c["up"]);
            cam.vfov_deg = c.value("vfov_deg", cam.vfov_deg);
            cam.near = c.value("near", cam.near);
            cam.far = c.value("far", cam.far);
            if (c.contains("resolution")) {
                cam.width = c["resolution"].at(0).get<int>();
                cam.height = c["resolution"].at(1).get<int>();
            }
            if (!(cam.vfov_deg > 0.0 && cam.vfov_deg < 180.0))
                throw IoError("camera vfov_deg must be in (0, 180)");
            cam.make();  // validates the remaining camera invariants
        }
        if (doc.contains("background")) cfg.background = color_from_json(doc["background"]);
        if (doc.contains("lens") && !doc["lens"].is_null()) cfg.initial_lens = lens_from_json(doc["lens"]);
        if (doc.contains("style")) {
            const auto& s = doc["style"];
            auto& st = cfg.style;
            st.context_fresnel_r = s.value("fresnel_r", st.context_fresnel_r);
            st.lens_fresnel_r = s.value("lens_fresnel_r", st.lens_fresnel_r);
            st.line_thickness = s.value("line_thickness", st.line_thickness);
            st.silhouette_extrusion = s.value("silhouette_extrusion", st.silhouette_extrusion);
            st.unselected_alpha = s.value("unselected_alpha", st.unselected_alpha);
            st.show_disk = s.value("show_disk", st.show_disk);
            st.show_center_ball = s.value("show_center_ball", st.show_center_ball);
        }
    } catch (const json::exception& e) {
        throw IoError(std::string("scene config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("scene config: ") + e.what());
    }
    return cfg;
}

SceneConfig load_scene_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scene config '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
    return parse_scene_config(doc, path.parent_path());
}

Scene make_scene(SurfaceMesh mesh, StreamlineSet lines, SceneConfig config) {
    try {
        mesh.validate();
        lines.validate();
    } catch (const std::invalid_argument& e) {
        throw IoError(e.what());
    }
    if (!config.surface_focus_attribute.empty() && !mesh.find_layer(config.surface_focus_attribute))
        throw IoError("surface focus attribute '" + config.surface_focus_attribute + "' not found in mesh");
    if (!config.flow_focus_attribute.empty() && !lines.find_layer(config.flow_focus_attribute))
        throw IoError("flow focus attribute '" + config.flow_focus_attribute + "' not found in streamlines");
    return Scene{std::move(mesh), std::move(lines), std::move(config)};
}

Scene load_scene(const std::filesystem::path& config_path) {
    SceneConfig cfg = load_scene_config(config_path);
    if (cfg.synthetic) {
        auto syn = generate_synthetic_scene(*cfg.synthetic);
        return make_scene(std::move(syn.mesh), std::move(syn.lines), std::move(cfg));
    }
    SurfaceMesh mesh = load_mesh(cfg.mesh_path);
    StreamlineSet lines = load_streamlines(cfg.streamline_path);
    return make_scene(std::move(mesh), std::move(lines), std::move(cfg));
}

Colormap Scene::surface_colormap() const {
    const auto* layer = mesh.find_layer(config.surface_focus_attribute);
    static const std::vector<double> none;
    return make_colormap(config.surface_colormap, layer ? layer->values : none);
}

Colormap Scene::flow_colormap() const {
    const auto* layer = lines.find_layer(config.flow_focus_attribute);
    static const std::vector<double> none;
    return make_colormap(config.flow_colormap, layer ? layer->values : none);
}

SceneConfig synthetic_scene_config(const SyntheticSpec& spec) {
    SceneConfig cfg;
    cfg.synthetic = spec;
    cfg.surface_focus_attribute = "curvature";
    cfg.flow_focus_attribute = "speed";
    cfg.surface_colormap = {ColormapName::PurpleGreen, std::nullopt};
    cfg.flow_colormap = {ColormapName::CoolWarm, std::nullopt};
    cfg.camera.position = {5.0, 0.75, 14.0};
    cfg.camera.look_at = {5.0, 0.75, 0.0};
    cfg.camera.up = {0.0, 1.0, 0.0};
    cfg.camera.vfov_deg = 50.0;
    cfg.camera.near = 0.1;
    cfg.camera.far = 100.0;
    cfg.background = {1.0, 1.0, 1.0, 1.0};
    cfg.initial_lens = Lens3De(Ball(TubeShape::axis_point(0.5) + TubeShape::axis_normal(0.5).vec() * 1.2, 1.0));
    return cfg;
}

}  // namespace lens3de
