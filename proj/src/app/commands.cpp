#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "lens3de/app/commands.hpp"
#include "lens3de/io/mesh_io.hpp"
#include "lens3de/io/streamline_io.hpp"

namespace lens3de {

using nlohmann::json;

namespace {

Rgb8 background_rgb(const Scene& scene) {
    auto q = [](double v) { return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)); };
    const Color& c = scene.config.background;
    return {q(c.r), q(c.g), q(c.b)};
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

Lens3De initial_lens(const Scene& scene) {
    if (scene.config.initial_lens) return *scene.config.initial_lens;
    constexpr double inf = std::numeric_limits<double>::infinity();
    Vec3 lo{inf, inf, inf};
    Vec3 hi{-inf, -inf, -inf};
    auto grow = [&](const Vec3& p) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    };
    for (const auto& v : scene.mesh.vertices) grow(v);
    for (const auto& l : scene.lines.lines)
        for (const auto& p : l) grow(p);
    if (!(lo.x <= hi.x)) return Lens3De(Ball({0, 0, 0}, 1.0));
    const double diag = distance(lo, hi);
    return Lens3De(Ball((lo + hi) * 0.5, diag > 0.0 ? 0.25 * diag : 1.0));
}

Camera scene_camera(const Scene& scene, std::optional<std::pair<int, int>> resolution) {
    Camera cam = scene.camera();
    if (resolution) cam = cam.with_viewport(resolution->first, resolution->second);
    return cam;
}

json selection_report(const Scene& scene, const Lens3De& lens) {
    const SelectionBuffer sel = select_with_lens(scene.lines, lens);
    const PatchSelection patch = ball_surface_patch(scene.mesh, lens.ball());
    json j;
    j["selected_seed_ids"] = selected_seed_ids(scene.lines, sel);
    j["patch"] = {{"full", patch.full_triangle_ids}, {"partial", patch.partial_triangle_ids}};
    return j;
}

std::vector<AnimationFrame> evaluate_animation(const Scene& scene, const LensScript& script, double fps,
                                               const std::function<void(const AnimationFrame&)>& on_frame) {
    const std::size_t n = animation_frame_count(script, fps);
    std::vector<AnimationFrame> frames;
    frames.reserve(n);
    const double t0 = script.keyframes.front().time;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = std::min(t0 + static_cast<double>(i) / fps, script.keyframes.back().time);
        const Lens3De lens = lens_at(script, t);
        frames.push_back({i, t, phase_at(script, t), lens, select_with_lens(scene.lines, lens)});
        if (on_frame) on_frame(frames.back());
    }
    return frames;
}

int cmd_render(const RenderRequest& req, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (req.out.empty()) throw std::invalid_argument("render needs an output path");
        if (!std::isfinite(req.phase)) throw std::invalid_argument("--phase must be finite");
        const Scene scene = load_scene(req.scene);
        const Lens3De lens = req.lens.value_or(initial_lens(scene));
        const Camera cam = scene_camera(scene, req.resolution);
        const SelectionBuffer sel = select_with_lens(scene.lines, lens);
        const FrameResult frame = render_frame(scene, lens, cam, sel, req.phase, {req.threads});
        write_image(frame.image, req.out, background_rgb(scene));
        json j;
        j["selected_count"] = sel.count();
        j["lines"] = scene.lines.size();
        j["resolution"] = {cam.width(), cam.height()};
        j["lens"] = lens_to_json(lens);
        out << j.dump() << '\n';
        return 0;
    });
}

int cmd_select(const SelectRequest& req, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Scene scene = load_scene(req.scene);
        out << selection_report(scene, req.lens.value_or(initial_lens(scene))).dump() << '\n';
        return 0;
    });
}

int cmd_animate(const AnimateRequest& req, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (req.out_dir.empty()) throw std::invalid_argument("animate needs an output directory");
        const Scene scene = load_scene(req.scene);
        const LensScript script = load_lens_script(req.script);
        const Camera cam = scene_camera(scene, req.resolution);
        std::filesystem::create_directories(req.out_dir);
        const Rgb8 bg = background_rgb(scene);
        evaluate_animation(scene, script, req.fps, [&](const AnimationFrame& f) {
            const FrameResult frame = render_frame(scene, f.lens, cam, f.selection, f.phase, {req.threads});
            char name[32];
            std::snprintf(name, sizeof name, "frame_%05zu.ppm", f.index);
            write_image(frame.image, req.out_dir / name, bg);
            json j;
            j["frame"] = f.index;
            j["time"] = f.time;
            j["lens"] = lens_to_json(f.lens);
            j["selected_count"] = f.selection.count();
            out << j.dump() << '\n';
        });
        return 0;
    });
}

int cmd_generate(const GenerateRequest& req, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (req.out_dir.empty()) throw std::invalid_argument("generate needs an output directory");
        const SyntheticScene syn = generate_synthetic_scene(req.spec);
        std::filesystem::create_directories(req.out_dir);
        write_mesh(syn.mesh, req.out_dir / "mesh.obj");
        write_streamlines(syn.lines, req.out_dir / "lines.json");

        const SceneConfig cfg = synthetic_scene_config(req.spec);
        const auto& cam = cfg.camera;
        json doc;
        doc["mesh"] = "mesh.obj";
        doc["streamlines"] = "lines.json";
        doc["surface_focus_attribute"] = cfg.surface_focus_attribute;
        doc["flow_focus_attribute"] = cfg.flow_focus_attribute;
        doc["colormaps"] = {{"surface", {{"name", to_string(cfg.surface_colormap.name)}}},
                            {"flow", {{"name", to_string(cfg.flow_colormap.name)}}}};
        doc["camera"] = {{"position", vec3_to_json(cam.position)},
                         {"look_at", vec3_to_json(cam.look_at)},
                         {"up", vec3_to_json(cam.up)},
                         {"vfov_deg", cam.vfov_deg},
                         {"near", cam.near},
                         {"far", cam.far},
                         {"resolution", {cam.width, cam.height}}};
        if (cfg.initial_lens) doc["lens"] = lens_to_json(*cfg.initial_lens);
        std::ofstream f(req.out_dir / "scene.json");
        f << doc.dump(2) << '\n';
        if (!f) throw IoError("cannot write " + (req.out_dir / "scene.json").string());

        json j;
        j["scene"] = (req.out_dir / "scene.json").string();
        j["triangles"] = syn.mesh.triangles.size();
        j["lines"] = syn.lines.size();
        out << j.dump() << '\n';
        return 0;
    });
}

}  // namespace lens3de
