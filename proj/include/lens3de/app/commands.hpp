#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lens3de/app/script.hpp"
#include "lens3de/geometry.hpp"
#include "lens3de/io/scene.hpp"
#include "lens3de/io/synthetic.hpp"
#include "lens3de/render/frame.hpp"
#include "lens3de/selection.hpp"

namespace lens3de {

/// The scene's configured lens, or a ball at the mesh bounding-box center
/// with a quarter of its diagonal as radius.
Lens3De initial_lens(const Scene& scene);

/// Camera from the scene config, resized when `resolution` is given.
Camera scene_camera(const Scene& scene, std::optional<std::pair<int, int>> resolution);

/// {"selected_seed_ids":[...],"patch":{"full":[...],"partial":[...]}}
nlohmann::json selection_report(const Scene& scene, const Lens3De& lens);

struct RenderRequest {
    std::filesystem::path scene;
    std::optional<Lens3De> lens;
    std::optional<std::pair<int, int>> resolution;
    double phase = 0.0;
    std::filesystem::path out;
    int threads = 1;
};

struct SelectRequest {
    std::filesystem::path scene;
    std::optional<Lens3De> lens;
};

struct AnimateRequest {
    std::filesystem::path scene;
    std::filesystem::path script;
    double fps = 10.0;
    std::filesystem::path out_dir;
    std::optional<std::pair<int, int>> resolution;
    int threads = 1;
};

struct GenerateRequest {
    SyntheticSpec spec;
    std::filesystem::path out_dir;
};

struct AnimationFrame {
    std::size_t index = 0;
    double time = 0.0;
    double phase = 0.0;
    Lens3De lens;
    SelectionBuffer selection;
};

/// Evaluates every frame of the script; `on_frame` runs after each frame's
/// selection is computed, in order.
std::vector<AnimationFrame> evaluate_animation(const Scene& scene, const LensScript& script, double fps,
                                               const std::function<void(const AnimationFrame&)>& on_frame = {});

// Each command returns a process exit status. Results go to `out` as JSON,
// diagnostics to `err`.
int cmd_render(const RenderRequest& req, std::ostream& out, std::ostream& err);
int cmd_select(const SelectRequest& req, std::ostream& out, std::ostream& err);
int cmd_animate(const AnimateRequest& req, std::ostream& out, std::ostream& err);
/// Writes mesh.obj (+ sidecar), lines.json and scene.json into out_dir.
int cmd_generate(const GenerateRequest& req, std::ostream& out, std::ostream& err);

}  // namespace lens3de
