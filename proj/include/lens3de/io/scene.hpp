#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "lens3de/geometry.hpp"
#include "lens3de/io/errors.hpp"
#include "lens3de/io/synthetic.hpp"
#include "lens3de/mesh.hpp"
#include "lens3de/render/camera.hpp"
#include "lens3de/render/colormap.hpp"
#include "lens3de/render/style.hpp"

namespace lens3de {

struct ColormapBinding {
    ColormapName name = ColormapName::CoolWarm;
    /// When unset the attribute's [min, max] is used.
    std::optional<std::pair<double, double>> domain;
};

struct CameraSettings {
    Vec3 position{0, 0, 10};
    Vec3 look_at{0, 0, 0};
    Vec3 up{0, 1, 0};
    double vfov_deg = 45.0;
    double near = 0.1;
    double far = 1000.0;
    int width = 800;
    int height = 600;

    Camera make() const;
};

/// One JSON document; relative data paths are resolved against the config
/// file's directory. Either `mesh` + `streamlines` or `synthetic` supplies
/// the data.
struct SceneConfig {
    std::filesystem::path mesh_path;
    std::filesystem::path streamline_path;
    std::optional<SyntheticSpec> synthetic;
    std::string surface_focus_attribute;
    std::string flow_focus_attribute;
    ColormapBinding surface_colormap{ColormapName::PurpleGreen, std::nullopt};
    ColormapBinding flow_colormap{ColormapName::CoolWarm, std::nullopt};
    CameraSettings camera;
    Color background{1.0, 1.0, 1.0, 1.0};
    std::optional<Lens3De> initial_lens;
    RenderStyle style;
};

struct Scene {
    SurfaceMesh mesh;
    StreamlineSet lines;
    SceneConfig config;

    Colormap surface_colormap() const;
    Colormap flow_colormap() const;
    Camera camera() const { return config.camera.make(); }
};

SceneConfig parse_scene_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);
SceneConfig load_scene_config(const std::filesystem::path& path);

/// Loads data and checks that the focus attributes exist; throws IoError
/// naming the missing attribute otherwise.
Scene load_scene(const std::filesystem::path& config_path);
Scene make_scene(SurfaceMesh mesh, StreamlineSet lines, SceneConfig config);

/// Config for a synthetic scene with a camera framing the tube.
SceneConfig synthetic_scene_config(const SyntheticSpec& spec);

/// {"center":[x,y,z],"radius":r,"disk_normal":[..]|null,"tol_deg":deg}
nlohmann::json lens_to_json(const Lens3De& lens);
Lens3De lens_from_json(const nlohmann::json& j);

Vec3 vec3_from_json(const nlohmann::json& j);
nlohmann::json vec3_to_json(const Vec3& v);

}  // namespace lens3de
