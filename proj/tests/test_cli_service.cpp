#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "lens3de/app/bench.hpp"
#include "lens3de/app/commands.hpp"
#include "lens3de/app/lens_args.hpp"
#include "lens3de/app/script.hpp"
#include "lens3de/app/server.hpp"
#include "lens3de/app/session.hpp"
#include "lens3de/io/mesh_io.hpp"
#include "lens3de/io/streamline_io.hpp"
#include "support.hpp"

using namespace lens3de;
using nlohmann::json;
using lens3de::testing::grid_plane;
using lens3de::testing::scratch_dir;

namespace {

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

std::string read_bytes(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

// Plane z = 0 plus straight lines along +x at y = 0.2 k.
std::filesystem::path flat_scene(const std::string& name, const std::string& surface_attr = "height") {
    const auto dir = scratch_dir(name);
    SurfaceMesh plane = grid_plane(2.0, 8);
    plane.attribute_layers.push_back({"height", std::vector<double>(plane.vertices.size(), 0.5)});
    write_mesh(plane, dir / "plane.obj");
    StreamlineSet lines;
    for (int k = 0; k < 5; ++k) {
        lines.lines.push_back({{-2, 0.2 * k, 0.1}, {0, 0.2 * k, 0.1}, {2, 0.2 * k, 0.1}});
        lines.seed_ids.push_back(100 + k);
    }
    lines.attribute_layers.push_back({"speed", std::vector<double>(15, 1.0)});
    write_streamlines(lines, dir / "lines.json");
    json doc = {{"mesh", "plane.obj"},
                {"streamlines", "lines.json"},
                {"surface_focus_attribute", surface_attr},
                {"flow_focus_attribute", "speed"},
                {"camera", {{"position", {0, 0, 5}}, {"look_at", {0, 0, 0}}, {"resolution", {64, 48}}}}};
    write_text(dir / "scene.json", doc.dump());
    return dir / "scene.json";
}

struct Run {
    int status;
    std::string out;
    std::string err;
};

template <class Fn>
Run run(Fn&& fn) {
    std::ostringstream out, err;
    const int status = fn(out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("lens arguments") {
    const Lens3De l = parse_lens_args("1,2,3,0.5", std::string("0,0,2"), 20.0);
    CHECK(l.ball().center() == Vec3{1, 2, 3});
    CHECK(l.ball().radius() == 0.5);
    CHECK(l.disk_normal() == UnitVec3::unit_z());
    CHECK(l.angular_tolerance_deg() == 20.0);
    CHECK(parse_lens_args(" -1.5, 0,+2 ,1e-1", std::nullopt, std::nullopt).ball().radius() == doctest::Approx(0.1));
    CHECK_THROWS_AS(parse_lens_args("1,2,3", std::nullopt, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(parse_lens_args("1,2,3,0", std::nullopt, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(parse_lens_args("1,2,x,1", std::nullopt, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(parse_lens_args("0,0,0,1", std::string("0,0,0"), std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(parse_lens_args("0,0,0,1", std::nullopt, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(parse_lens_args("0,0,0,1", std::nullopt, 95.0), std::invalid_argument);

    CHECK(parse_resolution("800x600") == std::pair{800, 600});
    CHECK_THROWS_AS(parse_resolution("800"), std::invalid_argument);
    CHECK_THROWS_AS(parse_resolution("0x600"), std::invalid_argument);
    CHECK_THROWS_AS(parse_resolution("80x6o"), std::invalid_argument);
}

TEST_CASE("lens scripts") {
    const LensScript two = parse_lens_script(json::parse(R"({"keyframes":[
        {"time":0,"center":[0,0,0],"radius":1,"disk_normal":[1,0,0],"tol_deg":90},
        {"time":1,"center":[2,0,0],"radius":3,"disk_normal":[0,1,0],"tol_deg":10}]})"));
    CHECK(animation_frame_count(two, 10.0) == 11);
    CHECK(animation_frame_count(two, 3.0) == 4);
    CHECK_THROWS_AS(animation_frame_count(two, 0.0), std::invalid_argument);

    const Lens3De mid = lens_at(two, 0.5);
    CHECK(mid.ball().center() == Vec3{1, 0, 0});
    CHECK(mid.ball().radius() == 2.0);
    CHECK(mid.angular_tolerance_deg() == 50.0);
    CHECK(mid.disk_normal()->x() == doctest::Approx(std::sqrt(0.5)));
    CHECK(lens_at(two, -1.0) == lens_at(two, 0.0));
    CHECK(lens_at(two, 5.0).ball().radius() == 3.0);
    CHECK(phase_at(two, 0.5) == 0.0);

    const LensScript spin = parse_lens_script(json::parse(R"({"keyframes":[
        {"time":0,"center":[0,0,0],"radius":1,"phase":0},{"time":4,"center":[0,0,0],"radius":1,"phase":2}]})"));
    CHECK(phase_at(spin, 1.0) == 0.5);
    CHECK(phase_at(spin, 9.0) == 2.0);

    const LensScript mixed = parse_lens_script(json::parse(R"({"keyframes":[
        {"time":0,"center":[0,0,0],"radius":1},
        {"time":2,"center":[0,0,0],"radius":1,"disk_normal":[0,0,1]}]})"));
    CHECK_FALSE(lens_at(mixed, 1.0).disk_normal());
    const LensScript opposite = parse_lens_script(json::parse(R"({"keyframes":[
        {"time":0,"center":[0,0,0],"radius":1,"disk_normal":[0,0,1]},
        {"time":2,"center":[0,0,0],"radius":1,"disk_normal":[0,0,-1]}]})"));
    CHECK(lens_at(opposite, 1.0).disk_normal() == UnitVec3::unit_z());

    CHECK_THROWS_AS(parse_lens_script(json::parse(R"({"keyframes":[]})")), IoError);
    CHECK_THROWS_AS(parse_lens_script(json::parse(R"({"keyframes":[{"time":1,"center":[0,0,0],"radius":1},
                                                                    {"time":1,"center":[0,0,0],"radius":1}]})")),
                    IoError);
    CHECK_THROWS_AS(parse_lens_script(json::parse(R"({"keyframes":[{"time":0,"center":[0,0,0],"radius":0}]})")),
                    IoError);
}

TEST_CASE("select command") {
    const auto scene = flat_scene("cmd_select");
    auto r = run([&](auto& o, auto& e) { return cmd_select({scene, Lens3De(Ball({0, 0, 0}, 50))}, o, e); });
    REQUIRE(r.status == 0);
    const json all = json::parse(r.out);
    CHECK(all["selected_seed_ids"] == json({100, 101, 102, 103, 104}));
    CHECK(all["patch"]["full"].size() == 128);
    CHECK(all["patch"]["partial"].empty());

    r = run([&](auto& o, auto& e) {
        return cmd_select({scene, Lens3De(Ball({0, 0, 0}, 50), UnitVec3::unit_z(), 15.0)}, o, e);
    });
    CHECK(json::parse(r.out)["selected_seed_ids"].empty());

    r = run([&](auto& o, auto& e) { return cmd_select({scene, Lens3De(Ball({0, 0.2, 0}, 0.15))}, o, e); });
    const auto ids = json::parse(r.out)["selected_seed_ids"].get<std::vector<int>>();
    CHECK(ids == std::vector<int>{101});

    r = run([&](auto& o, auto& e) { return cmd_select({scene.parent_path() / "nope.json", std::nullopt}, o, e); });
    CHECK(r.status != 0);
    CHECK(r.err.find("nope.json") != std::string::npos);
}

TEST_CASE("render command") {
    const auto scene = flat_scene("cmd_render");
    const auto dir = scene.parent_path();
    RenderRequest req{scene, Lens3De(Ball({40, 40, 40}, 1.0)), std::pair{40, 30}, 0.0, dir / "a.ppm", 2};
    auto r = run([&](auto& o, auto& e) { return cmd_render(req, o, e); });
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["selected_count"] == 0);
    CHECK(read_bytes(dir / "a.ppm").rfind("P6\n40 30\n255\n", 0) == 0);
    req.out = dir / "b.ppm";
    const auto again = run([&](auto& o, auto& e) { return cmd_render(req, o, e); });
    CHECK(again.out == r.out);
    CHECK(read_bytes(dir / "a.ppm") == read_bytes(dir / "b.ppm"));

    const auto bad = flat_scene("cmd_render_bad", "wall_shear");
    r = run([&](auto& o, auto& e) { return cmd_render({bad, std::nullopt, {}, 0.0, dir / "c.ppm", 1}, o, e); });
    CHECK(r.status != 0);
    CHECK(r.err.find("wall_shear") != std::string::npos);
}

TEST_CASE("animate command") {
    const auto scene = flat_scene("cmd_animate");
    const auto dir = scene.parent_path();
    write_text(dir / "still.json", R"({"keyframes":[
        {"time":0,"center":[0,0,0],"radius":0.5},{"time":1,"center":[0,0,0],"radius":0.5}]})");
    AnimateRequest req{scene, dir / "still.json", 4.0, dir / "still", std::pair{32, 24}, 1};
    auto r = run([&](auto& o, auto& e) { return cmd_animate(req, o, e); });
    REQUIRE(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) ++n;
    CHECK(n == 5);
    const std::string first = read_bytes(dir / "still" / "frame_00000.ppm");
    CHECK(!first.empty());
    for (int i = 1; i < 5; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%05d.ppm", i);
        REQUIRE(read_bytes(dir / "still" / name) == first);
    }

    write_text(dir / "bad.json", R"({"keyframes":[{"time":0,"center":[0,0,0],"radius":-1}]})");
    req.script = dir / "bad.json";
    r = run([&](auto& o, auto& e) { return cmd_animate(req, o, e); });
    CHECK(r.status != 0);
}

TEST_CASE("animation tightening the tolerance never grows the selection") {
    const SyntheticScene syn = generate_synthetic_scene({2000, 400, 5, 32});
    const Scene scene = make_scene(syn.mesh, syn.lines, synthetic_scene_config({2000, 400, 5, 32}));
    LensScript script;
    const Vec3 c = TubeShape::axis_point(0.3);
    script.keyframes = {{0.0, c, 1.2, TubeShape::axis_tangent(0.3), 90.0}, {2.0, c, 1.2, TubeShape::axis_tangent(0.3), 15.0}};
    const auto frames = evaluate_animation(scene, script, 5.0);
    REQUIRE(frames.size() == 11);
    for (std::size_t i = 1; i < frames.size(); ++i) {
        REQUIRE(frames[i].lens.angular_tolerance_deg() <= frames[i - 1].lens.angular_tolerance_deg());
        REQUIRE(frames[i].selection.subset_of(frames[i - 1].selection));
    }
    CHECK(frames.back().selection.count() < frames.front().selection.count());
}

TEST_CASE("generate command writes a loadable scene") {
    const auto dir = scratch_dir("cmd_generate");
    auto r = run([&](auto& o, auto& e) { return cmd_generate({{600, 12, 3, 8}, dir}, o, e); });
    REQUIRE(r.status == 0);
    const Scene scene = load_scene(dir / "scene.json");
    CHECK(scene.lines.size() == 12);
    CHECK(scene.mesh.find_layer("curvature"));
    const SyntheticScene syn = generate_synthetic_scene({600, 12, 3, 8});
    CHECK(selection_report(scene, initial_lens(scene)) ==
          selection_report(make_scene(syn.mesh, syn.lines, synthetic_scene_config({600, 12, 3, 8})),
                           *synthetic_scene_config({}).initial_lens));
}

TEST_CASE("bench") {
    BenchOptions opts;
    opts.spec = {1000, 50, 7, 16};
    opts.width = 80;
    opts.height = 60;
    opts.frames = 3;
    opts.threads = 2;
    const BenchReport report = run_bench(opts);
    const json j = report.to_json();
    CHECK(j["stages_ms"].size() == 5);
    for (const auto& [k, v] : j["stages_ms"].items()) CHECK(v.get<double>() >= 0.0);
    CHECK(j["frames"] == 3);
    CHECK(j["lines"] == 50);
    CHECK(j["resolution"] == json({80, 60}));
    opts.frames = 0;
    CHECK_THROWS_AS(run_bench(opts), std::invalid_argument);
}

TEST_CASE("protocol events") {
    CHECK(std::holds_alternative<event::MoveTo>(event_from_json(json::parse(R"({"type":"move","position":[1,2,3]})"))));
    CHECK(std::holds_alternative<event::SetTolerance>(
        event_from_json(json::parse(R"({"type":"set_tolerance","tol_deg":20})"))));
    auto code_of = [](const char* text) {
        try {
            event_from_json(json::parse(text));
        } catch (const ProtocolError& e) {
            return e.code();
        }
        return std::string();
    };
    CHECK(code_of(R"({"type":"teleport"})") == "unknown_event_type");
    CHECK(code_of(R"({"type":"move"})") == "missing_field");
    CHECK(code_of(R"({"type":"orient","normal":[0,0,0]})") == "invalid_value");
    CHECK(code_of(R"({"kind":"grab"})") == "missing_field");
    CHECK(code_of(R"({"type":"scale","delta":"big"})") == "invalid_value");
    for (const InteractionEvent& ev : {InteractionEvent{event::OrientTo{UnitVec3::unit_y()}},
                                       InteractionEvent{event::ScaleDelta{0.25}}, InteractionEvent{event::Ungrab{}}})
        CHECK(event_to_json(event_from_json(event_to_json(ev))) == event_to_json(ev));
}

TEST_CASE("session replays match the state machine") {
    SceneConfig cfg = synthetic_scene_config({2000, 300, 9, 32});
    auto syn = generate_synthetic_scene(*cfg.synthetic);
    LensSession session(make_scene(syn.mesh, syn.lines, cfg));
    const StreamlineSet& lines = session.scene().lines;

    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> pick(0, 10);
    std::uniform_real_distribution<double> u(-1, 1);
    InteractionState mirror = session.state();
    for (int i = 0; i < 400; ++i) {
        json ev;
        switch (pick(rng)) {
            case 0: ev = {{"type", "grab"}}; break;
            case 1: ev = {{"type", "move"}, {"position", {5 + 4 * u(rng), 1 + u(rng), u(rng)}}}; break;
            case 2: ev = {{"type", "ungrab"}}; break;
            case 3: ev = {{"type", "grab_disk"}}; break;
            case 4: ev = {{"type", "orient"}, {"normal", {u(rng), u(rng), u(rng) + 0.01}}}; break;
            case 5: ev = {{"type", "ungrab_disk"}}; break;
            case 6: ev = {{"type", "set_tolerance"}, {"tol_deg", 5 + 40 * (u(rng) + 1)}}; break;
            case 7: ev = {{"type", "grab_scale"}}; break;
            case 8: ev = {{"type", "scale"}, {"delta", 0.3 * u(rng)}}; break;
            case 9: ev = {{"type", "ungrab_scale"}}; break;
            default: ev = {{"type", "clear_disk"}}; break;
        }
        const json resp = session.handle_event({{"event", ev}});
        const StepResult expected = step_interaction(mirror, event_from_json(ev), lines);
        mirror = expected.state;
        REQUIRE(resp["effects"].size() == expected.effects.size());
        for (std::size_t k = 0; k < expected.effects.size(); ++k) {
            REQUIRE(resp["effects"][k]["type"] == std::string(to_string(expected.effects[k].kind)));
            if (expected.effects[k].selection)
                REQUIRE(resp["effects"][k]["selected_seed_ids"] ==
                        json(selected_seed_ids(lines, *expected.effects[k].selection)));
        }
        REQUIRE(resp["lens"] == lens_to_json(mirror.lens));
        REQUIRE(session.state() == mirror);
    }

    const InteractionState before = session.state();
    CHECK_THROWS_AS(session.handle_event(json::parse(R"({"event":{"type":"warp"}})")), ProtocolError);
    CHECK(session.state() == before);
}

TEST_CASE("ungrab after grab and move returns the selection") {
    SceneConfig cfg = synthetic_scene_config({2000, 300, 9, 32});
    auto syn = generate_synthetic_scene(*cfg.synthetic);
    LensSession session(make_scene(syn.mesh, syn.lines, cfg));
    session.handle_event({{"type", "grab"}});
    const Vec3 target = TubeShape::axis_point(0.25);
    const json moved = session.handle_event({{"type", "move"}, {"position", vec3_to_json(target)}});
    CHECK(moved["effects"][0]["type"] == "decal_preview");
    const json resp = session.handle_event({{"event", {{"type", "ungrab"}}}});
    CHECK(resp["mode"] == "idle");
    CHECK(resp["effects"][0]["type"] == "selection_triggered");
    const auto expected = selected_seed_ids(session.scene().lines,
                                            select_with_lens(session.scene().lines, session.state().lens));
    CHECK(resp["selected_seed_ids"] == json(expected));
    CHECK(!expected.empty());
    CHECK(session.selection_json()["selected_seed_ids"] == json(expected));
    const json patch = session.patch_json();
    CHECK(patch.contains("patch_full"));
    CHECK(patch.contains("patch_partial"));
}

TEST_CASE("http service") {
    SceneConfig cfg = synthetic_scene_config({1000, 60, 9, 16});
    cfg.camera.width = 48;
    cfg.camera.height = 36;
    auto syn = generate_synthetic_scene(*cfg.synthetic);
    LensSession session(make_scene(syn.mesh, syn.lines, cfg));
    LensServer server(session, 2);
    const int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    client.set_keep_alive(true);

    auto scene = client.Get("/scene");
    REQUIRE(scene);
    CHECK(scene->status == 200);
    CHECK(scene->body.back() == '\n');
    const json sj = json::parse(scene->body);
    CHECK(sj["counts"]["lines"] == 60);
    CHECK(sj["streamlines"]["seed_ids"].size() == 60);
    CHECK(sj["mesh"]["triangles"].size() == 3 * session.scene().mesh.triangles.size());
    CHECK(sj["focus"]["surface"] == "curvature");

    auto post = [&](const std::string& body) { return client.Post("/lens/event", body, "application/json"); };
    REQUIRE(post(R"({"event":{"type":"grab"}})")->status == 200);
    REQUIRE(post(R"({"event":{"type":"move","position":[2.5,1.0,0.0]}})")->status == 200);
    auto ungrab = post(R"({"event":{"type":"ungrab"}})");
    REQUIRE(ungrab->status == 200);
    const json uj = json::parse(ungrab->body);
    CHECK(uj.contains("selected_seed_ids"));
    CHECK(uj["effects"][0]["type"] == "selection_triggered");

    const InteractionState before = session.state();
    auto unknown = post(R"({"event":{"type":"warp"}})");
    CHECK(unknown->status == 400);
    CHECK(json::parse(unknown->body)["error"]["code"] == "unknown_event_type");
    auto broken = post(R"({"event":)");
    CHECK(broken->status == 400);
    CHECK(json::parse(broken->body)["error"]["code"] == "malformed_json");
    CHECK(session.state() == before);

    auto sel = client.Get("/selection");
    REQUIRE(sel);
    CHECK(json::parse(sel->body)["selected_seed_ids"] == uj["selected_seed_ids"]);
    auto patch = client.Get("/patch");
    REQUIRE(patch);
    CHECK(json::parse(patch->body)["lens"] == uj["lens"]);

    auto frame = client.Get("/frame?phase=0.25");
    REQUIRE(frame);
    CHECK(frame->status == 200);
    CHECK(frame->body.rfind("P6\n48 36\n255\n", 0) == 0);
    CHECK(frame->body.size() == std::string("P6\n48 36\n255\n").size() + 48 * 36 * 3);
    CHECK(client.Get("/frame?phase=abc")->status == 400);
    auto missing = client.Get("/nowhere");
    CHECK(missing->status == 404);
    CHECK(json::parse(missing->body)["error"]["code"] == "not_found");

    server.stop();
    worker.join();
}
