// One line per acceptance criterion: PASS/FAIL, name, measured values.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "lens3de/app/bench.hpp"
#include "lens3de/app/commands.hpp"
#include "lens3de/interaction.hpp"
#include "lens3de/io/scene.hpp"
#include "lens3de/io/synthetic.hpp"
#include "lens3de/render/decal.hpp"
#include "lens3de/render/frame.hpp"
#include "lens3de/render/gbuffer.hpp"
#include "lens3de/render/shading.hpp"
#include "lens3de/selection.hpp"
#include "support.hpp"

using namespace lens3de;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome fresnel_formula() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    bool ok = true;
    double worst = 0.0;
    std::vector<std::pair<double, double>> by_r[2];
    const double rs[2] = {0.5, 3.0};
    for (int i = 0; i < 100000; ++i) {
        const Vec3 v = testing::random_unit(rng);
        const Vec3 n = testing::random_unit(rng);
        const int ri = i % 2;
        const double f = fresnel_opacity(v, n, rs[ri]);
        const double c = std::min(1.0, std::abs(dot(v, n)));
        ok &= f >= 0.0 && f <= 1.0;
        worst = std::max(worst, std::abs(f - (1.0 - std::pow(c, rs[ri]))));
        by_r[ri].emplace_back(c, f);
    }
    for (auto& samples : by_r) {
        std::sort(samples.begin(), samples.end());
        for (std::size_t i = 1; i < samples.size(); ++i) ok &= samples[i].second <= samples[i - 1].second;
    }
    for (double r : rs) {
        ok &= fresnel_opacity({0, 0, 1}, {0, 0, 1}, r) == 0.0;
        ok &= fresnel_opacity({0, 0, 1}, {0, 0, -1}, r) == 0.0;
        ok &= fresnel_opacity({1, 0, 0}, {0, 0, 1}, r) == 1.0;
    }
    const double secs = seconds_since(t0);
    ok &= worst <= 1e-12 && secs < 1.0;
    return {ok, fmt("max |F - (1-|v.n|^r)| = %.2e, runtime %.3f s", worst, secs)};
}

Outcome billboard_formula() {
    const auto ex = billboard_vertices({0, 0, 0}, {1, 0, 0}, Vec3{0, 0, 1}, 0.1);
    bool ok = ex.upper == Vec3{0, 0.1, 0} && ex.lower == Vec3{0, -0.1, 0};
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> u(-5, 5), thick(0.001, 0.5);
    double worst_dot = 0.0, worst_len = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const Vec3 p{u(rng), u(rng), u(rng)};
        const Vec3 eye = p + testing::random_unit(rng) * (0.5 + std::abs(u(rng)));
        // Every tenth case runs the line straight toward the eye.
        const Vec3 next = (i % 10 == 0) ? p + (eye - p) * 0.1 : p + testing::random_unit(rng) * 0.3;
        const double t = thick(rng);
        const auto q = billboard_vertices(p, next, eye, t);
        const Vec3 v = (eye - p) / (eye - p).length();
        worst_dot = std::max(worst_dot, std::abs(dot(q.upper - q.lower, v)));
        worst_len = std::max(worst_len, std::abs((q.upper - q.lower).length() - 2.0 * t));
    }
    ok &= worst_dot <= 1e-9 && worst_len <= 1e-9;
    return {ok, fmt("worked example %s, max |(p0-p1).v| = %.2e, max ||p0-p1| - 2t| = %.2e",
                    ex.upper == Vec3{0, 0.1, 0} ? "exact" : "wrong", worst_dot, worst_len)};
}

Outcome planar_decal_area() {
    const auto t0 = std::chrono::steady_clock::now();
    const Camera cam({0, 0, 3}, {0, 0, 0}, {0, 1, 0}, 60.0, 0.1, 100.0, 512, 512);
    SurfaceMesh plane = testing::grid_plane(2.0, 64);
    plane.attribute_layers.push_back({"k", std::vector<double>(plane.vertices.size(), 0.0)});
    const GBuffer g = rasterize_gbuffer(plane, cam);
    const ALBuffer al = rasterize_albuffer(plane, cam, g);
    const DecalLayer d = decal_pass(g, al, Lens3De(Ball({0, 0, 0.5}, 1.0)), "k",
                                   Colormap(ColormapName::PurpleGreen, -1, 1), cam);
    const double px = cam.pixel_size_at_depth(3.0);
    const double area = static_cast<double>(std::count(d.mask.begin(), d.mask.end(), 1)) * px * px;
    const double expected = kPi * (1.0 - 0.25);
    const double rel = std::abs(area - expected) / expected;
    const double secs = seconds_since(t0);
    return {rel <= 0.03 && secs < 5.0,
            fmt("area %.4f vs %.4f (%.2f%%), runtime %.3f s", area, expected, 100.0 * rel, secs)};
}

Outcome decal_oracle_agreement() {
    const SyntheticScene syn = generate_synthetic_scene({15000, 10, 7, 16});
    const Camera cam = synthetic_scene_config({}).camera.make().with_viewport(512, 512);
    const GBuffer g = rasterize_gbuffer(syn.mesh, cam);
    const ALBuffer al = rasterize_albuffer(syn.mesh, cam, g);
    bool equal = true;
    std::size_t decal_px = 0, agree = 0;
    int lenses = 0;
    for (double s : {0.2, 0.5, 0.8}) {
        const Lens3De lens(Ball(TubeShape::axis_point(s) + TubeShape::axis_normal(s).vec() * 1.1, 0.9));
        const DecalLayer d = decal_pass(g, al, lens, "curvature", Colormap(ColormapName::PurpleGreen, -2, 2), cam);
        const PatchSelection patch = ball_surface_patch(syn.mesh, lens.ball());
        std::vector<std::uint8_t> in_patch(syn.mesh.triangles.size(), 0);
        for (auto t : patch.full_triangle_ids) in_patch[t] = 1;
        for (auto t : patch.partial_triangle_ids) in_patch[t] = 1;
        for (std::size_t i = 0; i < d.mask.size(); ++i) {
            const bool scan = g.hit[i] && point_in_ball(g.position[i], lens.ball());
            equal &= static_cast<bool>(d.mask[i]) == scan;
            if (d.mask[i]) {
                ++decal_px;
                agree += in_patch[g.triangle[i]];
            }
        }
        ++lenses;
    }
    const double frac = decal_px ? static_cast<double>(agree) / decal_px : 0.0;
    return {decal_px > 0 && frac >= 0.99 && equal,
            fmt("%d lenses, %zu decal px, %.3f%% in patch triangles, full-scan equality %s", lenses, decal_px,
                100.0 * frac, equal ? "exact" : "broken")};
}

// Independent oracles: dense point sampling for containment, fine
// subdivision for the in-ball mean direction.
bool sampled_hit(const Polyline& line, const Ball& ball) {
    for (std::size_t s = 0; s + 1 < line.size(); ++s)
        for (int k = 0; k <= 1000; ++k)
            if (distance(lerp(line[s], line[s + 1], k / 1000.0), ball.center()) <= ball.radius()) return true;
    return false;
}

std::optional<Vec3> sampled_direction(const Polyline& line, const Ball& ball) {
    Vec3 sum;
    const int n = 4000;
    for (std::size_t s = 0; s + 1 < line.size(); ++s)
        for (int k = 0; k < n; ++k) {
            const Vec3 a = lerp(line[s], line[s + 1], static_cast<double>(k) / n);
            const Vec3 b = lerp(line[s], line[s + 1], static_cast<double>(k + 1) / n);
            if (point_in_ball((a + b) * 0.5, ball)) sum += b - a;
        }
    if (sum.length() == 0.0) return std::nullopt;
    return sum / sum.length();
}

Outcome containment_selection() {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    std::normal_distribution<double> jitter(0.0, 0.15);
    StreamlineSet set;
    for (int i = 0; i < 1000; ++i) {
        Vec3 p{u(rng), u(rng), u(rng)};
        const Vec3 d = testing::random_unit(rng);
        Polyline l{p};
        for (int k = 0; k < 7; ++k) l.push_back(p = p + d * 0.6 + Vec3{jitter(rng), jitter(rng), jitter(rng)});
        set.lines.push_back(l);
        set.seed_ids.push_back(i);
    }
    const Ball ball({0.1, -0.2, 0.2}, 1.1);
    const UnitVec3 normal = UnitVec3::normalize({0.2, 0.4, 1.0});
    const SelectionBuffer base = select_containment(set, ball);
    const SelectionBuffer ang = select_angular(set, base, {ball.center(), ball.radius(), normal}, 15.0);
    int cont_miss = 0, ang_miss = 0, ang_kept = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        cont_miss += base[i] != sampled_hit(set.lines[i], ball);
        const auto dir = base[i] ? sampled_direction(set.lines[i], ball) : std::nullopt;
        const bool expect = dir && angle_deg(*dir, normal) <= 15.0;
        ang_miss += ang[i] != expect;
        ang_kept += ang[i];
    }

    StreamlineSet boundary;
    for (double deg : {14.0, 16.0}) {
        const Vec3 d{std::sin(deg_to_rad(deg)), 0, std::cos(deg_to_rad(deg))};
        boundary.lines.push_back({d * -2.0, d * 0.0, d * 2.0});
        boundary.seed_ids.push_back(static_cast<std::int64_t>(deg));
    }
    const SelectionBuffer edge =
        select_with_lens(boundary, Lens3De(Ball({0, 0, 0}, 1.0), UnitVec3::unit_z(), 15.0));
    const bool edge_ok = edge[0] && !edge[1];
    return {cont_miss == 0 && ang_miss == 0 && edge_ok,
            fmt("containment %zu/1000 selected, %d mismatches; angular %d kept, %d mismatches; 14/16 deg %s",
                base.count(), cont_miss, ang_kept, ang_miss, edge_ok ? "in/out" : "wrong")};
}

Outcome interaction_state_machine() {
    StreamlineSet lines;
    lines.lines = {{{-3, 0, 0}, {3, 0, 0}}, {{0, -3, 0}, {0, 3, 0}}};
    lines.seed_ids = {0, 1};
    const Lens3De lens(Ball({0, 0, 0}, 1.0));
    const std::vector<InteractionEvent> events = {
        event::GrabLens{},      event::MoveTo{{1, 0, 0}},   event::Ungrab{},         event::GrabDisk{},
        event::OrientTo{UnitVec3::unit_x()}, event::UngrabDisk{}, event::ClearDisk{}, event::SetTolerance{30.0},
        event::GrabScale{},     event::ScaleDelta{0.2},     event::UngrabScale{}};
    int pairs = 0, fired = 0, expected_fired = 0;
    bool ok = true;
    for (auto mode : {InteractionMode::Idle, InteractionMode::GrabbingLens, InteractionMode::GrabbingDisk,
                      InteractionMode::GrabbingScale})
        for (const auto& l : {lens, lens.with_disk_normal(UnitVec3::unit_y())})
            for (const auto& ev : events) {
                const auto r = step_interaction({mode, l}, ev, lines);
                const auto n = std::count_if(r.effects.begin(), r.effects.end(),
                                             [](const auto& e) { return e.kind == EffectKind::SelectionTriggered; });
                const bool should = mode == InteractionMode::GrabbingLens && std::holds_alternative<event::Ungrab>(ev);
                ok &= n == (should ? 1 : 0);
                fired += static_cast<int>(n);
                expected_fired += should;
                ++pairs;
            }
    return {ok, fmt("%d (state, event) pairs, %d SelectionTriggered (expected %d)", pairs, fired, expected_fired)};
}

Scene desk_scene(int width, int height) {
    SceneConfig cfg = synthetic_scene_config({15000, 2000, 7, 64});
    cfg.camera.width = width;
    cfg.camera.height = height;
    auto syn = generate_synthetic_scene(*cfg.synthetic);
    return make_scene(std::move(syn.mesh), std::move(syn.lines), std::move(cfg));
}

Outcome determinism() {
    const Scene scene = desk_scene(800, 600);
    const Lens3De lens = *scene.config.initial_lens;
    const SelectionBuffer sel = select_with_lens(scene.lines, lens);
    std::vector<std::string> ppm;
    for (int threads : {1, 4, 1, 4})
        ppm.push_back(encode_ppm(render_frame(scene, lens, scene.camera(), sel, 0.3, {threads}).image));
    const bool same = std::all_of(ppm.begin(), ppm.end(), [&](const std::string& p) { return p == ppm[0]; });
    return {same, fmt("%zu triangles, %zu lines, 800x600, 4 renders over threads {1,4}: %s",
                      scene.mesh.triangles.size(), scene.lines.size(), same ? "bit-identical" : "differ")};
}

Outcome throughput() {
    BenchOptions opts;
    opts.spec = {15000, 2000, 7, 64};
    opts.frames = 10;
    opts.threads = 4;
    const BenchReport r = run_bench(opts);
    const json j = r.to_json();
    std::ofstream("bench_report.json") << j.dump(2) << '\n';
    std::cout << "      bench report: " << j.dump() << '\n';
    return {r.within_budget(), fmt("median %.1f ms over %d frames at %dx%d, 4 threads on %u hardware threads "
                                   "(budget %.0f ms)",
                                   r.median_total_ms, r.frames, r.width, r.height,
                                   std::thread::hardware_concurrency(), r.budget_ms)};
}

// Exact portion of segment a->b inside the ball, from the ray/sphere quadratic.
std::optional<std::pair<double, double>> clip_to_ball(const Vec3& a, const Vec3& b, const Ball& ball) {
    const Vec3 d = b - a, f = a - ball.center();
    const double qa = dot(d, d), qb = 2.0 * dot(f, d), qc = dot(f, f) - ball.radius() * ball.radius();
    if (qa == 0.0) return qc <= 0.0 ? std::optional{std::pair{0.0, 1.0}} : std::nullopt;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return std::nullopt;
    const double t0 = std::max(0.0, (-qb - std::sqrt(disc)) / (2.0 * qa));
    const double t1 = std::min(1.0, (-qb + std::sqrt(disc)) / (2.0 * qa));
    if (t0 > t1) return std::nullopt;
    return std::pair{t0, t1};
}

// Recount selected lines for one ball and normal across a list of tolerances.
std::vector<std::size_t> recount(const StreamlineSet& set, const Ball& ball, const Vec3& normal,
                                 const std::vector<double>& tols) {
    std::vector<std::size_t> counts(tols.size(), 0);
    for (const auto& line : set.lines) {
        bool hit = false;
        Vec3 sum;
        for (std::size_t s = 0; s + 1 < line.size(); ++s)
            if (const auto c = clip_to_ball(line[s], line[s + 1], ball)) {
                hit = true;
                sum += (line[s + 1] - line[s]) * (c->second - c->first);
            }
        if (!hit || sum.length() == 0.0) continue;
        const double deg = std::acos(std::clamp(dot(sum / sum.length(), normal), -1.0, 1.0)) * 180.0 / kPi;
        for (std::size_t i = 0; i < tols.size(); ++i) counts[i] += deg <= tols[i];
    }
    return counts;
}

Outcome turbine_scenario() {
    const auto dir = testing::scratch_dir("acceptance_turbine");
    const double s = 0.3;
    json scene = {{"synthetic", {{"triangles", 362000}, {"lines", 5000}, {"seed", 7}}}};
    std::ofstream(dir / "scene.json") << scene.dump();
    json key0 = {{"time", 0.0}, {"center", vec3_to_json(TubeShape::axis_point(s))}, {"radius", 1.2},
                 {"disk_normal", vec3_to_json(TubeShape::axis_tangent(s))}, {"tol_deg", 90.0}, {"phase", 0.0}};
    json key1 = key0;
    key1["time"] = 2.0;
    key1["tol_deg"] = 15.0;
    key1["phase"] = 1.0;
    std::ofstream(dir / "script.json") << json{{"keyframes", {key0, key1}}}.dump();

    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    const int status = cmd_animate({dir / "scene.json", dir / "script.json", 5.0, dir / "frames", std::pair{800, 600}, 4},
                                   out, err);
    const double secs = seconds_since(t0);
    if (status != 0) return {false, "animate failed: " + err.str()};

    std::vector<std::size_t> counts;
    std::vector<double> tols;
    std::istringstream lines(out.str());
    for (std::string line; std::getline(lines, line);) {
        const json f = json::parse(line);
        counts.push_back(f["selected_count"].get<std::size_t>());
        tols.push_back(f["lens"]["tol_deg"].get<double>());
    }
    bool monotone = counts.size() == 11;
    for (std::size_t i = 1; i < counts.size(); ++i) monotone &= counts[i] <= counts[i - 1] && tols[i] <= tols[i - 1];
    std::string series;
    for (auto c : counts) series += (series.empty() ? "" : ",") + std::to_string(c);
    const bool narrowed = !counts.empty() && counts.back() < counts.front();

    const auto syn = generate_synthetic_scene({362000, 5000, 7});
    const auto expected = recount(syn.lines, Ball(TubeShape::axis_point(s), 1.2), TubeShape::axis_tangent(s).vec(), tols);
    const bool recounted = expected == counts;
    return {monotone && narrowed && recounted,
            fmt("%zu frames at 800x600 in %.1f s; selected per frame [", counts.size(), secs) + series +
                "] as tol goes 90 -> 15 deg; brute-force recount " + (recounted ? "agrees" : "differs")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"fresnel_formula", fresnel_formula},
        {"billboard_formula", billboard_formula},
        {"planar_decal_area", planar_decal_area},
        {"decal_oracle_agreement", decal_oracle_agreement},
        {"containment_and_angular_selection", containment_selection},
        {"interaction_state_machine", interaction_state_machine},
        {"render_determinism", determinism},
        {"frame_time_budget", throughput},
        {"turbine_tolerance_sweep", turbine_scenario},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
