#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lens3de/app/bench.hpp"
#include "lens3de/io/scene.hpp"

namespace lens3de {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

nlohmann::json BenchReport::to_json() const {
    nlohmann::json j;
    j["stages_ms"] = {{"gbuffer", median.gbuffer_ms},
                      {"albuffer", median.albuffer_ms},
                      {"decal", median.decal_ms},
                      {"lines", median.lines_ms},
                      {"composite", median.composite_ms}};
    j["median_total_ms"] = median_total_ms;
    j["frames"] = frames;
    j["resolution"] = {width, height};
    j["threads"] = threads;
    j["triangles"] = triangles;
    j["lines"] = lines;
    j["selected_lines"] = selected_lines;
    j["budget_ms"] = budget_ms;
    j["within_budget"] = within_budget();
    return j;
}

BenchReport run_bench(const BenchOptions& opts) {
    if (opts.frames < 1) throw std::invalid_argument("bench needs at least one frame");
    SceneConfig cfg = synthetic_scene_config(opts.spec);
    cfg.camera.width = opts.width;
    cfg.camera.height = opts.height;
    auto syn = generate_synthetic_scene(opts.spec);
    const Scene scene = make_scene(std::move(syn.mesh), std::move(syn.lines), std::move(cfg));
    const Lens3De lens = *scene.config.initial_lens;
    const Camera cam = scene.camera();
    const SelectionBuffer sel = select_with_lens(scene.lines, lens);

    std::vector<double> g, a, d, l, c, total;
    for (int i = 0; i < opts.frames; ++i) {
        const StageTimings t = render_frame(scene, lens, cam, sel, 0.0, {opts.threads}).timings;
        g.push_back(t.gbuffer_ms);
        a.push_back(t.albuffer_ms);
        d.push_back(t.decal_ms);
        l.push_back(t.lines_ms);
        c.push_back(t.composite_ms);
        total.push_back(t.total_ms());
    }
    BenchReport r;
    r.median = {median(g), median(a), median(d), median(l), median(c)};
    r.median_total_ms = median(total);
    r.frames = opts.frames;
    r.width = opts.width;
    r.height = opts.height;
    r.threads = opts.threads;
    r.triangles = scene.mesh.triangles.size();
    r.lines = scene.lines.size();
    r.selected_lines = sel.count();
    r.budget_ms = opts.budget_ms;
    return r;
}

}  // namespace lens3de
