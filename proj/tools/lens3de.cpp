#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "lens3de/app/bench.hpp"
#include "lens3de/app/commands.hpp"
#include "lens3de/app/lens_args.hpp"
#include "lens3de/app/server.hpp"

using namespace lens3de;

namespace {

struct LensFlags {
    std::optional<std::string> lens;
    std::optional<std::string> disk;
    std::optional<double> tol;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--lens", lens, "Lens ball as cx,cy,cz,r (default: scene lens)");
        cmd->add_option("--disk", disk, "Disk normal as nx,ny,nz");
        cmd->add_option("--tol", tol, "Angular tolerance in degrees, (0, 90]");
    }

    std::optional<Lens3De> resolve() const {
        if (!lens) {
            if (disk || tol) throw std::invalid_argument("--disk and --tol need --lens");
            return std::nullopt;
        }
        return parse_lens_args(*lens, disk, tol);
    }
};

int default_threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

LensServer* g_server = nullptr;

extern "C" void on_signal(int) {
    if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3De lens: focus+context rendering and selection for surfaces with streamlines"};
    app.require_subcommand(1);
    int rc = 0;

    auto* render = app.add_subcommand("render", "Render one frame to a PPM file");
    RenderRequest rr;
    LensFlags render_lens;
    std::optional<std::string> render_res;
    rr.threads = default_threads();
    render->add_option("scene", rr.scene, "Scene config JSON")->required();
    render_lens.add_to(render);
    render->add_option("--res", render_res, "Resolution WxH");
    render->add_option("--phase", rr.phase, "Arrow animation phase");
    render->add_option("--out", rr.out, "Output PPM path")->required();
    render->add_option("--threads", rr.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* select = app.add_subcommand("select", "Print selected seed ids and surface patch as JSON");
    SelectRequest sr;
    LensFlags select_lens;
    select->add_option("scene", sr.scene, "Scene config JSON")->required();
    select_lens.add_to(select);

    auto* animate = app.add_subcommand("animate", "Render a keyframed lens animation");
    AnimateRequest ar;
    std::optional<std::string> animate_res;
    ar.threads = default_threads();
    animate->add_option("scene", ar.scene, "Scene config JSON")->required();
    animate->add_option("--script", ar.script, "Keyframe script JSON")->required();
    animate->add_option("--fps", ar.fps, "Frames per second")->check(CLI::PositiveNumber);
    animate->add_option("--out", ar.out_dir, "Output directory")->required();
    animate->add_option("--res", animate_res, "Resolution WxH");
    animate->add_option("--threads", ar.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "Time the render stages on the synthetic scene");
    BenchOptions bo;
    std::string bench_res = "800x600";
    bool enforce = false;
    std::optional<std::string> bench_out;
    bench->add_option("--triangles", bo.spec.triangles, "Target triangle count");
    bench->add_option("--lines", bo.spec.lines, "Streamline count");
    bench->add_option("--seed", bo.spec.seed, "Generator seed");
    bench->add_option("--res", bench_res, "Resolution WxH");
    bench->add_option("--frames", bo.frames, "Frames to time");
    bench->add_option("--threads", bo.threads, "Worker threads")->check(CLI::PositiveNumber);
    bench->add_option("--budget-ms", bo.budget_ms, "Median frame budget");
    bench->add_flag("--enforce", enforce, "Exit nonzero when over budget");
    bench->add_option("--report", bench_out, "Also write the report JSON here");

    auto* serve = app.add_subcommand("serve", "Serve the lens protocol over HTTP");
    std::filesystem::path serve_scene;
    std::string host = "127.0.0.1";
    int port = 8080;
    int serve_threads = default_threads();
    serve->add_option("scene", serve_scene, "Scene config JSON")->required();
    serve->add_option("--host", host, "Bind address");
    serve->add_option("--port", port, "Port (0 picks a free one)");
    serve->add_option("--threads", serve_threads, "Render worker threads")->check(CLI::PositiveNumber);

    auto* generate = app.add_subcommand("generate", "Write the synthetic vessel scene to disk");
    GenerateRequest gr;
    generate->add_option("--triangles", gr.spec.triangles, "Target triangle count");
    generate->add_option("--lines", gr.spec.lines, "Streamline count");
    generate->add_option("--seed", gr.spec.seed, "Generator seed");
    generate->add_option("--points", gr.spec.points_per_line, "Points per streamline");
    generate->add_option("--out", gr.out_dir, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (render->parsed()) {
            rr.lens = render_lens.resolve();
            if (render_res) rr.resolution = parse_resolution(*render_res);
            rc = cmd_render(rr, std::cout, std::cerr);
        } else if (select->parsed()) {
            sr.lens = select_lens.resolve();
            rc = cmd_select(sr, std::cout, std::cerr);
        } else if (animate->parsed()) {
            if (animate_res) ar.resolution = parse_resolution(*animate_res);
            rc = cmd_animate(ar, std::cout, std::cerr);
        } else if (bench->parsed()) {
            std::tie(bo.width, bo.height) = parse_resolution(bench_res);
            const BenchReport report = run_bench(bo);
            const std::string text = report.to_json().dump(2);
            std::cout << text << '\n';
            if (bench_out) {
                std::ofstream f(*bench_out);
                f << text << '\n';
                if (!f) throw IoError("cannot write " + *bench_out);
            }
            if (enforce && !report.within_budget()) {
                std::cerr << "error: median frame " << report.median_total_ms << " ms exceeds budget "
                          << report.budget_ms << " ms\n";
                rc = 2;
            }
        } else if (serve->parsed()) {
            LensSession session(load_scene(serve_scene));
            LensServer server(session, serve_threads);
            const int bound = server.bind(host, port);
            if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
            std::cerr << "listening on http://" << host << ':' << bound << '\n';
            g_server = &server;
            std::signal(SIGINT, on_signal);
            std::signal(SIGTERM, on_signal);
            server.listen();
            g_server = nullptr;
        } else if (generate->parsed()) {
            rc = cmd_generate(gr, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
