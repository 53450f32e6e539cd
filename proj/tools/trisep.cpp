// Command-line front end: validate, enumerate, maxsep, generate, bench.
// Exit codes: 0 success, 1 domain error or failed check, 2 malformed input.

#include "trisep/arrangement.hpp"
#include "trisep/enumerate.hpp"
#include "trisep/error.hpp"
#include "trisep/generate.hpp"
#include "trisep/io.hpp"
#include "trisep/ranking.hpp"
#include "trisep/report.hpp"
#include "trisep/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace trisep;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Scene read_input(const std::string& path)
{
    try {
        return load_scene(path);
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << text;
}

int finish(const RunOutput& out, const std::string& out_path, const std::string& report_path)
{
    emit(out.lines, out_path);
    if (!report_path.empty()) {
        emit(out.report, report_path);
    }
    return out.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Triangular separators of blue and red points in a polygonal environment"};
    app.require_subcommand(1);

    std::string scene_path, out_path, report_path, svg_path;
    unsigned threads = 0;
    bool timings = false;

    auto* validate = app.add_subcommand("validate", "Check a scene file");
    validate->add_option("scene", scene_path, "Scene JSON")->required();

    RunOptions run;
    std::string backend = "rank";
    auto* enumerate = app.add_subcommand("enumerate", "List all canonical triangular separators");
    enumerate->add_option("scene", scene_path, "Scene JSON")->required();
    enumerate->add_option("--backend", backend, "Vertex labels: rank or oracle")
        ->check(CLI::IsMember({"rank", "oracle"}));
    enumerate->add_flag("--brute-force", run.brute_force, "Also run the exhaustive search and compare");
    enumerate->add_option("--out", out_path, "Write triangles here instead of stdout");
    enumerate->add_option("--svg", svg_path, "Render scene, arrangement and separators");
    enumerate->add_option("--report", report_path, "Write a summary JSON report");
    enumerate->add_option("--threads", threads, "Worker threads (0: all, capped by TRISEP_THREADS)");
    enumerate->add_flag("--timings", timings, "Include phase timings in the report");

    std::string apex = "lowest";
    auto* maxsep = app.add_subcommand("maxsep", "Approximate maximum triangular separator (convex environment)");
    maxsep->add_option("scene", scene_path, "Scene JSON")->required();
    maxsep->add_option("--apex", apex, "Apex policy: lowest or all")->check(CLI::IsMember({"lowest", "all"}));
    maxsep->add_flag("--oracles", run.oracles, "Check every inequality of the approximation chain");
    maxsep->add_option("--out", out_path, "Write the result here instead of stdout");
    maxsep->add_option("--svg", svg_path, "Render scene, enlarged hull and result");
    maxsep->add_option("--report", report_path, "Write a summary JSON report");
    maxsep->add_option("--threads", threads, "Worker threads (0: all, capped by TRISEP_THREADS)");
    maxsep->add_flag("--timings", timings, "Include phase timings in the report");

    std::string kind, shape = "convex";
    RandomSceneParams random;
    std::size_t t = 3;
    auto* generate = app.add_subcommand("generate", "Write a generated scene");
    generate->add_option("kind", kind, "random, lower-bound or tight-ring")
        ->required()
        ->check(CLI::IsMember({"random", "lower-bound", "tight-ring"}));
    generate->add_option("--seed", random.seed, "Random seed");
    generate->add_option("--blue", random.blue, "Blue points");
    generate->add_option("--red", random.red, "Red points");
    generate->add_option("--vertices", random.vertices, "Environment vertices");
    generate->add_option("--shape", shape, "convex or star")->check(CLI::IsMember({"convex", "star"}));
    generate->add_flag("--allow-red-inside", random.allow_red_inside, "Place a red point inside the blue hull");
    generate->add_option("--t", t, "Group size for lower-bound");
    generate->add_option("--out", out_path, "Write here instead of stdout");

    RandomSceneParams bench_params{1, 1000, 200, 64, EnvShape::convex, false};
    auto* bench = app.add_subcommand("bench", "Time arrangement, ranking and enumeration on a random scene");
    bench->add_option("--seed", bench_params.seed, "Random seed");
    bench->add_option("--blue", bench_params.blue, "Blue points");
    bench->add_option("--red", bench_params.red, "Red points");
    bench->add_option("--vertices", bench_params.vertices, "Environment vertices");
    bench->add_option("--threads", threads, "Worker threads (0: all, capped by TRISEP_THREADS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            const Scene scene = read_input(scene_path);
            nlohmann::ordered_json r;
            r["valid"] = true;
            r["digest"] = scene_digest(scene);
            r["blue"] = scene.blue.size();
            r["red"] = scene.red.size();
            r["polygon"] = scene.polygon.size();
            r["convex"] = polygon_is_convex(scene.polygon);
            std::cout << r.dump() << '\n';
            return 0;
        }
        if (enumerate->parsed()) {
            const Scene scene = read_input(scene_path);
            run.backend = backend == "rank" ? Backend::rank : Backend::oracle;
            run.threads = resolve_threads(threads);
            run.timings = timings;
            if (!svg_path.empty()) {
                const Overlay o[] = {Overlay::hull, Overlay::arrangement, Overlay::separators};
                emit(render_svg(scene, o), svg_path);
            }
            return finish(run_enumerate(scene, run), out_path, report_path);
        }
        if (maxsep->parsed()) {
            const Scene scene = read_input(scene_path);
            run.apex = apex == "lowest" ? ApexPolicy::lowest_vertex : ApexPolicy::all_vertices;
            run.threads = resolve_threads(threads);
            run.timings = timings;
            if (!svg_path.empty()) {
                const Overlay o[] = {Overlay::hull, Overlay::convex_separator, Overlay::result};
                emit(render_svg(scene, o), svg_path);
            }
            return finish(run_maxsep(scene, run), out_path, report_path);
        }
        if (generate->parsed()) {
            Scene scene;
            if (kind == "random") {
                random.shape = shape == "convex" ? EnvShape::convex : EnvShape::star;
                scene = generate_random(random);
            } else if (kind == "lower-bound") {
                scene = generate_lower_bound(t);
            } else {
                scene = generate_tight_ring(random.blue, random.red, random.seed);
            }
            emit(write_scene(scene), out_path);
            return 0;
        }
        if (bench->parsed()) {
            using clock = std::chrono::steady_clock;
            auto secs = [](clock::time_point a, clock::time_point b) {
                return std::chrono::duration<double>(b - a).count();
            };
            const auto t0 = clock::now();
            const Scene scene = generate_random(bench_params);
            const auto t1 = clock::now();
            const ArrangementGraph g = build_arrangement(scene, ArrangementOptions{false});
            const auto t2 = clock::now();
            const RankLabels labels = rank_arrangement(g);
            const auto t3 = clock::now();
            const EnumerationResult result = enumerate_separators(g, labels, resolve_threads(threads));
            const auto t4 = clock::now();
            const std::size_t r = scene.red.size();
            nlohmann::ordered_json rep;
            rep["digest"] = scene_digest(scene);
            rep["blue"] = scene.blue.size();
            rep["red"] = r;
            rep["polygon"] = scene.polygon.size();
            rep["vertices"] = g.vertices.size();
            rep["vertex_bound"] = (2 * r) * (2 * r - 1) / 2 + 6 * r;
            rep["edges"] = g.edge_count();
            rep["assignments"] = labels.assignments;
            rep["separators"] = result.triangles.size();
            rep["walk_steps"] = result.stats.walk_steps;
            rep["timings"] = {{"generate", secs(t0, t1)},
                              {"arrangement", secs(t1, t2)},
                              {"ranking", secs(t2, t3)},
                              {"enumeration", secs(t3, t4)},
                              {"total", secs(t1, t4)}};
            std::cout << rep.dump(2) << '\n';
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
