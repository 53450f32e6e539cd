#include "trisep/report.hpp"

#include "trisep/error.hpp"
#include "trisep/io.hpp"
#include "trisep/ranking.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <thread>

namespace trisep {

namespace {

using nlohmann::ordered_json;

class Stopwatch {
public:
    double lap()
    {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

ordered_json base_report(const Scene& scene, const char* mode)
{
    ordered_json r;
    r["digest"] = scene_digest(scene);
    r["mode"] = mode;
    r["blue"] = scene.blue.size();
    r["red"] = scene.red.size();
    r["polygon"] = scene.polygon.size();
    return r;
}

RunOutput red_inside(ordered_json report, const Error& e)
{
    ordered_json line;
    line["separators"] = 0;
    line["reason"] = std::string(to_string(e.kind()));
    line["detail"] = e.what();
    report["reason"] = line["reason"];
    return RunOutput{line.dump() + "\n", report.dump(2) + "\n", true};
}

ordered_json triangle_points(const Triangle& t)
{
    ordered_json a = ordered_json::array();
    for (const Point* p : {&t.a, &t.b, &t.c}) {
        a.push_back({rational_text(p->x()), rational_text(p->y())});
    }
    return a;
}

} // namespace

unsigned resolve_threads(unsigned requested)
{
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TRISEP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            cap = static_cast<unsigned>(v);
        }
    }
    return requested == 0 ? cap : std::min(requested, cap);
}

RunOutput run_enumerate(const Scene& scene, const RunOptions& options)
{
    ordered_json report = base_report(scene, "enumerate");
    report["backend"] = options.backend == Backend::rank ? "rank" : "oracle";
    Stopwatch clock;
    ordered_json timings;

    std::optional<ArrangementGraph> g;
    try {
        g = build_arrangement(scene);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::RedInsideHull) {
            return red_inside(std::move(report), e);
        }
        throw;
    }
    timings["arrangement"] = clock.lap();

    const RankLabels labels = options.backend == Backend::rank ? rank_arrangement(*g) : oracle_labels(*g);
    timings["ranking"] = clock.lap();
    const EnumerationResult result = enumerate_separators(*g, labels, options.threads);
    timings["enumeration"] = clock.lap();

    RunOutput out;
    if (options.brute_force) {
        out.lines += "# walk\n";
    }
    for (const auto& t : result.triangles) {
        out.lines += triangle_json(t) + "\n";
    }

    report["lines"] = g->lines.size();
    report["vertices"] = {{"I", g->count_type(VertexType::I)},
                          {"II", g->count_type(VertexType::II)},
                          {"III", g->count_type(VertexType::III)},
                          {"IV", g->count_type(VertexType::IV)},
                          {"total", g->vertices.size()}};
    report["edges"] = g->edge_count();
    report["ranking"] = {{"ancestors", labels.ancestors.size()},
                         {"assignments", labels.assignments},
                         {"monotonicity_violations", labels.monotonicity_violations}};
    report["separators"] = result.triangles.size();
    report["counters"] = {{"corners", result.stats.corners},       {"walks", result.stats.walks},
                          {"walk_steps", result.stats.walk_steps}, {"formed", result.stats.formed},
                          {"rejected", result.stats.rejected},     {"emitted", result.stats.emitted},
                          {"invalid", result.stats.invalid}};

    if (options.brute_force) {
        const auto brute = brute_force_separators(*g);
        timings["brute_force"] = clock.lap();
        out.lines += "# brute force\n";
        for (const auto& t : brute) {
            out.lines += triangle_json(t) + "\n";
        }
        out.ok = brute == result.triangles;
        out.lines += out.ok ? "MATCH\n" : "MISMATCH\n";
        report["brute_force"] = {{"separators", brute.size()}, {"match", out.ok}};
    }
    if (options.timings) {
        report["timings"] = timings;
    }
    out.report = report.dump(2) + "\n";
    return out;
}

RunOutput run_maxsep(const Scene& scene, const RunOptions& options)
{
    ordered_json report = base_report(scene, "maxsep");
    report["apex_policy"] = options.apex == ApexPolicy::lowest_vertex ? "lowest" : "all";
    Stopwatch clock;
    ordered_json timings;

    std::optional<ConvexSeparator> c;
    try {
        c = build_enlarged_separator(scene);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::RedInsideHull) {
            return red_inside(std::move(report), e);
        }
        throw;
    }
    timings["convex_separator"] = clock.lap();
    const MaxSepResult result = approx_max_separator(scene, *c, options.apex, options.threads);
    timings["candidates"] = clock.lap();

    ordered_json line;
    line["triangle"] = triangle_points(result.triangle);
    line["blue_count"] = result.blue_count;
    line["apex"] = {rational_text(result.apex_used.x()), rational_text(result.apex_used.y())};
    line["family_size"] = result.family_size;
    line["separator_vertices"] = c->size();

    RunOutput out;
    out.lines = line.dump() + "\n";
    report["result"] = line;
    if (options.oracles) {
        const auto checks = lemma_chain_checks(scene, *c, result);
        timings["oracles"] = clock.lap();
        std::size_t failed = 0;
        for (const auto& k : checks) {
            ordered_json row;
            row["check"] = k.name;
            row["lhs"] = k.lhs;
            row["rhs"] = k.rhs;
            row["status"] = k.ok ? "OK" : "FAIL";
            out.lines += row.dump() + "\n";
            failed += k.ok ? 0 : 1;
        }
        out.ok = failed == 0;
        report["checks"] = {{"total", checks.size()}, {"failed", failed}};
    }
    if (options.timings) {
        report["timings"] = timings;
    }
    out.report = report.dump(2) + "\n";
    return out;
}

} // namespace trisep
