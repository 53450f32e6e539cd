#include "fixtures.hpp"

#include "trisep/enumerate.hpp"
#include "trisep/generate.hpp"
#include "trisep/io.hpp"
#include "trisep/maxsep.hpp"
#include "trisep/svg.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace trisep;
using fixtures::error_kind;

namespace {

const char* kMinimal = R"({"version": 1,
  "polygon": [[-10, -10], [10, -11], [11, 10], [-10, 10]],
  "blue": [[1, 0], [3, 1], [0, 3]],
  "red": [[5, 6]]})";

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t occurrences(const std::string& text, const std::string& what)
{
    std::size_t n = 0;
    for (auto p = text.find(what); p != std::string::npos; p = text.find(what, p + 1)) {
        ++n;
    }
    return n;
}

} // namespace

TEST_CASE("parse a minimal scene")
{
    const Scene s = parse_scene(kMinimal);
    CHECK(s.blue.size() == 3);
    CHECK(s.red.size() == 1);
    CHECK(s.polygon.size() == 4);
    CHECK(s.red[0] == IPoint{5, 6});
}

TEST_CASE("scene validation errors")
{
    const std::string on_edge = R"({"version": 1, "polygon": [[-10, -10], [10, -10], [10, 10], [-10, 10]],
        "blue": [[0, 0], [3, 0], [0, 3]], "red": [[10, 2]]})";
    CHECK(error_kind([&] { parse_scene(on_edge); }) == ErrorKind::PointOutsideEnvironment);

    const std::string collinear = R"({"version": 1, "polygon": [[-10, -10], [10, -11], [11, 10], [-10, 10]],
        "blue": [[0, 0], [1, 1], [2, 2], [5, 0]], "red": []})";
    CHECK(error_kind([&] { parse_scene(collinear); }) == ErrorKind::GeneralPositionViolation);

    const std::string two = R"({"version": 1, "polygon": [[-10, -10], [10, -10], [10, 10], [-10, 10]],
        "blue": [[0, 0], [3, 1]], "red": []})";
    CHECK(error_kind([&] { parse_scene(two); }) == ErrorKind::FewerThanThreePoints);

    const std::string bowtie = R"({"version": 1, "polygon": [[-10, -10], [10, 10], [10, -10], [-10, 10]],
        "blue": [[0, 1], [1, 2], [-1, 3]], "red": []})";
    CHECK(error_kind([&] { parse_scene(bowtie); }) == ErrorKind::NonSimplePolygon);
}

TEST_CASE("malformed scene text")
{
    CHECK(error_kind([] { parse_scene("{"); }) == ErrorKind::Syntax);
    CHECK(error_kind([] { parse_scene(R"({"version": 1, "blue": [], "red": []})"); }) == ErrorKind::Syntax);
    CHECK(error_kind([] { parse_scene(R"({"version": 2, "polygon": [], "blue": [], "red": []})"); }) ==
          ErrorKind::Syntax);
    CHECK(error_kind([] {
              parse_scene(R"({"version": 1, "polygon": [[0, 0], [1.5, 0], [0, 1]], "blue": [], "red": []})");
          }) == ErrorKind::Syntax);
    CHECK(error_kind([] {
              parse_scene(R"({"version": 1, "polygon": [[0, 0, 1], [1, 0], [0, 1]], "blue": [], "red": []})");
          }) == ErrorKind::Syntax);
}

TEST_CASE("clockwise environments are reoriented")
{
    const std::string cw = R"({"version": 1, "polygon": [[-10, 10], [11, 10], [10, -11], [-10, -10]],
        "blue": [[1, 0], [3, 1], [0, 3]], "red": [[5, 6]]})";
    const Scene s = parse_scene(cw);
    CHECK(polygon_signed_area2(s.polygon) > 0);
    CHECK(s == parse_scene(kMinimal));
}

TEST_CASE("canonical text round trip")
{
    const std::vector<Scene> scenes{fixtures::s1(), generate_lower_bound(2), generate_tight_ring(6, 12),
                                    generate_random({3, 9, 5, 7, EnvShape::star, false})};
    for (const Scene& s : scenes) {
        const std::string text = write_scene(s);
        const Scene back = parse_scene(text);
        CHECK(back == s);
        CHECK(write_scene(back) == text);
        CHECK(scene_digest(back) == scene_digest(s));
    }
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("exact output formatting")
{
    CHECK(point_json(Point::from_rational(mpq_class(1, 3), mpq_class(-2))) == R"(["1/3","-2/1"])");
}

TEST_CASE("generators are deterministic")
{
    const RandomSceneParams p{1, 8, 4, 8, EnvShape::convex, false};
    const Scene a = generate_random(p);
    CHECK(a == generate_random(p));
    CHECK(a.blue.size() == 8);
    CHECK(a.red.size() == 4);
    CHECK(a.polygon.size() == 8);
    CHECK(scene_digest(a) == "4651c4eb167d9071");
    CHECK_FALSE(a == generate_random({2, 8, 4, 8, EnvShape::convex, false}));

    const Scene star = generate_random({4, 6, 3, 10, EnvShape::star, false});
    CHECK(polygon_is_simple(star.polygon));
    CHECK_NOTHROW(validate_scene(star));

    RandomSceneParams bad = p;
    bad.blue = 2;
    CHECK(error_kind([&] { generate_random(bad); }) == ErrorKind::FewerThanThreePoints);

    RandomSceneParams red_in = p;
    red_in.allow_red_inside = true;
    const Scene ri = generate_random(red_in);
    CHECK(error_kind([&] { build_enlarged_separator(ri); }) == ErrorKind::RedInsideHull);
}

TEST_CASE("tight ring")
{
    CHECK(error_kind([] { generate_tight_ring(6, 4); }) == ErrorKind::InvalidArgument);
    const Scene s = generate_tight_ring(6, 12);
    CHECK(brute_force_separators(build_arrangement(s)).empty());
    CHECK(approx_max_separator(s).blue_count > 0);
}

TEST_CASE("svg rendering")
{
    const Scene s = fixtures::s1();
    const Overlay hull[] = {Overlay::hull};
    const std::string svg = render_svg(s, hull);
    CHECK(svg == render_svg(s, hull));

    const std::string golden = std::string(TRISEP_TEST_DATA) + "/s1_hull.svg";
    if (std::getenv("TRISEP_UPDATE_GOLDEN")) {
        std::ofstream(golden, std::ios::binary) << svg;
    }
    CHECK(svg == read_file(golden));

    const std::string bare = render_svg(s);
    CHECK(occurrences(bare, "<polygon") == 1);
    CHECK(occurrences(bare, "<circle") == s.blue.size() + s.red.size());
    CHECK(occurrences(bare, "<line") == 0);

    const Overlay lines[] = {Overlay::arrangement};
    CHECK(occurrences(render_svg(s, lines), "<line") == 8);

    Scene notched;
    notched.polygon = fixtures::f1();
    notched.blue = {{-5, -5}, {-3, -5}, {-4, -2}};
    const Overlay result[] = {Overlay::result};
    CHECK(occurrences(render_svg(notched, result), "overlay skipped: NonConvexEnvironment") == 1);
}
