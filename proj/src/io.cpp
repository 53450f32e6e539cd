#include "trisep/io.hpp"

#include "trisep/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace trisep {

namespace {

using nlohmann::json;

std::vector<IPoint> read_points(const json& doc, const char* key)
{
    const auto it = doc.find(key);
    if (it == doc.end()) {
        throw Error(ErrorKind::Syntax, std::string("missing key \"") + key + "\"");
    }
    if (!it->is_array()) {
        throw Error(ErrorKind::Syntax, std::string("\"") + key + "\" must be an array");
    }
    std::vector<IPoint> pts;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& p = (*it)[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
            throw Error(ErrorKind::Syntax, std::string(key) + "[" + std::to_string(i) + "] is not an integer pair", i);
        }
        if (p[0].is_number_unsigned() && p[0].get<std::uint64_t>() > std::numeric_limits<std::int64_t>::max()) {
            throw Error(ErrorKind::Syntax, std::string(key) + "[" + std::to_string(i) + "] out of range", i);
        }
        if (p[1].is_number_unsigned() && p[1].get<std::uint64_t>() > std::numeric_limits<std::int64_t>::max()) {
            throw Error(ErrorKind::Syntax, std::string(key) + "[" + std::to_string(i) + "] out of range", i);
        }
        pts.push_back(IPoint{p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
    }
    return pts;
}

void write_points(std::ostringstream& out, const char* key, const std::vector<IPoint>& pts, bool last)
{
    out << "  \"" << key << "\": [";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << (i ? ",\n    " : "\n    ") << '[' << pts[i].x << ", " << pts[i].y << ']';
    }
    out << (pts.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

} // namespace

Scene parse_scene(std::string_view text, const ValidationOptions& options)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Syntax, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorKind::Syntax, "scene must be a JSON object");
    }
    const auto version = doc.find("version");
    if (version == doc.end() || !version->is_number_integer() || version->get<std::int64_t>() != kSceneFormatVersion) {
        throw Error(ErrorKind::Syntax, "unsupported or missing \"version\" (expected 1)");
    }
    Scene scene;
    scene.polygon = read_points(doc, "polygon");
    scene.blue = read_points(doc, "blue");
    scene.red = read_points(doc, "red");
    orient_counterclockwise(scene);
    validate_scene(scene, options);
    return scene;
}

std::string write_scene(const Scene& scene)
{
    std::ostringstream out;
    out << "{\n  \"version\": " << kSceneFormatVersion << ",\n";
    write_points(out, "polygon", scene.polygon, false);
    write_points(out, "blue", scene.blue, false);
    write_points(out, "red", scene.red, true);
    out << "}\n";
    return out.str();
}

Scene load_scene(const std::filesystem::path& path, const ValidationOptions& options)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Syntax, "cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str(), options);
}

void save_scene(const std::filesystem::path& path, const Scene& scene)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    }
    out << write_scene(scene);
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string scene_digest(const Scene& scene)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(write_scene(scene))));
    return buf;
}

std::string point_json(const Point& p)
{
    return "[\"" + rational_text(p.x()) + "\",\"" + rational_text(p.y()) + "\"]";
}

std::string triangle_json(const CanonicalTriangle& t)
{
    std::string s = "{\"corners\":[";
    for (std::size_t i = 0; i < 3; ++i) {
        s += (i ? "," : "") + point_json(t.positions[i]);
    }
    s += "],\"lines\":[";
    for (std::size_t i = 0; i < 3; ++i) {
        s += (i ? "," : "") + std::to_string(t.support_lines[i]);
    }
    return s + "]}";
}

} // namespace trisep
