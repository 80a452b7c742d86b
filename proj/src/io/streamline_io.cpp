#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "lens3de/io/streamline_io.hpp"

namespace lens3de {

namespace {

using ojson = nlohmann::ordered_json;

Vec3 point_from(const ojson& p, const std::string& where) {
    if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() || !p[2].is_number())
        throw IoError(where + ": point must be [x,y,z]");
    Vec3 v{p[0].get<double>(), p[1].get<double>(), p[2].get<double>()};
    if (!v.is_finite()) throw IoError(where + ": point is not finite");
    return v;
}

bool all_whitespace(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

StreamlineSet parse_streamlines(const std::string& text, const std::string& source) {
    StreamlineSet set;
    if (all_whitespace(text)) return set;

    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(source + ": " + e.what());
    }
    if (!doc.is_object()) throw IoError(source + ": expected a JSON object");

    if (doc.contains("lines")) {
        const auto& lines = doc["lines"];
        if (!lines.is_array()) throw IoError(source + ": 'lines' must be an array");
        std::unordered_set<std::int64_t> seen;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const std::string where = source + ": line " + std::to_string(i);
            const auto& rec = lines[i];
            if (!rec.is_object() || !rec.contains("points") || !rec["points"].is_array())
                throw IoError(where + ": expected {\"points\":[...]}");
            const auto& pts = rec["points"];
            if (pts.size() < 2)
                throw IoError(where + ": polyline needs at least 2 points, got " + std::to_string(pts.size()));
            Polyline poly;
            poly.reserve(pts.size());
            for (const auto& p : pts) poly.push_back(point_from(p, where));

            std::int64_t id = static_cast<std::int64_t>(i);
            if (rec.contains("seed_id")) {
                if (!rec["seed_id"].is_number_integer()) throw IoError(where + ": seed_id must be an integer");
                id = rec["seed_id"].get<std::int64_t>();
            }
            if (!seen.insert(id).second) throw IoError(where + ": duplicate seed_id " + std::to_string(id));
            set.lines.push_back(std::move(poly));
            set.seed_ids.push_back(id);
        }
    }

    const std::size_t total = set.total_points();
    if (doc.contains("attributes")) {
        const auto& attrs = doc["attributes"];
        if (!attrs.is_object()) throw IoError(source + ": 'attributes' must be an object");
        for (const auto& [name, arr] : attrs.items()) {
            if (!arr.is_array()) throw IoError(source + ": attribute '" + name + "' is not an array");
            if (arr.size() != total)
                throw IoError(source + ": attribute '" + name + "' length mismatch: " +
                              std::to_string(arr.size()) + " values for " + std::to_string(total) + " points");
            AttributeLayer layer{name, {}};
            layer.values.reserve(total);
            for (const auto& v : arr) {
                if (!v.is_number()) throw IoError(source + ": attribute '" + name + "' has a non-number");
                layer.values.push_back(v.get<double>());
            }
            set.attribute_layers.push_back(std::move(layer));
        }
    }
    return set;
}

StreamlineSet load_streamlines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open streamlines '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_streamlines(ss.str(), path.string());
}

std::string serialize_streamlines(const StreamlineSet& set) {
    ojson doc;
    doc["lines"] = ojson::array();
    for (std::size_t i = 0; i < set.lines.size(); ++i) {
        ojson pts = ojson::array();
        for (const auto& p : set.lines[i]) pts.push_back({p.x, p.y, p.z});
        doc["lines"].push_back({{"seed_id", set.seed_ids[i]}, {"points", std::move(pts)}});
    }
    doc["attributes"] = ojson::object();
    for (const auto& layer : set.attribute_layers) doc["attributes"][layer.name] = layer.values;
    return doc.dump() + "\n";
}

void write_streamlines(const StreamlineSet& set, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write streamlines '" + path.string() + "'");
    out << serialize_streamlines(set);
    if (!out) throw IoError("failed writing streamlines '" + path.string() + "'");
}

}  // namespace lens3de
