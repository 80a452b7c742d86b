#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lens3de/io/mesh_io.hpp"

namespace lens3de {

namespace {

std::string context(const std::string& source, std::size_t line) {
    return source + ":" + std::to_string(line) + ": ";
}

double parse_real(std::string_view tok, const std::string& where) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v))
        throw IoError(where + "invalid number '" + std::string(tok) + "'");
    return v;
}

long parse_index(std::string_view tok, const std::string& where) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0)
        throw IoError(where + "invalid index '" + std::string(tok) + "'");
    return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Resolves a 1-based (or negative, relative) OBJ index against `count`.
long resolve(long idx, std::size_t count) {
    return idx > 0 ? idx - 1 : static_cast<long>(count) + idx;
}

Vec3 parse_xyz(const std::vector<std::string_view>& tok, const std::string& where) {
    if (tok.size() < 4) throw IoError(where + "expected 3 coordinates");
    return {parse_real(tok[1], where), parse_real(tok[2], where), parse_real(tok[3], where)};
}

struct PendingFace {
    std::array<long, 3> v;
    std::size_t line;
};

}  // namespace

std::filesystem::path attribute_sidecar_path(const std::filesystem::path& mesh_path) {
    auto p = mesh_path;
    p.replace_extension(".attrs.json");
    return p;
}

SurfaceMesh parse_obj(std::istream& in, const std::string& source) {
    SurfaceMesh mesh;
    std::vector<Vec3> normals;
    std::vector<PendingFace> faces;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        std::string_view body(line.data(), hash == std::string::npos ? line.size() : hash);
        auto tok = split_ws(body);
        if (tok.empty()) continue;
        const std::string where = context(source, line_no);

        if (tok[0] == "v") {
            mesh.vertices.push_back(parse_xyz(tok, where));
        } else if (tok[0] == "vn") {
            normals.push_back(parse_xyz(tok, where));
        } else if (tok[0] == "f") {
            if (tok.size() != 4)
                throw IoError(where + "only triangular faces are supported (got " +
                              std::to_string(tok.size() - 1) + " corners)");
            PendingFace f{{}, line_no};
            for (int k = 0; k < 3; ++k) {
                auto corner = tok[k + 1];
                const auto slash = corner.find('/');
                const long idx = parse_index(corner.substr(0, slash), where);
                const long r = resolve(idx, mesh.vertices.size());
                if (r < 0 || static_cast<std::size_t>(r) >= mesh.vertices.size())
                    throw IoError(where + "face index " + std::to_string(idx) + " out of range (" +
                                  std::to_string(mesh.vertices.size()) + " vertices)");
                f.v[k] = r;
            }
            faces.push_back(f);
        }
        // vt, o, g, s, usemtl, mtllib and anything else: ignored
    }

    mesh.triangles.reserve(faces.size());
    for (const auto& f : faces)
        mesh.triangles.push_back({static_cast<std::uint32_t>(f.v[0]), static_cast<std::uint32_t>(f.v[1]),
                                  static_cast<std::uint32_t>(f.v[2])});

    if (!normals.empty()) {
        if (normals.size() != mesh.vertices.size())
            throw IoError(source + ": " + std::to_string(normals.size()) + " normals for " +
                          std::to_string(mesh.vertices.size()) + " vertices (expected one per vertex)");
        mesh.normals.reserve(normals.size());
        for (std::size_t i = 0; i < normals.size(); ++i) {
            auto n = UnitVec3::try_normalize(normals[i]);
            if (!n) throw IoError(source + ": normal " + std::to_string(i + 1) + " has zero length");
            mesh.normals.push_back(*n);
        }
    } else {
        mesh.normals = compute_vertex_normals(mesh.vertices, mesh.triangles);
    }
    return mesh;
}

SurfaceMesh load_mesh(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open mesh '" + path.string() + "'");
    SurfaceMesh mesh = parse_obj(in, path.string());

    const auto sidecar = attribute_sidecar_path(path);
    if (std::filesystem::exists(sidecar)) {
        std::ifstream s(sidecar);
        nlohmann::ordered_json doc;
        try {
            doc = nlohmann::ordered_json::parse(s);
        } catch (const nlohmann::json::exception& e) {
            throw IoError(sidecar.string() + ": " + e.what());
        }
        if (!doc.is_object()) throw IoError(sidecar.string() + ": expected an object of attribute arrays");
        for (const auto& [name, arr] : doc.items()) {
            if (!arr.is_array()) throw IoError(sidecar.string() + ": attribute '" + name + "' is not an array");
            if (arr.size() != mesh.vertices.size())
                throw IoError(sidecar.string() + ": attribute '" + name + "' length mismatch: " +
                              std::to_string(arr.size()) + " values for " +
                              std::to_string(mesh.vertices.size()) + " vertices");
            AttributeLayer layer{name, {}};
            layer.values.reserve(arr.size());
            for (std::size_t i = 0; i < arr.size(); ++i) {
                if (!arr[i].is_number())
                    throw IoError(sidecar.string() + ": attribute '" + name + "' entry " + std::to_string(i) +
                                  " is not a number");
                layer.values.push_back(arr[i].get<double>());
            }
            mesh.attribute_layers.push_back(std::move(layer));
        }
    }
    return mesh;
}

void write_mesh(const SurfaceMesh& mesh, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write mesh '" + path.string() + "'");
    out << std::setprecision(17);
    for (const auto& v : mesh.vertices) out << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (const auto& n : mesh.normals) out << "vn " << n.x() << ' ' << n.y() << ' ' << n.z() << '\n';
    const bool with_normals = mesh.normals.size() == mesh.vertices.size() && !mesh.normals.empty();
    for (const auto& t : mesh.triangles) {
        out << 'f';
        for (auto i : t) {
            out << ' ' << (i + 1);
            if (with_normals) out << "//" << (i + 1);
        }
        out << '\n';
    }
    if (!out) throw IoError("failed writing mesh '" + path.string() + "'");

    if (!mesh.attribute_layers.empty()) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::object();
        for (const auto& layer : mesh.attribute_layers) doc[layer.name] = layer.values;
        std::ofstream s(attribute_sidecar_path(path), std::ios::binary);
        if (!s) throw IoError("cannot write attribute sidecar for '" + path.string() + "'");
        s << doc.dump() << '\n';
    }
}

}  // namespace lens3de
