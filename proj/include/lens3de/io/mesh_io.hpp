#pragma once

#include <filesystem>
#include <iosfwd>

#include "lens3de/io/errors.hpp"
#include "lens3de/mesh.hpp"

namespace lens3de {

/// Sidecar path for a mesh file: "dir/name.obj" -> "dir/name.attrs.json".
std::filesystem::path attribute_sidecar_path(const std::filesystem::path& mesh_path);

/// Reads the OBJ subset `v`, `vn`, `f` (triangles only; `a`, `a/t`, `a//n`,
/// `a/t/n` corner forms; negative indices allowed). Other statements are
/// skipped. When `vn` lines are present there must be exactly one per vertex;
/// otherwise normals are computed. A sidecar `<name>.attrs.json` mapping
/// attribute name -> per-vertex array is merged when it exists, in file order.
SurfaceMesh load_mesh(const std::filesystem::path& path);

/// Parses OBJ text without a sidecar. `source` names the input in errors.
SurfaceMesh parse_obj(std::istream& in, const std::string& source);

/// Writes `path` plus the attribute sidecar (when the mesh has layers).
void write_mesh(const SurfaceMesh& mesh, const std::filesystem::path& path);

}  // namespace lens3de
