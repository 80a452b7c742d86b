#pragma once

#include <filesystem>
#include <string>

#include "lens3de/io/errors.hpp"
#include "lens3de/mesh.hpp"

namespace lens3de {

/// Native streamline document:
///   {"lines":[{"seed_id":int,"points":[[x,y,z],...]}, ...],
///    "attributes":{"name":[...per point, concatenated in line order...]}}
/// `seed_id` may be omitted, in which case the line's position in the file is
/// used. An empty file is an empty set.
StreamlineSet load_streamlines(const std::filesystem::path& path);
StreamlineSet parse_streamlines(const std::string& text, const std::string& source);

std::string serialize_streamlines(const StreamlineSet& set);
void write_streamlines(const StreamlineSet& set, const std::filesystem::path& path);

}  // namespace lens3de
