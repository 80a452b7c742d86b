#pragma once

#include <stdexcept>
#include <string>

namespace lens3de {

/// Load/parse/write failure. The message carries file and record context,
/// e.g. "mesh.obj:12: face index 9 out of range (8 vertices)".
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lens3de
