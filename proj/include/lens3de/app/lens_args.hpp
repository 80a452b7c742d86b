#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lens3de/geometry.hpp"

namespace lens3de {

/// Comma-separated finite reals; throws std::invalid_argument unless exactly
/// `count` values are present.
std::vector<double> parse_reals(std::string_view text, std::size_t count, std::string_view what);

/// "--lens cx,cy,cz,r [--disk nx,ny,nz] [--tol deg]"
Lens3De parse_lens_args(std::string_view lens, const std::optional<std::string>& disk, std::optional<double> tol_deg);

/// "WxH" with both positive.
std::pair<int, int> parse_resolution(std::string_view text);

}  // namespace lens3de
