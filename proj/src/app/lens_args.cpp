#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lens3de/app/lens_args.hpp"

namespace lens3de {

namespace {

double parse_real(std::string_view s, std::string_view what) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + ": '" + std::string(s) + "' is not a finite number");
    return v;
}

}  // namespace

std::vector<double> parse_reals(std::string_view text, std::size_t count, std::string_view what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start), what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.size() != count)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(count) +
                                    " comma-separated values, got " + std::to_string(out.size()));
    return out;
}

Lens3De parse_lens_args(std::string_view lens, const std::optional<std::string>& disk, std::optional<double> tol_deg) {
    const auto l = parse_reals(lens, 4, "--lens");
    if (!(l[3] > 0.0)) throw std::invalid_argument("--lens: radius must be positive");
    std::optional<UnitVec3> normal;
    if (disk) {
        const auto n = parse_reals(*disk, 3, "--disk");
        normal = UnitVec3::try_normalize({n[0], n[1], n[2]});
        if (!normal) throw std::invalid_argument("--disk: normal must be non-zero");
    }
    const double tol = tol_deg.value_or(kDefaultAngularToleranceDeg);
    if (!(tol > 0.0 && tol <= 90.0)) throw std::invalid_argument("--tol: must be in (0, 90]");
    return Lens3De(Ball({l[0], l[1], l[2]}, l[3]), normal, tol);
}

std::pair<int, int> parse_resolution(std::string_view text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string_view::npos) throw std::invalid_argument("--res: expected WxH");
    auto parse_dim = [&](std::string_view s) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v <= 0)
            throw std::invalid_argument("--res: '" + std::string(text) + "' needs positive integer W and H");
        return v;
    };
    return {parse_dim(text.substr(0, x)), parse_dim(text.substr(x + 1))};
}

}  // namespace lens3de
