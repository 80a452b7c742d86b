#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lens3de/io/errors.hpp"

namespace lens3de {

struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
};

/// Row-major RGBA8, row 0 at the top.
struct FrameImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // 4 * width * height

    FrameImage() = default;
    FrameImage(int w, int h);

    std::uint8_t* at(int x, int y) { return &pixels[4 * (static_cast<std::size_t>(y) * width + x)]; }
    const std::uint8_t* at(int x, int y) const {
        return &pixels[4 * (static_cast<std::size_t>(y) * width + x)];
    }

    bool operator==(const FrameImage&) const = default;
};

/// Binary PPM (P6, maxval 255). Alpha is composited over `background`.
/// Throws std::invalid_argument for empty or inconsistent images.
std::string encode_ppm(const FrameImage& img, Rgb8 background = {});

/// Writes encode_ppm() bytes; throws IoError on failure.
void write_image(const FrameImage& img, const std::filesystem::path& path, Rgb8 background = {});

}  // namespace lens3de
