#include <fstream>
#include <stdexcept>

#include "lens3de/io/image.hpp"

namespace lens3de {

FrameImage::FrameImage(int w, int h) : width(w), height(h) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("image dimensions must be positive");
    pixels.assign(4 * static_cast<std::size_t>(w) * h, 0);
}

std::string encode_ppm(const FrameImage& img, Rgb8 background) {
    if (img.width <= 0 || img.height <= 0) throw std::invalid_argument("cannot encode an empty image");
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    if (img.pixels.size() != 4 * n) throw std::invalid_argument("image pixel buffer size mismatch");

    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    const std::size_t header = out.size();
    out.resize(header + 3 * n);
    const std::uint8_t bg[3] = {background.r, background.g, background.b};
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* px = &img.pixels[4 * i];
        const unsigned a = px[3];
        for (int c = 0; c < 3; ++c) {
            const unsigned v = (px[c] * a + bg[c] * (255u - a) + 127u) / 255u;
            out[header + 3 * i + c] = static_cast<char>(v);
        }
    }
    return out;
}

void write_image(const FrameImage& img, const std::filesystem::path& path, Rgb8 background) {
    const std::string bytes = encode_ppm(img, background);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write image '" + path.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing image '" + path.string() + "'");
}

}  // namespace lens3de
