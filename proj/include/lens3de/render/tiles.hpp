#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lens3de {

/// Half-open pixel rectangle [x0, x1) x [y0, y1).
struct PixelRect {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    bool empty() const { return x1 <= x0 || y1 <= y0; }
    bool contains(int x, int y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }
    bool operator==(const PixelRect&) const = default;
};

inline constexpr int kTileSize = 64;

struct RenderOptions {
    int threads = 1;
};

/// Fixed tiling of a viewport into kTileSize squares, row-major.
class TileGrid {
public:
    TileGrid(int width, int height, int tile_size = kTileSize);

    int width() const { return width_; }
    int height() const { return height_; }
    int columns() const { return cols_; }
    int rows() const { return rows_; }
    std::size_t size() const { return static_cast<std::size_t>(cols_) * rows_; }
    int tile_size() const { return tile_; }
    PixelRect tile(std::size_t index) const;

private:
    int width_;
    int height_;
    int tile_;
    int cols_;
    int rows_;
};

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Work items are
/// claimed dynamically; callers must write only to item-private outputs.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

/// parallel_for over the tiles of a grid.
void for_each_tile(const TileGrid& grid, int threads, const std::function<void(const PixelRect&)>& fn);

}  // namespace lens3de
