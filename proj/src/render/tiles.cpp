#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "lens3de/render/tiles.hpp"

namespace lens3de {

TileGrid::TileGrid(int width, int height, int tile_size)
    : width_(width), height_(height), tile_(tile_size) {
    if (width <= 0 || height <= 0 || tile_size <= 0) throw std::invalid_argument("invalid tile grid");
    cols_ = (width + tile_size - 1) / tile_size;
    rows_ = (height + tile_size - 1) / tile_size;
}

PixelRect TileGrid::tile(std::size_t index) const {
    const int tx = static_cast<int>(index % cols_);
    const int ty = static_cast<int>(index / cols_);
    return {tx * tile_, ty * tile_, std::min(width_, (tx + 1) * tile_), std::min(height_, (ty + 1) * tile_)};
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

void for_each_tile(const TileGrid& grid, int threads, const std::function<void(const PixelRect&)>& fn) {
    parallel_for(grid.size(), threads, [&](std::size_t i) { fn(grid.tile(i)); });
}

}  // namespace lens3de
