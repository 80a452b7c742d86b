#pragma once

#include <cstddef>

#include <nlohmann/json.hpp>

#include "lens3de/io/synthetic.hpp"
#include "lens3de/render/frame.hpp"

namespace lens3de {

inline constexpr double kFrameBudgetMs = 2000.0;

struct BenchOptions {
    SyntheticSpec spec;
    int width = 800;
    int height = 600;
    int frames = 10;
    int threads = 4;
    double budget_ms = kFrameBudgetMs;
};

struct BenchReport {
    StageTimings median;  // per-stage medians
    double median_total_ms = 0.0;
    int frames = 0;
    int width = 0;
    int height = 0;
    int threads = 0;
    std::size_t triangles = 0;
    std::size_t lines = 0;
    std::size_t selected_lines = 0;
    double budget_ms = kFrameBudgetMs;

    bool within_budget() const { return median_total_ms <= budget_ms; }
    nlohmann::json to_json() const;
};

/// Renders `frames` frames of the synthetic scene with its initial lens.
/// Throws std::invalid_argument when frames < 1.
BenchReport run_bench(const BenchOptions& opts);

}  // namespace lens3de
