#pragma once

#include <functional>
#include <vector>

#include "rainbow/catalog.hpp"
#include "rainbow/scaling.hpp"

namespace rainbow {

struct BenchConfig {
    std::vector<std::size_t> grid;
    ColouringKind colouring = ColouringKind::sidon;
    std::vector<Algorithm> algorithms{Algorithm::greedy};
    std::size_t trials = 5;
    std::uint64_t master_seed = 0;
    std::size_t workers = 1;
    double shrink = 0.5;
    std::size_t dimension = 2;  // point colourings
    CatalogOptions catalog;

    // Report thresholds.
    double slope_min = 0.28;
    double slope_max = 0.40;
    double median_factor = 0.8;  // median >= factor * N^(predicted exponent)
};

/// Instance used at grid point N: {1..N} for integer colourings, seeded
/// general-position points (coord bound max(4N^2, 16)) otherwise.
Instance bench_instance(const BenchConfig& config, std::size_t n);

/// Runs every (N, algorithm, trial) job. Trial t uses seed
/// trial_seed(master_seed, t). Records come back ordered by grid position,
/// algorithm and trial whatever the worker count. `on_record` is called
/// (serialized) as jobs finish.
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record = {});

struct AlgorithmReport {
    Algorithm algorithm = Algorithm::greedy;
    std::optional<ExponentFit> fit;  // empty when the grid is too small
    std::string fit_error;
    double predicted = 0.0;
    std::vector<std::pair<std::size_t, double>> medians;
    bool slope_pass = false;
    bool median_pass = false;
};

std::vector<AlgorithmReport> summarize_bench(const BenchConfig& config, std::span<const BenchRecord> records);
Json bench_report_to_json(std::span<const AlgorithmReport> reports);

}  // namespace rainbow
