#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/engine.hpp"

namespace rainbow {

struct BenchRecord {
    std::size_t n = 0;
    int k = 2;
    int h = 1;
    int lambda = 1;
    std::string colouring;
    Algorithm algorithm = Algorithm::greedy;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t rainbow_size = 0;
    double runtime_ms = 0.0;
};

inline constexpr std::string_view bench_csv_header =
    "N,k,h,lambda,colouring,algorithm,trial,seed,rainbow_size,runtime_ms";

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);
std::vector<BenchRecord> read_bench_csv(std::istream& in);

/// Least-squares fit of log(mean rainbow size) against log(N).
struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;   // 95% Student-t interval on the slope
    double ci_high = 0.0;
    std::size_t points = 0;
};

/// Needs records of one colouring/algorithm with >= 4 distinct N and >= 3
/// trials per N; otherwise ParameterError.
ExponentFit estimate_exponent(std::span<const BenchRecord> records);

/// Growth exponent (k-h)/(2k-1) of the rainbow size in N.
double predicted_exponent(int k, int h);

/// Median rainbow size per N, ascending in N.
std::vector<std::pair<std::size_t, double>> median_sizes(std::span<const BenchRecord> records);

}  // namespace rainbow
