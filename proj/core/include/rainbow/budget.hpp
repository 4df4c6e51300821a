#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace rainbow {

/// Resource limits for exhaustive operations. Exceeding one raises
/// ResourceError naming the limit; nothing falls back to sampling.
struct Budget {
    std::uint64_t max_subsets = 5'000'000;         // k-subsets enumerated per call
    std::uint64_t max_conflict_pairs = 5'000'000;  // monochromatic pairs materialized
    std::uint64_t max_diagnostic_edges = 2'000;    // conflict edges scanned for cycles
    std::size_t oracle_max_n_small_k = 20;         // exact search limit for k <= 2
    std::size_t oracle_max_n_large_k = 14;         // exact search limit for k >= 3

    void require_subsets(std::uint64_t count, std::string_view what) const;
    void require_conflict_pairs(std::uint64_t count, std::string_view what) const;
    void require_diagnostic_edges(std::uint64_t count, std::string_view what) const;
    std::size_t oracle_limit(std::size_t k) const {
        return k <= 2 ? oracle_max_n_small_k : oracle_max_n_large_k;
    }
};

}  // namespace rainbow
