#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rainbow/budget.hpp"
#include "rainbow/colouring.hpp"

namespace rainbow {

enum class Algorithm { greedy, sample_delete, exact };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);  // "greedy", "sample-delete", "exact"

/// Sampling parameters for sample_and_delete.
struct SamplePlan {
    std::size_t n = 0;
    int k = 2;
    int h = 1;
    double p = 1.0;
    std::uint64_t seed = 0;
    double shrink = 0.5;

    /// p = shrink * N^(-(k+h-1)/(2k-1)), clamped into (0, 1].
    static SamplePlan make(std::size_t n, int k, int h, std::uint64_t seed, double shrink = 0.5);

    /// A plan with an explicit keep probability, bypassing the formula.
    static SamplePlan with_probability(std::size_t n, int k, int h, std::uint64_t seed, double p);
};

struct RainbowStats {
    std::uint64_t vertices_kept = 0;        // after sampling (greedy: accepted)
    std::uint64_t conflict_pairs = 0;       // generating pairs before sampling
    std::uint64_t pairs_destroyed = 0;      // pairs killed by sampling
    std::uint64_t vertices_deleted = 0;     // removed by hand afterwards
    std::uint64_t nodes_explored = 0;       // exact search nodes
    double runtime_ms = 0.0;
};

struct RainbowResult {
    VertexSet subset;
    Algorithm algorithm = Algorithm::greedy;
    std::optional<std::uint64_t> seed;
    bool verified = false;
    RainbowStats stats;
};

/// True iff the C(|subset|, k) edges inside `subset` have pairwise distinct
/// colours. Vacuously true when |subset| < k.
bool verify_rainbow(const Colouring& colouring, std::span<const Vertex> subset,
                    const Budget& budget = {});

/// Scans `order` and keeps each vertex whose new edges (with k-1 kept
/// vertices) get colours distinct from each other and from all colours used
/// so far. The result is rainbow and maximal.
RainbowResult greedy_rainbow(const Colouring& colouring, const GroundSet& ground,
                             std::span<const Vertex> order, const Budget& budget = {});

/// Greedy over a seeded uniformly random order of the ground set.
RainbowResult greedy_rainbow(const Colouring& colouring, const GroundSet& ground,
                             std::uint64_t seed, const Budget& budget = {});

/// Keep each vertex with probability plan.p, then while a conflict pair
/// survives inside the kept set delete the kept vertex lying in the most
/// surviving pairs (smallest id on ties).
RainbowResult sample_and_delete(const Colouring& colouring, const GroundSet& ground,
                                const SamplePlan& plan, const Budget& budget = {});

/// Maximum-cardinality rainbow subset by branch and bound. Ground sets above
/// Budget::oracle_limit(k) raise ResourceError.
RainbowResult exact_max_rainbow(const Colouring& colouring, const GroundSet& ground,
                                const Budget& budget = {});

}  // namespace rainbow
