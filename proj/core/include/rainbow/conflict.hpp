#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rainbow/budget.hpp"
#include "rainbow/colouring.hpp"
#include "rainbow/sunflower.hpp"

namespace rainbow {

/// Two distinct, equally coloured k-edges, as indices into
/// ConflictHypergraph::kedges.
struct ConflictPair {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
};

/// A conflict edge A ∪ B (k+1..2k vertices) and every pair generating it.
struct ConflictEdge {
    VertexSet vertices;
    std::vector<ConflictPair> pairs;
};

/// Hypergraph whose independent sets are exactly the rainbow sets.
///
/// Edges are stored as the unions A ∪ B rather than as all 2k-supersets;
/// both formulations have the same independent sets.
struct ConflictHypergraph {
    std::size_t ground_size = 0;
    std::size_t k = 0;
    std::vector<VertexSet> kedges;     // every k-edge taking part in some pair
    std::vector<ConflictEdge> edges;   // deduplicated, lexicographic by vertex set

    std::uint64_t pair_count() const;

    /// True iff no conflict edge lies inside `sorted_subset`.
    bool is_independent(std::span<const Vertex> sorted_subset) const;
};

ConflictHypergraph build_conflict_hypergraph(const Colouring& colouring, const GroundSet& ground,
                                             const Budget& budget = {});

ConflictHypergraph build_conflict_hypergraph(const ColourClasses& classes, const GroundSet& ground,
                                             const Budget& budget = {});

/// Counts Berge cycles of length 2..max_len (max_len <= 4) among the
/// deduplicated conflict edges. A cycle of length l is l distinct edges in
/// cyclic order with l distinct vertices v_i ∈ e_i ∩ e_{i+1}; each cyclic
/// edge sequence is counted once up to rotation and reflection. For l = 2
/// this is the number of edge pairs sharing at least two vertices.
std::map<int, std::uint64_t> count_short_cycles(const ConflictHypergraph& hg, int max_len = 4,
                                                const Budget& budget = {});

}  // namespace rainbow
