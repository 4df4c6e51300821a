#pragma once

#include <cstddef>
#include <vector>

#include "rainbow/budget.hpp"
#include "rainbow/colouring.hpp"

namespace rainbow {

struct ColourClass {
    ColorKey colour;
    std::vector<VertexSet> edges;  // lexicographic order
};

/// Partition of all k-subsets of a ground set by colour. Classes are sorted
/// by colour key bytes.
struct ColourClasses {
    std::size_t k = 0;
    std::vector<ColourClass> classes;

    std::size_t edge_count() const;
    const ColourClass* find(const ColorKey& colour) const;
};

ColourClasses colour_classes(const Colouring& colouring, const GroundSet& ground,
                             const Budget& budget = {});

/// Largest monochromatic sunflower with a core of exactly h vertices.
struct SunflowerReport {
    std::size_t h = 0;
    VertexSet core;
    ColorKey colour;
    std::size_t petals = 0;
    std::vector<VertexSet> witness_edges;
};

/// Maximizes |{e : core ⊆ e, colour(e) = c}| over h-subsets `core` and
/// colours c. Ties go to the smaller colour key, then the lexicographically
/// smaller core. With fewer than k vertices the report is empty (0 petals).
SunflowerReport max_monochromatic_sunflower(const Colouring& colouring, const GroundSet& ground,
                                            std::size_t h, const Budget& budget = {});

SunflowerReport max_monochromatic_sunflower(const ColourClasses& classes, std::size_t h);

struct LambdaVerdict {
    bool holds = false;
    SunflowerReport report;
};

/// Audits the colouring's declared lambda at its declared h.
LambdaVerdict validate_lambda(const Colouring& colouring, const GroundSet& ground,
                              const Budget& budget = {});

}  // namespace rainbow
