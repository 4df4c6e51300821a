#include "rainbow/sunflower.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "rainbow/error.hpp"

namespace rainbow {

void Budget::require_subsets(std::uint64_t count, std::string_view what) const {
    if (count > max_subsets) {
        throw ResourceError(std::string{what} + " needs " + std::to_string(count) +
                            " subsets, over the enumeration budget max_subsets=" +
                            std::to_string(max_subsets));
    }
}

void Budget::require_conflict_pairs(std::uint64_t count, std::string_view what) const {
    if (count > max_conflict_pairs) {
        throw ResourceError(std::string{what} + " needs " + std::to_string(count) +
                            " conflict pairs, over the budget max_conflict_pairs=" +
                            std::to_string(max_conflict_pairs));
    }
}

void Budget::require_diagnostic_edges(std::uint64_t count, std::string_view what) const {
    if (count > max_diagnostic_edges) {
        throw ResourceError(std::string{what} + " has " + std::to_string(count) +
                            " edges, over the diagnostic budget max_diagnostic_edges=" +
                            std::to_string(max_diagnostic_edges));
    }
}

std::size_t ColourClasses::edge_count() const {
    std::size_t total = 0;
    for (const auto& cls : classes) {
        total += cls.edges.size();
    }
    return total;
}

const ColourClass* ColourClasses::find(const ColorKey& colour) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), colour,
                               [](const ColourClass& cls, const ColorKey& key) { return cls.colour < key; });
    if (it == classes.end() || it->colour != colour) {
        return nullptr;
    }
    return &*it;
}

ColourClasses colour_classes(const Colouring& colouring, const GroundSet& ground,
                             const Budget& budget) {
    colouring.require_ground(ground);
    const std::size_t k = colouring.k();
    ColourClasses out;
    out.k = k;
    if (k > ground.size()) {
        return out;
    }
    budget.require_subsets(binomial(ground.size(), k), "colour_classes");

    std::unordered_map<ColorKey, std::size_t> index;
    for (const VertexSet& edge : enumerate_ksubsets(ground, k)) {
        ColorKey colour = colouring.evaluate_unchecked(edge);
        auto [it, inserted] = index.try_emplace(colour, out.classes.size());
        if (inserted) {
            out.classes.push_back(ColourClass{std::move(colour), {}});
        }
        out.classes[it->second].edges.push_back(edge);
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const ColourClass& a, const ColourClass& b) { return a.colour < b.colour; });
    return out;
}

SunflowerReport max_monochromatic_sunflower(const ColourClasses& classes, std::size_t h) {
    if (h >= classes.k) {
        throw ParameterError("core size h must satisfy 0 <= h < k");
    }
    SunflowerReport best;
    best.h = h;
    const ColourClass* best_class = nullptr;

    for (const ColourClass& cls : classes.classes) {
        // Petal counts of every core appearing in this class.
        std::unordered_map<std::uint64_t, std::pair<VertexSet, std::size_t>> cores;
        for (const VertexSet& edge : cls.edges) {
            for_each_ksubset(edge, h, [&](std::span<const Vertex> core) {
                auto& slot = cores[colex_rank(core)];
                if (slot.second == 0) {
                    slot.first.assign(core.begin(), core.end());
                }
                ++slot.second;
            });
        }
        for (auto& [rank, entry] : cores) {
            auto& [core, petals] = entry;
            const bool better = petals > best.petals ||
                                (petals == best.petals && best_class == &cls && core < best.core);
            if (better) {
                best.core = core;
                best.petals = petals;
                best_class = &cls;
            }
        }
    }

    if (best_class != nullptr) {
        best.colour = best_class->colour;
        for (const VertexSet& edge : best_class->edges) {
            if (is_subset(best.core, edge)) {
                best.witness_edges.push_back(edge);
            }
        }
    }
    return best;
}

SunflowerReport max_monochromatic_sunflower(const Colouring& colouring, const GroundSet& ground,
                                            std::size_t h, const Budget& budget) {
    if (h >= colouring.k()) {
        throw ParameterError("core size h must satisfy 0 <= h < k");
    }
    return max_monochromatic_sunflower(colour_classes(colouring, ground, budget), h);
}

LambdaVerdict validate_lambda(const Colouring& colouring, const GroundSet& ground,
                              const Budget& budget) {
    LambdaVerdict verdict;
    verdict.report = max_monochromatic_sunflower(colouring, ground,
                                                 static_cast<std::size_t>(colouring.spec().h), budget);
    verdict.holds = verdict.report.petals <= static_cast<std::size_t>(colouring.spec().lambda);
    return verdict;
}

}  // namespace rainbow
