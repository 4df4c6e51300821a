#include "rainbow/conflict.hpp"

#include <algorithm>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

std::uint64_t ConflictHypergraph::pair_count() const {
    std::uint64_t total = 0;
    for (const auto& edge : edges) {
        total += edge.pairs.size();
    }
    return total;
}

bool ConflictHypergraph::is_independent(std::span<const Vertex> sorted_subset) const {
    return std::none_of(edges.begin(), edges.end(), [&](const ConflictEdge& edge) {
        return is_subset(edge.vertices, sorted_subset);
    });
}

ConflictHypergraph build_conflict_hypergraph(const ColourClasses& classes, const GroundSet& ground,
                                             const Budget& budget) {
    std::uint64_t total_pairs = 0;
    for (const auto& cls : classes.classes) {
        total_pairs += binomial(cls.edges.size(), 2);
    }
    budget.require_conflict_pairs(total_pairs, "build_conflict_hypergraph");

    ConflictHypergraph hg;
    hg.ground_size = ground.size();
    hg.k = classes.k;

    std::map<VertexSet, std::vector<ConflictPair>> by_union;
    for (const auto& cls : classes.classes) {
        if (cls.edges.size() < 2) {
            continue;
        }
        const auto base = static_cast<std::uint32_t>(hg.kedges.size());
        hg.kedges.insert(hg.kedges.end(), cls.edges.begin(), cls.edges.end());
        for (std::size_t i = 0; i < cls.edges.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.edges.size(); ++j) {
                by_union[set_union(cls.edges[i], cls.edges[j])].push_back(
                    ConflictPair{base + static_cast<std::uint32_t>(i),
                                 base + static_cast<std::uint32_t>(j)});
            }
        }
    }
    hg.edges.reserve(by_union.size());
    for (auto& [vertices, pairs] : by_union) {
        hg.edges.push_back(ConflictEdge{vertices, std::move(pairs)});
    }
    return hg;
}

ConflictHypergraph build_conflict_hypergraph(const Colouring& colouring, const GroundSet& ground,
                                             const Budget& budget) {
    return build_conflict_hypergraph(colour_classes(colouring, ground, budget), ground, budget);
}

namespace {

// Distinct representatives for up to four small sets.
bool has_distinct_representatives(std::span<const VertexSet* const> sets, std::size_t at,
                                  std::vector<Vertex>& chosen) {
    if (at == sets.size()) {
        return true;
    }
    for (Vertex v : *sets[at]) {
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) {
            continue;
        }
        chosen.push_back(v);
        if (has_distinct_representatives(sets, at + 1, chosen)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

bool cycle_realizable(std::initializer_list<const VertexSet*> intersections) {
    std::vector<const VertexSet*> sets(intersections);
    std::vector<Vertex> chosen;
    return has_distinct_representatives(sets, 0, chosen);
}

}  // namespace

std::map<int, std::uint64_t> count_short_cycles(const ConflictHypergraph& hg, int max_len,
                                                const Budget& budget) {
    if (max_len < 2 || max_len > 4) {
        throw ParameterError("cycle length limit must be in [2, 4]");
    }
    const std::size_t m = hg.edges.size();
    budget.require_diagnostic_edges(m, "count_short_cycles");

    std::map<int, std::uint64_t> counts;
    for (int len = 2; len <= max_len; ++len) {
        counts[len] = 0;
    }

    // Pairwise intersections of adjacent edges.
    std::vector<std::vector<std::size_t>> neighbours(m);
    std::map<std::pair<std::size_t, std::size_t>, VertexSet> meet;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            VertexSet common = set_intersection(hg.edges[i].vertices, hg.edges[j].vertices);
            if (common.empty()) {
                continue;
            }
            if (common.size() >= 2) {
                ++counts[2];
            }
            neighbours[i].push_back(j);
            neighbours[j].push_back(i);
            meet.emplace(std::pair{i, j}, std::move(common));
        }
    }
    auto shared = [&](std::size_t a, std::size_t b) -> const VertexSet* {
        auto it = meet.find(a < b ? std::pair{a, b} : std::pair{b, a});
        return it == meet.end() ? nullptr : &it->second;
    };

    if (max_len >= 3) {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b : neighbours[a]) {
                if (b <= a) continue;
                for (std::size_t c : neighbours[b]) {
                    if (c <= b) continue;
                    const VertexSet* ca = shared(c, a);
                    if (ca != nullptr && cycle_realizable({shared(a, b), shared(b, c), ca})) {
                        ++counts[3];
                    }
                }
            }
        }
    }

    if (max_len >= 4) {
        // a is the smallest edge of the cycle; b < d fixes the reflection.
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b : neighbours[a]) {
                if (b <= a) continue;
                for (std::size_t d : neighbours[a]) {
                    if (d <= b) continue;
                    for (std::size_t c : neighbours[b]) {
                        if (c <= a || c == d) continue;
                        const VertexSet* cd = shared(c, d);
                        if (cd != nullptr &&
                            cycle_realizable({shared(a, b), shared(b, c), cd, shared(d, a)})) {
                            ++counts[4];
                        }
                    }
                }
            }
        }
    }
    return counts;
}

}  // namespace rainbow
