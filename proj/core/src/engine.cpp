#include "rainbow/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <unordered_set>

#include "rainbow/conflict.hpp"
#include "rainbow/error.hpp"
#include "rainbow/random.hpp"
#include "rainbow/sunflower.hpp"

namespace rainbow {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_distinct_in_ground(std::span<const Vertex> vertices, const GroundSet& ground,
                                std::string_view what) {
    std::vector<bool> seen(ground.size(), false);
    for (Vertex v : vertices) {
        if (!ground.contains(v)) {
            throw ParameterError(std::string{what} + ": vertex " + std::to_string(v) +
                                 " outside the ground set");
        }
        if (seen[v]) {
            throw ParameterError(std::string{what} + ": vertex " + std::to_string(v) + " repeated");
        }
        seen[v] = true;
    }
}

void require_k_fits(const Colouring& colouring, const GroundSet& ground) {
    colouring.require_ground(ground);
    if (colouring.k() > ground.size()) {
        throw ParameterError("k=" + std::to_string(colouring.k()) + " exceeds ground size " +
                             std::to_string(ground.size()));
    }
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::greedy: return "greedy";
        case Algorithm::sample_delete: return "sample-delete";
        case Algorithm::exact: return "exact";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "greedy") return Algorithm::greedy;
    if (name == "sample-delete" || name == "sample_delete") return Algorithm::sample_delete;
    if (name == "exact") return Algorithm::exact;
    throw ParameterError("unknown algorithm '" + std::string{name} + "'");
}

SamplePlan SamplePlan::make(std::size_t n, int k, int h, std::uint64_t seed, double shrink) {
    if (n == 0 || k < 1 || h < 0 || h >= k) {
        throw ParameterError("sample plan needs N >= 1 and 0 <= h < k");
    }
    if (!(shrink > 0.0 && shrink <= 1.0)) {
        throw ParameterError("shrink factor must lie in (0, 1]");
    }
    const double exponent = static_cast<double>(k + h - 1) / static_cast<double>(2 * k - 1);
    double p = shrink * std::pow(static_cast<double>(n), -exponent);
    p = std::clamp(p, std::nextafter(0.0, 1.0), 1.0);
    SamplePlan plan{n, k, h, p, seed, shrink};
    return plan;
}

SamplePlan SamplePlan::with_probability(std::size_t n, int k, int h, std::uint64_t seed, double p) {
    SamplePlan plan = make(n, k, h, seed, 1.0);
    plan.p = p;
    return plan;
}

bool verify_rainbow(const Colouring& colouring, std::span<const Vertex> subset,
                    const Budget& budget) {
    VertexSet sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParameterError("verify_rainbow: subset has repeated vertices");
    }
    if (!sorted.empty() && sorted.back() >= colouring.domain_size()) {
        throw ParameterError("verify_rainbow: vertex outside colouring domain");
    }
    const std::size_t k = colouring.k();
    if (sorted.size() < k) {
        return true;
    }
    budget.require_subsets(binomial(sorted.size(), k), "verify_rainbow");

    std::unordered_set<ColorKey> seen;
    bool rainbow = true;
    std::vector<std::uint32_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<std::uint32_t>(i);
    VertexSet edge(k);
    do {
        for (std::size_t i = 0; i < k; ++i) edge[i] = sorted[idx[i]];
        if (!seen.insert(colouring.evaluate_unchecked(edge)).second) {
            rainbow = false;
            break;
        }
    } while (next_ksubset(idx, sorted.size()));
    return rainbow;
}

RainbowResult greedy_rainbow(const Colouring& colouring, const GroundSet& ground,
                             std::span<const Vertex> order, const Budget& budget) {
    const auto start = Clock::now();
    require_k_fits(colouring, ground);
    require_distinct_in_ground(order, ground, "greedy_rainbow order");

    const std::size_t k = colouring.k();
    VertexSet chosen;
    std::unordered_set<ColorKey> used;
    std::vector<ColorKey> added;
    VertexSet edge(k);

    for (Vertex v : order) {
        // New colours go straight into `used`; a repeat among them or with an
        // older colour shows up as a failed insert, and the batch is rolled back.
        bool ok = true;
        added.clear();
        for_each_ksubset(chosen, k - 1, [&](std::span<const Vertex> rest) {
            if (!ok) return;
            std::copy(rest.begin(), rest.end(), edge.begin());
            edge[k - 1] = v;
            std::sort(edge.begin(), edge.end());
            ColorKey colour = colouring.evaluate_unchecked(edge);
            if (!used.insert(colour).second) {
                ok = false;
                return;
            }
            added.push_back(std::move(colour));
        });
        if (ok) {
            chosen.push_back(v);
        } else {
            for (const ColorKey& key : added) {
                used.erase(key);
            }
        }
    }

    RainbowResult result;
    result.algorithm = Algorithm::greedy;
    result.stats.vertices_kept = chosen.size();
    std::sort(chosen.begin(), chosen.end());
    result.subset = std::move(chosen);
    result.verified = verify_rainbow(colouring, result.subset, budget);
    if (!result.verified) {
        throw InternalError("greedy_rainbow produced a non-rainbow set");
    }
    result.stats.runtime_ms = elapsed_ms(start);
    return result;
}

RainbowResult greedy_rainbow(const Colouring& colouring, const GroundSet& ground,
                             std::uint64_t seed, const Budget& budget) {
    VertexSet order = ground.elements();
    Rng rng{seed};
    shuffle(std::span<Vertex>{order}, rng);
    RainbowResult result = greedy_rainbow(colouring, ground, order, budget);
    result.seed = seed;
    return result;
}

RainbowResult sample_and_delete(const Colouring& colouring, const GroundSet& ground,
                                const SamplePlan& plan, const Budget& budget) {
    const auto start = Clock::now();
    require_k_fits(colouring, ground);
    if (plan.n != ground.size()) {
        throw ParameterError("sample plan was made for N=" + std::to_string(plan.n) +
                             " but the ground set has " + std::to_string(ground.size()));
    }
    if (!(plan.p > 0.0 && plan.p <= 1.0)) {
        throw ParameterError("sampling probability must lie in (0, 1]");
    }

    const ConflictHypergraph hg = build_conflict_hypergraph(colouring, ground, budget);
    const std::size_t n = ground.size();

    // Step 1: independent vertex sampling.
    Rng rng{plan.seed};
    std::vector<bool> kept(n);
    std::uint64_t kept_count = 0;
    for (std::size_t v = 0; v < n; ++v) {
        kept[v] = uniform_unit(rng) < plan.p;
        kept_count += kept[v] ? 1 : 0;
    }

    // Step 2: conflict edges fully inside the sample, weighted by how many
    // generating pairs they carry.
    std::vector<std::size_t> alive;
    std::vector<std::uint64_t> degree(n, 0);
    std::vector<std::vector<std::size_t>> incident(n);
    std::uint64_t surviving_pairs = 0;
    for (std::size_t e = 0; e < hg.edges.size(); ++e) {
        const auto& vertices = hg.edges[e].vertices;
        if (!std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return kept[v]; })) {
            continue;
        }
        alive.push_back(e);
        const std::uint64_t weight = hg.edges[e].pairs.size();
        surviving_pairs += weight;
        for (Vertex v : vertices) {
            degree[v] += weight;
            incident[v].push_back(e);
        }
    }

    // Step 3: delete max-degree vertices until no pair survives.
    std::vector<bool> edge_alive(hg.edges.size(), false);
    for (std::size_t e : alive) edge_alive[e] = true;
    std::set<std::pair<std::uint64_t, Vertex>, std::greater<>> queue;
    auto by_degree = [&](Vertex v) { return std::pair{degree[v], static_cast<Vertex>(~v)}; };
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] > 0) queue.insert(by_degree(static_cast<Vertex>(v)));
    }
    std::uint64_t deleted = 0;
    while (!queue.empty()) {
        const Vertex victim = static_cast<Vertex>(~queue.begin()->second);
        queue.erase(queue.begin());
        kept[victim] = false;
        ++deleted;
        for (std::size_t e : incident[victim]) {
            if (!edge_alive[e]) continue;
            edge_alive[e] = false;
            const std::uint64_t weight = hg.edges[e].pairs.size();
            for (Vertex u : hg.edges[e].vertices) {
                if (u == victim) continue;
                queue.erase(by_degree(u));
                degree[u] -= weight;
                if (degree[u] > 0) queue.insert(by_degree(u));
            }
        }
        degree[victim] = 0;
    }

    RainbowResult result;
    result.algorithm = Algorithm::sample_delete;
    result.seed = plan.seed;
    for (std::size_t v = 0; v < n; ++v) {
        if (kept[v]) result.subset.push_back(static_cast<Vertex>(v));
    }
    result.stats.vertices_kept = kept_count;
    result.stats.conflict_pairs = hg.pair_count();
    result.stats.pairs_destroyed = hg.pair_count() - surviving_pairs;
    result.stats.vertices_deleted = deleted;
    result.verified = verify_rainbow(colouring, result.subset, budget);
    if (!result.verified) {
        throw InternalError("sample_and_delete produced a non-rainbow set");
    }
    result.stats.runtime_ms = elapsed_ms(start);
    return result;
}

namespace {

class ExactSearch {
public:
    ExactSearch(const Colouring& colouring, const GroundSet& ground, const Budget& budget)
        : k_(colouring.k()), edge_colour_(binomial(ground.size(), k_)) {
        const ColourClasses classes = colour_classes(colouring, ground, budget);
        colour_count_ = classes.classes.size();
        std::vector<std::uint64_t> conflict_degree(ground.size(), 0);
        for (std::uint32_t id = 0; id < classes.classes.size(); ++id) {
            const auto& edges = classes.classes[id].edges;
            for (const auto& edge : edges) {
                edge_colour_[colex_rank(edge)] = id;
            }
            for (std::size_t i = 0; i < edges.size(); ++i) {
                for (std::size_t j = i + 1; j < edges.size(); ++j) {
                    for (Vertex v : set_union(edges[i], edges[j])) ++conflict_degree[v];
                }
            }
        }
        order_ = ground.elements();
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            return conflict_degree[a] > conflict_degree[b];
        });
        used_.assign(colour_count_, 0);
    }

    VertexSet run() {
        // Seed the bound with the greedy solution in search order.
        for (Vertex v : order_) {
            if (try_add(v)) current_.push_back(v);
        }
        best_ = current_;
        while (!current_.empty()) {
            remove_last();
        }
        search(0);
        VertexSet out = best_;
        std::sort(out.begin(), out.end());
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void search(std::size_t at) {
        ++nodes_;
        if (current_.size() > best_.size()) {
            best_ = current_;
        }
        if (at == order_.size() || current_.size() + (order_.size() - at) <= best_.size()) {
            return;
        }
        const Vertex v = order_[at];
        if (try_add(v)) {
            current_.push_back(v);
            search(at + 1);
            remove_last();
        }
        search(at + 1);
    }

    // Adds the colours of the new edges {v} ∪ T; on conflict undoes them.
    bool try_add(Vertex v) {
        std::vector<std::uint32_t> added;
        bool ok = true;
        VertexSet edge(k_);
        for_each_ksubset(current_, k_ - 1, [&](std::span<const Vertex> rest) {
            if (!ok) return;
            std::copy(rest.begin(), rest.end(), edge.begin());
            edge[k_ - 1] = v;
            std::sort(edge.begin(), edge.end());
            const std::uint32_t colour = edge_colour_[colex_rank(edge)];
            if (used_[colour] != 0) {
                ok = false;
                return;
            }
            used_[colour] = 1;
            added.push_back(colour);
        });
        if (!ok) {
            for (std::uint32_t c : added) used_[c] = 0;
        }
        return ok;
    }

    void remove_last() {
        const Vertex v = current_.back();
        current_.pop_back();
        VertexSet edge(k_);
        for_each_ksubset(current_, k_ - 1, [&](std::span<const Vertex> rest) {
            std::copy(rest.begin(), rest.end(), edge.begin());
            edge[k_ - 1] = v;
            std::sort(edge.begin(), edge.end());
            used_[edge_colour_[colex_rank(edge)]] = 0;
        });
    }

    std::size_t k_;
    std::vector<std::uint32_t> edge_colour_;
    std::size_t colour_count_ = 0;
    VertexSet order_;
    std::vector<std::uint8_t> used_;
    VertexSet current_;
    VertexSet best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

RainbowResult exact_max_rainbow(const Colouring& colouring, const GroundSet& ground,
                                const Budget& budget) {
    const auto start = Clock::now();
    colouring.require_ground(ground);
    const std::size_t limit = budget.oracle_limit(colouring.k());
    if (ground.size() > limit) {
        throw ResourceError("exact_max_rainbow: N=" + std::to_string(ground.size()) +
                            " exceeds the oracle limit " + std::to_string(limit) +
                            " for k=" + std::to_string(colouring.k()));
    }

    RainbowResult result;
    result.algorithm = Algorithm::exact;
    if (colouring.k() > ground.size()) {
        result.subset = ground.elements();
    } else {
        ExactSearch search{colouring, ground, budget};
        result.subset = search.run();
        result.stats.nodes_explored = search.nodes();
    }
    result.stats.vertices_kept = result.subset.size();
    result.verified = verify_rainbow(colouring, result.subset, budget);
    if (!result.verified) {
        throw InternalError("exact_max_rainbow produced a non-rainbow set");
    }
    result.stats.runtime_ms = elapsed_ms(start);
    return result;
}

}  // namespace rainbow
