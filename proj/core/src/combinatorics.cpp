#include "rainbow/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

GroundSet::GroundSet(std::size_t size) : size_(size) {
    if (size == 0) {
        throw ParameterError("ground set must contain at least one vertex");
    }
    if (size > std::numeric_limits<Vertex>::max()) {
        throw ParameterError("ground set too large for 32-bit vertex ids");
    }
}

VertexSet GroundSet::elements() const {
    VertexSet out(size_);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(result);
}

bool next_ksubset(std::span<std::uint32_t> subset, std::size_t n) {
    const std::size_t k = subset.size();
    if (k == 0) {
        return false;
    }
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (subset[i] < n - k + i) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

KSubsets::iterator::iterator(std::size_t n, std::size_t k) : n_(n), current_(k), done_(k > n) {
    std::iota(current_.begin(), current_.end(), Vertex{0});
}

KSubsets::iterator& KSubsets::iterator::operator++() {
    if (!next_ksubset(current_, n_)) {
        done_ = true;
    }
    return *this;
}

KSubsets enumerate_ksubsets(const GroundSet& ground, std::size_t k) {
    if (k < 1 || k > ground.size()) {
        throw ParameterError("k must satisfy 1 <= k <= N (k=" + std::to_string(k) +
                             ", N=" + std::to_string(ground.size()) + ")");
    }
    return KSubsets{ground.size(), k};
}

std::uint64_t colex_rank(std::span<const Vertex> sorted_subset) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted_subset.size(); ++i) {
        rank += binomial(sorted_subset[i], i + 1);
    }
    return rank;
}

bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace rainbow
