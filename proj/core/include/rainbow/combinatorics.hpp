#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;

/// Sorted ascending list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

/// Dense vertex ids 0..N-1.
class GroundSet {
public:
    explicit GroundSet(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    bool contains(Vertex v) const noexcept { return v < size_; }
    VertexSet elements() const;

private:
    std::size_t size_;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Advances `subset` (sorted indices into a pool of size n) to the next
/// k-subset in lexicographic order. Returns false after the last one.
bool next_ksubset(std::span<std::uint32_t> subset, std::size_t n);

/// Lexicographic stream of the k-subsets of {0..n-1}.
class KSubsets {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = VertexSet;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexSet*;
        using reference = const VertexSet&;

        iterator() = default;
        iterator(std::size_t n, std::size_t k);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& other) const { return done_ == other.done_; }

    private:
        std::size_t n_ = 0;
        VertexSet current_;
        bool done_ = true;
    };

    KSubsets(std::size_t n, std::size_t k) : n_(n), k_(k) {}

    iterator begin() const { return iterator{n_, k_}; }
    iterator end() const { return iterator{}; }
    std::uint64_t size() const { return binomial(n_, k_); }

private:
    std::size_t n_;
    std::size_t k_;
};

/// All k-subsets of the ground set in lexicographic order. Throws
/// ParameterError unless 1 <= k <= N.
KSubsets enumerate_ksubsets(const GroundSet& ground, std::size_t k);

/// Calls fn(std::span<const Vertex>) for each k-subset of `pool` (pool order
/// is preserved inside each subset). k == 0 yields the empty subset once.
template <typename Fn>
void for_each_ksubset(std::span<const Vertex> pool, std::size_t k, Fn&& fn) {
    if (k > pool.size()) {
        return;
    }
    std::vector<std::uint32_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = static_cast<std::uint32_t>(i);
    }
    VertexSet subset(k);
    do {
        for (std::size_t i = 0; i < k; ++i) {
            subset[i] = pool[idx[i]];
        }
        fn(std::span<const Vertex>{subset});
    } while (next_ksubset(idx, pool.size()));
}

/// Colex rank of a sorted subset: sum_i C(v_i, i+1). Dense in [0, C(N, k)).
std::uint64_t colex_rank(std::span<const Vertex> sorted_subset);

/// True iff `sub` is a subset of `super` (both sorted).
bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super);

/// Sorted union of two sorted sets.
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);

/// Sorted intersection of two sorted sets.
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace rainbow
