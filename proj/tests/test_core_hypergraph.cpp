#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/algebra.hpp"
#include "rainbow/conflict.hpp"
#include "rainbow/error.hpp"
#include "rainbow/geometry.hpp"
#include "rainbow/sunflower.hpp"

using namespace rainbow;

namespace {

Colouring sidon_123() { return sidon_colouring(integers_range(3)); }

std::vector<VertexSet> collect(const KSubsets& subsets) {
    std::vector<VertexSet> out;
    for (const auto& s : subsets) out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("enumerate_ksubsets counts and order") {
    auto four = collect(enumerate_ksubsets(GroundSet{4}, 2));
    REQUIRE(four.size() == 6);
    CHECK(four.front() == VertexSet{0, 1});
    CHECK(four.back() == VertexSet{2, 3});
    CHECK(std::is_sorted(four.begin(), four.end()));

    auto full = collect(enumerate_ksubsets(GroundSet{5}, 5));
    REQUIRE(full.size() == 1);
    CHECK(full[0] == VertexSet{0, 1, 2, 3, 4});

    CHECK(collect(enumerate_ksubsets(GroundSet{5}, 3)).size() == 10);
    CHECK(enumerate_ksubsets(GroundSet{5}, 3).size() == 10);

    CHECK_THROWS_AS(enumerate_ksubsets(GroundSet{4}, 0), ParameterError);
    CHECK_THROWS_AS(enumerate_ksubsets(GroundSet{4}, 5), ParameterError);
    CHECK_THROWS_AS(GroundSet{0}, ParameterError);
}

TEST_CASE("enumeration matches the recursive oracle") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            CHECK(collect(enumerate_ksubsets(GroundSet{n}, k)) == oracle::ksubsets(oracle::iota_set(n), k));
}

TEST_CASE("binomial and colex rank") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
    std::set<std::uint64_t> ranks;
    for (const auto& s : enumerate_ksubsets(GroundSet{7}, 3)) ranks.insert(colex_rank(s));
    CHECK(ranks.size() == 35);
    CHECK(*ranks.rbegin() == 34);
}

TEST_CASE("colour_classes") {
    CHECK(colour_classes(injective_colouring(5, {2, 1, 1}), GroundSet{5}).classes.size() == 10);

    auto constant = colour_classes(constant_colouring(4, {2, 1, 1}), GroundSet{4});
    REQUIRE(constant.classes.size() == 1);
    CHECK(constant.classes[0].edges.size() == 6);

    auto sidon = colour_classes(sidon_123(), GroundSet{3});
    REQUIRE(sidon.classes.size() == 2);
    const auto* one = sidon.find(encode_integer(1));
    const auto* two = sidon.find(encode_integer(2));
    REQUIRE(one);
    REQUIRE(two);
    CHECK(one->edges == std::vector<VertexSet>{{0, 1}, {1, 2}});
    CHECK(two->edges == std::vector<VertexSet>{{0, 2}});
    CHECK(sidon.edge_count() == 3);

    Budget tiny;
    tiny.max_subsets = 5;
    CHECK_THROWS_AS(colour_classes(constant_colouring(4, {2, 1, 1}), GroundSet{4}, tiny), ResourceError);
}

TEST_CASE("max_monochromatic_sunflower examples") {
    CHECK(max_monochromatic_sunflower(injective_colouring(7, {2, 1, 1}), GroundSet{7}, 1).petals == 1);
    CHECK(max_monochromatic_sunflower(injective_colouring(7, {3, 2, 1}), GroundSet{7}, 2).petals == 1);

    auto constant = max_monochromatic_sunflower(constant_colouring(5, {2, 1, 1}), GroundSet{5}, 1);
    CHECK(constant.petals == 4);
    CHECK(constant.core == VertexSet{0});
    CHECK(constant.witness_edges.size() == 4);

    auto sidon = max_monochromatic_sunflower(sidon_123(), GroundSet{3}, 1);
    CHECK(sidon.petals == 2);
    CHECK(sidon.core == VertexSet{1});
    CHECK(sidon.colour == encode_integer(1));
    CHECK(sidon.witness_edges == std::vector<VertexSet>{{0, 1}, {1, 2}});

    // h = 0: largest colour class.
    CHECK(max_monochromatic_sunflower(sidon_123(), GroundSet{3}, 0).petals == 2);
    CHECK(max_monochromatic_sunflower(constant_colouring(5, {3, 1, 1}), GroundSet{2}, 1).petals == 0);
}

TEST_CASE("sunflower audit agrees with the pairwise oracle") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        const int k = 2 + static_cast<int>(seed % 2);
        const std::size_t n = 4 + seed % 5;
        const auto c = oracle::table_colouring(n, {k, 1, 1}, 3 + seed % 4, seed);
        for (int h = 0; h < k; ++h) {
            const auto report = max_monochromatic_sunflower(c, GroundSet{n}, static_cast<std::size_t>(h));
            CHECK(report.petals == oracle::max_petals(c, n, static_cast<std::size_t>(h)));
            for (const auto& e : report.witness_edges) {
                CHECK(c(e) == report.colour);
                CHECK(is_subset(report.core, e));
            }
        }
    }
}

TEST_CASE("validate_lambda examples") {
    const auto sidon10 = validate_lambda(sidon_colouring(integers_range(10)), GroundSet{10});
    CHECK(sidon10.holds);
    CHECK(sidon10.report.petals == oracle::max_petals(sidon_colouring(integers_range(10)), 10, 1));
    CHECK(sidon10.report.petals <= 2);

    const auto constant = validate_lambda(constant_colouring(5, {2, 1, 1}), GroundSet{5});
    CHECK_FALSE(constant.holds);
    CHECK(constant.report.petals == 4);

    CHECK(validate_lambda(injective_colouring(6, {2, 1, 1}), GroundSet{6}).holds);
}

TEST_CASE("build_conflict_hypergraph examples") {
    const auto inj = build_conflict_hypergraph(injective_colouring(6, {2, 1, 1}), GroundSet{6});
    CHECK(inj.edges.empty());
    CHECK(inj.pair_count() == 0);

    const auto constant = build_conflict_hypergraph(constant_colouring(3, {2, 1, 1}), GroundSet{3});
    REQUIRE(constant.edges.size() == 1);
    CHECK(constant.edges[0].vertices == VertexSet{0, 1, 2});
    CHECK(constant.edges[0].pairs.size() == 3);
    CHECK(constant.pair_count() == 3);

    const auto sidon = build_conflict_hypergraph(sidon_123(), GroundSet{3});
    REQUIRE(sidon.edges.size() == 1);
    CHECK(sidon.edges[0].vertices == VertexSet{0, 1, 2});
    REQUIRE(sidon.edges[0].pairs.size() == 1);
    const auto& p = sidon.edges[0].pairs[0];
    CHECK(sidon.kedges[p.a] == VertexSet{0, 1});
    CHECK(sidon.kedges[p.b] == VertexSet{1, 2});

    Budget tiny;
    tiny.max_conflict_pairs = 2;
    CHECK_THROWS_AS(build_conflict_hypergraph(constant_colouring(3, {2, 1, 1}), GroundSet{3}, tiny),
                    ResourceError);
}

TEST_CASE("conflict edges come from equally coloured pairs") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 7;
        const auto c = oracle::table_colouring(n, {3, 2, 1}, 6, seed);
        const auto hg = build_conflict_hypergraph(c, GroundSet{n});
        std::uint64_t pairs = 0;
        for (const auto& e : hg.edges) {
            CHECK(e.vertices.size() >= 4);
            CHECK(e.vertices.size() <= 6);
            for (const auto& p : e.pairs) {
                CHECK(c(hg.kedges[p.a]) == c(hg.kedges[p.b]));
                CHECK(set_union(hg.kedges[p.a], hg.kedges[p.b]) == e.vertices);
                ++pairs;
            }
        }
        // Oracle: unordered pairs of equally coloured edges.
        const auto edges = oracle::ksubsets(oracle::iota_set(n), 3);
        std::uint64_t expected = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (c(edges[i]) == c(edges[j])) ++expected;
        CHECK(pairs == expected);
        CHECK(hg.pair_count() == expected);
    }
}

TEST_CASE("independent sets are exactly the rainbow sets") {
    for (std::uint32_t seed = 0; seed < 6; ++seed) {
        const std::size_t n = 8;
        const int k = 2 + static_cast<int>(seed % 2);
        const auto c = oracle::table_colouring(n, {k, 1, 1}, 10, seed + 100);
        const auto hg = build_conflict_hypergraph(c, GroundSet{n});
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto s = oracle::from_mask(mask);
            const bool rainbow = oracle::is_rainbow(c, s);
            CHECK(hg.is_independent(s) == rainbow);
            CHECK(oracle::independent(hg, s) == rainbow);
        }
    }
}

TEST_CASE("generating pairs respect the sunflower bound") {
    // |pairs| <= C(N,k) * C(k,h) * lambda * C(N-k, k-h) whenever lambda holds.
    auto bound = [](std::uint64_t n, std::uint64_t k, std::uint64_t h, std::uint64_t lambda) {
        return binomial(n, k) * binomial(k, h) * lambda * binomial(n - k, k - h);
    };
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto inst = integers_random(20, 400, seed);
        const auto c = sidon_colouring(inst);
        REQUIRE(validate_lambda(c, GroundSet{20}).holds);
        CHECK(build_conflict_hypergraph(c, GroundSet{20}).pair_count() <= bound(20, 2, 1, 2));
    }
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto pts = generate_general_position(9, 2, seed, 400);
        const auto c = circumradius_colouring(pts);
        REQUIRE(validate_lambda(c, GroundSet{9}).holds);
        CHECK(build_conflict_hypergraph(c, GroundSet{9}).pair_count() <= bound(9, 3, 2, 2));
    }
}

TEST_CASE("count_short_cycles") {
    ConflictHypergraph empty;
    empty.ground_size = 5;
    empty.k = 2;
    const auto none = count_short_cycles(empty, 4);
    for (int l = 2; l <= 4; ++l) CHECK(none.at(l) == 0);

    ConflictHypergraph two;
    two.ground_size = 5;
    two.k = 2;
    two.edges.push_back({{0, 1, 2}, {}});
    two.edges.push_back({{1, 2, 3}, {}});
    CHECK(count_short_cycles(two, 2).at(2) == 1);

    const auto constant = build_conflict_hypergraph(constant_colouring(4, {2, 1, 1}), GroundSet{4});
    const auto got = count_short_cycles(constant, 4);
    const auto expected = oracle::cycle_counts(constant, 4);
    for (int l = 2; l <= 4; ++l) CHECK(got.at(l) == expected.at(l));

    for (std::uint32_t seed = 0; seed < 6; ++seed) {
        const auto c = oracle::table_colouring(6, {2, 1, 1}, 8, seed + 7);
        const auto hg = build_conflict_hypergraph(c, GroundSet{6});
        if (hg.edges.size() > 14) continue;
        const auto a = count_short_cycles(hg, 4);
        const auto b = oracle::cycle_counts(hg, 4);
        for (int l = 2; l <= 4; ++l) CHECK(a.at(l) == b.at(l));
    }

    Budget tiny;
    tiny.max_diagnostic_edges = 0;
    CHECK_THROWS_AS(count_short_cycles(constant, 4, tiny), ResourceError);
    CHECK_THROWS_AS(count_short_cycles(constant, 5), ParameterError);
}

TEST_CASE("colouring checks arity and range") {
    const auto c = sidon_colouring(integers_range(5));
    const VertexSet ok{1, 3};
    CHECK(c(ok) == encode_integer(2));
    const VertexSet reversed{3, 1};
    CHECK(c(reversed) == encode_integer(2));
    const VertexSet wrong{1, 2, 3};
    CHECK_THROWS_AS(c(wrong), ParameterError);
    const VertexSet out{1, 9};
    CHECK_THROWS_AS(c(out), ParameterError);
    CHECK_THROWS_AS(c.require_ground(GroundSet{6}), ParameterError);
    CHECK_THROWS_AS((ColouringSpec{2, 2, 1}.validate()), ParameterError);
}

TEST_CASE("colour keys") {
    CHECK(encode_integer(std::int64_t{-12345}) == encode_integer(mpz_class{-12345}));
    CHECK(encode_integer(std::int64_t{0}) == encode_integer(mpz_class{0}));
    CHECK(encode_integer(std::int64_t{7}) != encode_integer(std::int64_t{-7}));
    CHECK(encode_rational(mpq_class{6, 8}) == encode_rational(mpq_class{3, 4}));
    CHECK(encode_rational(mpq_class{3}) != encode_integer(std::int64_t{3}));
    CHECK(describe(encode_rational(mpq_class{-3, 4})) == "-3/4");
    CHECK(describe(encode_integer(std::int64_t{7})) == "7");
    std::vector<ColorKey> parts{encode_rational(mpq_class{1, 2}), encode_rational(mpq_class{1, 4})};
    CHECK(describe(encode_sequence(parts)) == "[1/2, 1/4]");
}
