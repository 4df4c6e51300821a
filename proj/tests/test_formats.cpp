#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "rainbow/bench.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/error.hpp"
#include "rainbow/formats.hpp"
#include "rainbow/random.hpp"

using namespace rainbow;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("rationals") {
    CHECK(rational_to_json(mpq_class{-6, 8}) == Json::array({"-3", "4"}));
    CHECK(rational_from_json(Json::array({"10", "4"})) == mpq_class{5, 2});
    CHECK_THROWS_AS(rational_from_json(Json::array({"1", "0"})), ParameterError);
    CHECK_THROWS_AS(rational_from_json(Json::array({"x", "1"})), ParameterError);
}

TEST_CASE("instance round trips are byte identical") {
    const auto tmp = std::filesystem::temp_directory_path() / "rainbow_formats_test";
    std::filesystem::create_directories(tmp);

    const auto pts = generate_general_position(6, 2, 3, 144);
    const Json pj = to_json(pts);
    write_json_file(tmp / "a.json", pj);
    const auto back = points_from_json(read_json_file(tmp / "a.json"));
    CHECK(back.points == pts.points);
    CHECK_FALSE(back.no_hyperplane);
    write_json_file(tmp / "b.json", to_json(back));
    CHECK(slurp(tmp / "a.json") == slurp(tmp / "b.json"));

    const auto ints = integers_random(10, 100, 2);
    const Json ij = to_json(ints);
    CHECK(ij["type"] == "integers");
    CHECK(integers_from_json(ij).values == ints.values);
    CHECK(std::holds_alternative<IntegerInstance>(instance_from_json(ij)));
    CHECK(std::holds_alternative<PointInstance>(instance_from_json(pj)));
    CHECK(to_json(instance_from_json(ij)).dump() == ij.dump());

    const SymPoly poly(Field::prime(7), 2, {{2, 0, 1}, {0, 2, 1}, {0, 0, 3}});
    const Json polyj = to_json(poly);
    const auto poly_back = sympoly_from_json(polyj);
    CHECK(to_json(poly_back).dump() == polyj.dump());
    CHECK(poly_back.field() == Field::prime(7));

    CHECK_THROWS_AS(instance_from_json(Json{{"type", "graph"}}), ParameterError);
    CHECK_THROWS_AS(read_json_file(tmp / "missing.json"), ParameterError);
    std::filesystem::remove_all(tmp);
}

TEST_CASE("catalog") {
    CHECK(parse_colouring_kind("circumradius") == ColouringKind::circumradius);
    CHECK_THROWS_AS(parse_colouring_kind("rainbow"), ParameterError);

    CatalogOptions opts;
    const Instance ints = integers_range(5);
    const auto sidon = colour_instance(ints, ColouringKind::sidon, opts);
    CHECK(sidon.colouring.label() == "sidon");
    CHECK(sidon.domain_values.size() == 5);
    CHECK_THROWS_AS(colour_instance(ints, ColouringKind::volume, opts), ParameterError);
    CHECK_THROWS_AS(colour_instance(ints, ColouringKind::poly, opts), ParameterError);

    opts.poly = SymPoly(Field::rationals(), 2, {{1, 1, 1}});
    const Instance zero_in = make_integer_instance({mpz_class{1}, mpz_class{2}, mpz_class{3}});
    const auto poly = colour_instance(zero_in, ColouringKind::poly, opts);
    CHECK(poly.removed.empty());

    std::vector<RationalPoint> pts;
    for (int x : {0, 1, 2, 7}) pts.emplace_back(std::vector<mpq_class>{x, x == 7 ? 3 : x});
    const Instance collinear = make_point_instance(2, pts);
    try {
        colour_instance(collinear, ColouringKind::volume, opts);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.witness == std::vector<std::uint32_t>{0, 1, 2});
    }

    const auto c = colour_instance(ints, ColouringKind::sidon, opts);
    const auto r = greedy_rainbow(c.colouring, GroundSet{5}, std::uint64_t{3});
    const Json j = result_to_json(c, r);
    CHECK(j["size"] == r.subset.size());
    CHECK(j["verified"] == true);
    CHECK(j["seed"] == 3);
    CHECK_FALSE(j.contains("runtime_ms"));
    CHECK_FALSE(j["stats"].contains("runtime_ms"));
}

TEST_CASE("bench records do not depend on the worker count") {
    BenchConfig config;
    config.grid = {20, 40, 60, 80};
    config.algorithms = {Algorithm::greedy, Algorithm::sample_delete};
    config.trials = 3;
    config.master_seed = 11;
    auto strip = [](std::vector<BenchRecord> rs) {
        for (auto& r : rs) r.runtime_ms = 0.0;
        std::ostringstream out;
        write_bench_csv(out, rs);
        return out.str();
    };
    config.workers = 1;
    const auto one = strip(run_bench(config));
    config.workers = 4;
    const auto four = strip(run_bench(config));
    CHECK(one == four);

    config.workers = 1;
    const auto records = run_bench(config);
    REQUIRE(records.size() == 4 * 2 * 3);
    CHECK(records[0].seed == trial_seed(11, 0));
    CHECK(records[1].seed == trial_seed(11, 1));
    const auto reports = summarize_bench(config, records);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].fit.has_value());
    CHECK(bench_report_to_json(reports).size() == 2);

    BenchConfig inj;
    inj.grid = {8, 16, 32, 64};
    inj.colouring = ColouringKind::injective;
    inj.trials = 3;
    const auto inj_records = run_bench(inj);
    for (const auto& r : inj_records) CHECK(r.rainbow_size == r.n);
    CHECK(summarize_bench(inj, inj_records)[0].fit->slope == doctest::Approx(1.0));
}
