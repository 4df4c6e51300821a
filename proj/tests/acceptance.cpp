// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rainbow/algebra.hpp"
#include "rainbow/bench.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/engine.hpp"
#include "rainbow/formats.hpp"
#include "rainbow/geometry.hpp"
#include "rainbow/random.hpp"
#include "rainbow/sunflower.hpp"

using namespace rainbow;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<mpq_class> range_q(long n) {
    std::vector<mpq_class> out;
    for (long x = 1; x <= n; ++x) out.emplace_back(x);
    return out;
}

SymPoly random_sympoly(int degree, const Field& field, std::mt19937& gen) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Monomial> terms;
    for (int i = 0; i <= degree; ++i)
        for (int j = i; i + j <= degree; ++j) {
            int c = coef(gen);
            if (i == 0 && j == degree && c == 0) c = 1;
            if (c == 0) continue;
            terms.push_back({i, j, c});
            if (i != j) terms.push_back({j, i, c});
        }
    return SymPoly(field, degree, terms);
}

// Random colouring of one of the supported families on N <= 12 vertices.
struct Case {
    std::string name;
    std::optional<Colouring> colouring;
};

Case make_case(std::size_t index) {
    std::mt19937 gen(static_cast<std::uint32_t>(index * 7919 + 1));
    const std::size_t n = 3 + index % 10;
    const int k = 2 + static_cast<int>((index / 10) % 2);
    const std::uint64_t seed = index;
    switch (index % 8) {
        case 0:
            return {"table", oracle::table_colouring(n, {k, 1, 1}, 2 + index % 9, static_cast<std::uint32_t>(index))};
        case 1:
            return {"random", random_colouring(n, {k, k - 1, 1}, 3 + index % 7, seed)};
        case 2:
            return {"constant", constant_colouring(n, {k, 1, 1})};
        case 3:
            return {"injective", injective_colouring(n, {k, 1, 1})};
        case 4:
            return {"sidon", sidon_colouring(integers_random(n, 4 * n * n, seed))};
        case 5: {
            const int degree = 1 + static_cast<int>(index % 4);
            const Field field = index % 3 == 0 ? Field::prime(101) : Field::rationals();
            const auto poly = random_sympoly(degree, field, gen);
            const auto values = integers_random(n + 4, 100, seed).values;
            std::vector<mpq_class> x(values.begin(), values.end());
            const auto prep = poly_prepare(poly, x);
            return {"poly", poly_colouring(poly, prep.y)};
        }
        default: {
            const std::size_t pn = std::max<std::size_t>(n, 4);
            const auto pts = generate_general_position(pn, 2, seed, 4 * pn * pn);
            switch (index % 3) {
                case 0: return {"circumradius", circumradius_colouring(pts)};
                case 1: return {"volume", volume_colouring(pts)};
                default: return {"similarity", similarity_colouring(pts)};
            }
        }
    }
}

struct Outputs {
    std::vector<RainbowResult> heuristic;  // greedy (seeded and natural) and sample-and-delete
    std::vector<RainbowResult> greedy;
    RainbowResult exact;
};

Outputs run_all(const Colouring& c, std::uint64_t seed) {
    const GroundSet g{c.domain_size()};
    Outputs o;
    o.greedy.push_back(greedy_rainbow(c, g, seed));
    o.greedy.push_back(greedy_rainbow(c, g, g.elements()));
    o.heuristic = o.greedy;
    o.heuristic.push_back(sample_and_delete(c, g, SamplePlan::make(g.size(), c.spec().k, c.spec().h, seed)));
    o.heuristic.push_back(
        sample_and_delete(c, g, SamplePlan::with_probability(g.size(), c.spec().k, c.spec().h, seed, 0.8)));
    o.heuristic.push_back(
        sample_and_delete(c, g, SamplePlan::with_probability(g.size(), c.spec().k, c.spec().h, seed, 1.0)));
    o.exact = exact_max_rainbow(c, g);
    return o;
}

std::vector<std::pair<Case, Outputs>>& instances() {
    static std::vector<std::pair<Case, Outputs>> all = [] {
        std::vector<std::pair<Case, Outputs>> v;
        for (std::size_t i = 0; i < 500; ++i) {
            Case c = make_case(i);
            Outputs o = run_all(*c.colouring, i);
            v.emplace_back(std::move(c), std::move(o));
        }
        return v;
    }();
    return all;
}

Outcome criterion1() {
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (auto& [c, o] : instances()) {
        std::vector<const RainbowResult*> all;
        for (const auto& r : o.heuristic) all.push_back(&r);
        all.push_back(&o.exact);
        for (const auto* r : all) {
            ++checked;
            if (!oracle::is_rainbow(*c.colouring, r->subset) || !r->verified) {
                ++bad;
                if (first.empty()) first = c.name + "/" + std::string{to_string(r->algorithm)};
            }
        }
    }
    return {bad == 0, std::to_string(checked) + " outputs over 500 instances, " + std::to_string(bad) +
                          " not rainbow" + (first.empty() ? "" : " (first: " + first + ")")};
}

Outcome criterion2() {
    std::size_t dominated = 0, not_maximal = 0;
    for (auto& [c, o] : instances()) {
        for (const auto& r : o.heuristic)
            if (r.subset.size() > o.exact.subset.size()) ++dominated;
        for (const auto& r : o.greedy)
            if (!oracle::is_maximal(*c.colouring, c.colouring->domain_size(), r.subset)) ++not_maximal;
    }
    return {dominated == 0 && not_maximal == 0,
            std::to_string(dominated) + " heuristic outputs beat the oracle, " + std::to_string(not_maximal) +
                " greedy outputs not maximal"};
}

Outcome criterion3() {
    std::size_t mismatches = 0;
    for (std::uint32_t i = 0; i < 200; ++i) {
        const int k = 1 + static_cast<int>(i % 3);
        const int h = static_cast<int>((i / 3) % static_cast<std::uint32_t>(k));
        const std::size_t n = static_cast<std::size_t>(k) + 1 + (i / 7) % (10 - static_cast<std::size_t>(k));
        const auto c = oracle::table_colouring(n, {k, h, 1}, 1 + i % 6, i + 1000);
        const auto report = max_monochromatic_sunflower(c, GroundSet{n}, static_cast<std::size_t>(h));
        bool ok = report.petals == oracle::max_petals(c, n, static_cast<std::size_t>(h));
        ok = ok && report.witness_edges.size() == report.petals;
        for (const auto& e : report.witness_edges)
            ok = ok && c(e) == report.colour && is_subset(report.core, e);
        if (!ok) ++mismatches;
    }
    return {mismatches == 0, "200 colourings, " + std::to_string(mismatches) + " disagreements with the pairwise oracle"};
}

Outcome criterion4() {
    std::size_t violations = 0, audits = 0;
    std::size_t worst_circ = 0, worst_vol = 0, worst_sim = 0, worst_poly = 0, worst_sidon = 0;
    auto audit = [&](const Colouring& c, std::size_t limit, std::size_t& worst) {
        const GroundSet g{c.domain_size()};
        const auto verdict = validate_lambda(c, g);
        const std::size_t brute = oracle::max_petals(c, g.size(), static_cast<std::size_t>(c.spec().h));
        ++audits;
        worst = std::max(worst, brute);
        if (!verdict.holds || verdict.report.petals != brute || brute > limit) ++violations;
    };
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        // A wide box (few coincidences) and a tight one (many).
        for (std::uint64_t bound : {std::uint64_t{4 * 12 * 12}, std::uint64_t{24}}) {
            const auto pts = generate_general_position(12, 2, seed, bound);
            audit(circumradius_colouring(pts), 2, worst_circ);
            audit(volume_colouring(pts), 4, worst_vol);
            audit(similarity_colouring(pts), 12, worst_sim);
        }

        std::mt19937 gen(static_cast<std::uint32_t>(seed));
        for (int d = 1; d <= 4; ++d) {
            const Field field = seed % 2 ? Field::prime(1009) : Field::rationals();
            const auto poly = random_sympoly(d, field, gen);
            const auto values = integers_random(20, 500, seed * 10 + static_cast<std::uint64_t>(d)).values;
            std::vector<mpq_class> x(values.begin(), values.end());
            const auto prep = poly_prepare(poly, x);
            std::size_t worst = 0;
            audit(poly_colouring(poly, prep.y), static_cast<std::size_t>(d), worst);
            worst_poly = std::max(worst_poly, worst);
        }
        audit(sidon_colouring(integers_random(40, 2000, seed)), 2, worst_sidon);
    }
    std::ostringstream s;
    s << audits << " audits over 20 seeds, " << violations << " violations; worst petals circumradius "
      << worst_circ << "/2, volume " << worst_vol << "/4, similarity " << worst_sim << "/12, polynomial "
      << worst_poly << "/d, sidon " << worst_sidon << "/2";
    return {violations == 0, s.str()};
}

RationalPoint pt(const mpq_class& x, const mpq_class& y) { return RationalPoint{std::vector<mpq_class>{x, y}}; }

Outcome criterion5() {
    bool ok = true;
    std::string detail;
    for (unsigned d = 2; d <= 4; ++d) {
        std::vector<RationalPoint> s;
        s.emplace_back(std::vector<mpq_class>(d, mpq_class{0}));
        for (unsigned i = 0; i < d; ++i) {
            std::vector<mpq_class> c(d, mpq_class{0});
            c[i] = 1;
            s.emplace_back(c);
        }
        mpz_class f = 1;
        for (unsigned i = 2; i <= d; ++i) f *= i;
        const bool v = squared_volume(s) == mpq_class{1, f * f};
        ok = ok && v;
        detail += "vol d=" + std::to_string(d) + (v ? " ok, " : " WRONG, ");
    }
    const std::vector<RationalPoint> right{pt(0, 0), pt(3, 0), pt(0, 4)};
    const bool r = squared_circumradius(right) == mpq_class{25, 4};
    ok = ok && r;
    detail += std::string{"R^2(3-4-5) "} + (r ? "ok" : "WRONG");

    std::mt19937 gen(2024);
    std::uniform_int_distribution<int> dist(-100, 100);
    std::uniform_int_distribution<int> scale(1, 9);
    int triangles = 0, failures = 0;
    while (triangles < 100) {
        std::vector<RationalPoint> t;
        for (int i = 0; i < 3; ++i) t.push_back(pt(dist(gen), dist(gen)));
        if (squared_volume(t) == 0) continue;
        ++triangles;
        const auto key = similarity_canonical_form(t);
        const mpq_class s{scale(gen), scale(gen)};
        const mpq_class dx = dist(gen), dy = dist(gen);
        std::vector<RationalPoint> perm{t[2], t[0], t[1]};
        std::vector<RationalPoint> moved, scaled, mirrored, rotated;
        for (const auto& p : t) {
            const mpq_class &x = p.coords[0], &y = p.coords[1];
            moved.push_back(pt(x + dx, y + dy));
            scaled.push_back(pt(s * x, s * y));
            mirrored.push_back(pt(-x, y));
            rotated.push_back(pt(mpq_class{5, 13} * x - mpq_class{12, 13} * y, mpq_class{12, 13} * x + mpq_class{5, 13} * y));
        }
        for (const auto* variant : {&perm, &moved, &scaled, &mirrored, &rotated})
            if (similarity_canonical_form(*variant) != key) ++failures;
    }
    ok = ok && failures == 0;
    detail += ", similarity invariance " + std::to_string(failures) + " failures on 100 triangles";
    return {ok, detail};
}

Outcome criterion6() {
    const auto six = exact_max_rainbow(sidon_colouring(integers_range(6)), GroundSet{6}).subset.size();
    bool ok = six == 3;
    std::string mismatches;
    for (std::size_t n = 1; n <= 16; ++n) {
        const auto size = exact_max_rainbow(sidon_colouring(integers_range(n)), GroundSet{n}).subset.size();
        if (size != oracle::max_b2_size(n)) {
            ok = false;
            mismatches += " N=" + std::to_string(n);
        }
    }
    return {ok, "{1..6} -> " + std::to_string(six) + "; N=1..16 vs exhaustive B2 search" +
                    (mismatches.empty() ? " all equal" : " differ at" + mismatches)};
}

Outcome criterion7() {
    BenchConfig config;
    config.grid = {1000, 10000, 100000, 1000000};
    config.colouring = ColouringKind::sidon;
    config.algorithms = {Algorithm::greedy};
    config.trials = 5;
    config.master_seed = 0;
    const auto records = run_bench(config);
    const auto fit = estimate_exponent(records);
    const auto medians = median_sizes(records);
    bool medians_ok = medians.size() == 4;
    std::ostringstream s;
    s << "medians";
    for (const auto& [n, m] : medians) {
        const double floor = 0.8 * std::cbrt(static_cast<double>(n));
        medians_ok = medians_ok && m >= floor;
        s << " " << n << ":" << m << (m >= floor ? "" : "(<floor)");
    }
    const bool slope_ok = fit.slope >= 0.28 && fit.slope <= 0.40;
    s << "; slope " << fit.slope << " (95% CI [" << fit.ci_low << ", " << fit.ci_high << "]), predicted "
      << predicted_exponent(2, 1);
    return {medians_ok && slope_ok, s.str()};
}

Outcome criterion8() {
    const SymPoly sum(Field::rationals(), 1, {{1, 0, 1}, {0, 1, 1}});
    std::string mismatches;
    for (std::size_t n = 1; n <= 16; ++n) {
        const auto x = range_q(static_cast<long>(n));
        const auto prep = poly_prepare(sum, x);
        const auto a = exact_max_rainbow(poly_colouring(sum, prep.y), GroundSet{n}).subset.size();
        const auto b = exact_max_rainbow(sidon_colouring(integers_range(n)), GroundSet{n}).subset.size();
        if (a != b) mismatches += " N=" + std::to_string(n);
    }
    return {mismatches.empty(), mismatches.empty() ? "exact sizes agree for N=1..16" : "differ at" + mismatches};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string deterministic_csv(std::vector<BenchRecord> records) {
    for (auto& r : records) r.runtime_ms = 0.0;  // wall-clock column
    std::ostringstream out;
    write_bench_csv(out, records);
    return out.str();
}

Outcome criterion9() {
    const auto dir = std::filesystem::temp_directory_path() / "rainbow_acceptance";
    std::filesystem::create_directories(dir);

    const Instance ints = integers_range(300);
    const Instance pts = generate_general_position(10, 2, 5, 400);
    const CatalogOptions opts;
    const auto sidon = colour_instance(ints, ColouringKind::sidon, opts);
    const auto circ = colour_instance(pts, ColouringKind::circumradius, opts);

    auto result_files = [&](int repeat) {
        std::string all;
        int f = 0;
        auto emit = [&](const ColouredInstance& ci, const RainbowResult& r) {
            const auto path = dir / ("r" + std::to_string(repeat) + "_" + std::to_string(f++) + ".json");
            write_json_file(path, result_to_json(ci, r));
            all += slurp(path);
        };
        const GroundSet g300{300}, g10{10};
        emit(sidon, greedy_rainbow(sidon.colouring, g300, std::uint64_t{1}));
        emit(sidon, sample_and_delete(sidon.colouring, GroundSet{100}, SamplePlan::make(100, 2, 1, 1)));
        emit(circ, greedy_rainbow(circ.colouring, g10, std::uint64_t{1}));
        emit(circ, sample_and_delete(circ.colouring, g10, SamplePlan::with_probability(10, 3, 2, 1, 0.9)));
        emit(circ, exact_max_rainbow(circ.colouring, g10));
        return all;
    };

    BenchConfig bench;
    bench.grid = {20, 40, 60, 80};
    bench.algorithms = {Algorithm::greedy, Algorithm::sample_delete};
    bench.trials = 3;
    bench.master_seed = 99;

    const std::string reference = result_files(0);
    bench.workers = 1;
    const std::string bench_reference = deterministic_csv(run_bench(bench));
    int differing = 0;
    for (int repeat = 1; repeat <= 20; ++repeat) {
        if (result_files(repeat) != reference) ++differing;
        bench.workers = 1 + static_cast<std::size_t>(repeat % 4);
        if (deterministic_csv(run_bench(bench)) != bench_reference) ++differing;
    }
    std::filesystem::remove_all(dir);
    return {differing == 0, "20 repeats of 5 result files and a bench run on 1-4 workers, " +
                                std::to_string(differing) + " differing"};
}

}  // namespace

int main(int argc, char** argv) {
    using Clock = std::chrono::steady_clock;
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"rainbow soundness", criterion1},      {"oracle dominance", criterion2},
        {"sunflower audit", criterion3},        {"lambda bounds", criterion4},
        {"exact geometry", criterion5},         {"sidon pigeonhole", criterion6},
        {"scaling exponent", criterion7},       {"cross-module equivalence", criterion8},
        {"determinism", criterion9},
    };
    std::vector<std::size_t> selected;
    for (int a = 1; a < argc; ++a) {
        const int c = std::atoi(argv[a]);
        if (c < 1 || c > static_cast<int>(criteria.size())) {
            std::cerr << "usage: acceptance [criterion 1-9 ...]\n";
            return 2;
        }
        selected.push_back(static_cast<std::size_t>(c - 1));
    }
    if (selected.empty())
        for (std::size_t i = 0; i < criteria.size(); ++i) selected.push_back(i);
    int failed = 0;
    for (std::size_t i : selected) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string{"exception: "} + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (!o.pass) ++failed;
        std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL")
                  << " (" << std::fixed << std::setprecision(1) << secs << "s) " << std::defaultfloat << o.detail
                  << std::endl;
    }
    std::cout << (failed == 0 ? "all selected criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
