// rainbow: find, audit and benchmark rainbow subsets of coloured complete
// hypergraphs.
//
// Exit codes: 0 success/PASS, 1 internal error, 2 validation or usage
// failure, 3 resource budget exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "rainbow/bench.hpp"
#include "rainbow/catalog.hpp"
#include "rainbow/error.hpp"

namespace {

using namespace rainbow;

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_invalid = 2;
constexpr int exit_resource = 3;

struct CommonOptions {
    std::uint64_t seed = 0;
    std::uint64_t budget = Budget{}.max_subsets;
    std::string out;
    std::string format = "json";
};

struct GenerateOptions {
    std::string kind;
    std::size_t n = 0;
    std::size_t d = 2;
    std::uint64_t coord_bound = 0;
    std::uint64_t max_value = 0;
};

struct FindOptions {
    std::string instance;
    std::string colouring;
    std::string algorithm = "greedy";
    std::string poly;
    double shrink = 0.5;
    double p = 0.0;
    bool natural_order = false;
    int k = 2;
    int h = 1;
    int lambda = 1;
};

struct BenchOptions {
    std::string colouring = "sidon";
    std::vector<std::size_t> grid;
    std::vector<std::string> algorithms{"greedy"};
    std::size_t trials = 5;
    std::size_t threads = 1;
    double shrink = 0.5;
    std::size_t d = 2;
    std::string poly;
    std::string report;
    double slope_min = 0.28;
    double slope_max = 0.40;
    double median_factor = 0.8;
};

Budget budget_of(const CommonOptions& common) {
    Budget b;
    b.max_subsets = common.budget;
    b.max_conflict_pairs = common.budget;
    return b;
}

Json budget_json(const Budget& b) {
    Json j;
    j["max_subsets"] = b.max_subsets;
    j["max_conflict_pairs"] = b.max_conflict_pairs;
    j["oracle_max_n_small_k"] = b.oracle_max_n_small_k;
    j["oracle_max_n_large_k"] = b.oracle_max_n_large_k;
    return j;
}

Json manifest_base(std::string_view subcommand, const std::vector<std::string>& argv) {
    Json m;
    m["tool"] = "rainbow";
    m["subcommand"] = subcommand;
    m["argv"] = argv;
    return m;
}

void write_manifest(const std::string& out, Json manifest) {
    if (out.empty()) return;
    write_json_file(out + ".manifest.json", manifest);
}

CatalogOptions catalog_of(const FindOptions& f, const Budget& budget) {
    CatalogOptions options;
    options.budget = budget;
    options.fixture_spec = ColouringSpec{f.k, f.h, f.lambda};
    if (!f.poly.empty()) options.poly = sympoly_from_json(read_json_file(f.poly));
    return options;
}

int run_generate(const GenerateOptions& g, const CommonOptions& common, const std::vector<std::string>& argv) {
    if (common.out.empty()) {
        throw ParameterError("generate needs --out");
    }
    Json instance;
    Json params;
    params["n"] = g.n;
    params["seed"] = common.seed;
    if (g.kind == "points") {
        const std::uint64_t bound =
            g.coord_bound != 0 ? g.coord_bound : std::max<std::uint64_t>(4 * static_cast<std::uint64_t>(g.n) * g.n, 16);
        const PointInstance inst = generate_general_position(g.n, g.d, common.seed, bound);
        instance = to_json(inst);
        params["d"] = g.d;
        params["coord_bound"] = bound;
        params["no_hyperplane"] = inst.no_hyperplane;
        params["no_sphere"] = inst.no_sphere;
    } else if (g.kind == "integers-range") {
        instance = to_json(integers_range(g.n));
    } else if (g.kind == "integers-random") {
        const std::uint64_t max_value = g.max_value != 0 ? g.max_value : static_cast<std::uint64_t>(g.n) * g.n;
        instance = to_json(integers_random(g.n, max_value, common.seed));
        params["max"] = max_value;
    } else {
        throw ParameterError("unknown generate kind '" + g.kind + "'");
    }
    write_json_file(common.out, instance);

    Json manifest = manifest_base("generate", argv);
    manifest["kind"] = g.kind;
    manifest["params"] = params;
    manifest["outputs"] = Json::array({common.out});
    write_manifest(common.out, manifest);
    std::cout << "wrote " << g.kind << " instance with " << g.n << " elements to " << common.out << "\n";
    return exit_ok;
}

int run_find(const FindOptions& f, const CommonOptions& common, const std::vector<std::string>& argv,
             std::string_view subcommand) {
    const Budget budget = budget_of(common);
    const Instance inst = instance_from_json(read_json_file(f.instance));
    const ColouredInstance ci = colour_instance(inst, parse_colouring_kind(f.colouring), catalog_of(f, budget));
    const Colouring& c = ci.colouring;
    const GroundSet ground{c.domain_size()};
    const Algorithm algorithm = parse_algorithm(f.algorithm);

    RainbowResult result;
    switch (algorithm) {
        case Algorithm::greedy:
            if (f.natural_order) {
                result = greedy_rainbow(c, ground, ground.elements(), budget);
            } else {
                result = greedy_rainbow(c, ground, common.seed, budget);
            }
            break;
        case Algorithm::sample_delete: {
            const SamplePlan plan =
                f.p > 0.0 ? SamplePlan::with_probability(ground.size(), c.spec().k, c.spec().h, common.seed, f.p)
                          : SamplePlan::make(ground.size(), c.spec().k, c.spec().h, common.seed, f.shrink);
            result = sample_and_delete(c, ground, plan, budget);
            break;
        }
        case Algorithm::exact:
            result = exact_max_rainbow(c, ground, budget);
            break;
    }

    const Json json = result_to_json(ci, result);
    if (!common.out.empty()) {
        if (common.format == "csv") {
            std::ostringstream csv;
            csv << "colouring,algorithm,seed,size,verified,subset\n"
                << c.label() << ',' << to_string(result.algorithm) << ','
                << (result.seed ? std::to_string(*result.seed) : "") << ',' << result.subset.size() << ','
                << (result.verified ? "true" : "false") << ",\"" << json["subset"].dump() << "\"\n";
            write_text_file(common.out, csv.str());
        } else {
            write_json_file(common.out, json);
        }
    }

    Json manifest = manifest_base(subcommand, argv);
    manifest["instance"] = f.instance;
    manifest["colouring"] = f.colouring;
    manifest["algorithm"] = std::string{to_string(algorithm)};
    manifest["seed"] = common.seed;
    manifest["natural_order"] = f.natural_order;
    manifest["shrink"] = f.shrink;
    manifest["p"] = f.p;
    manifest["poly"] = f.poly;
    manifest["fixture_spec"] = Json::array({f.k, f.h, f.lambda});
    manifest["budget"] = budget_json(budget);
    manifest["format"] = common.format;
    manifest["outputs"] = Json::array({common.out});
    write_manifest(common.out, manifest);

    std::cout << c.label() << " / " << to_string(result.algorithm) << ": rainbow subset of size "
              << result.subset.size() << " out of " << ground.size()
              << (result.verified ? " (verified)" : " (NOT verified)") << " in " << result.stats.runtime_ms
              << " ms\n"
              << json["subset"].dump() << "\n";
    return result.verified ? exit_ok : exit_invalid;
}

int run_audit(const FindOptions& f, const CommonOptions& common, const std::vector<std::string>& argv) {
    const Budget budget = budget_of(common);
    const Instance inst = instance_from_json(read_json_file(f.instance));
    const ColouredInstance ci = colour_instance(inst, parse_colouring_kind(f.colouring), catalog_of(f, budget));
    const LambdaVerdict verdict = validate_lambda(ci.colouring, GroundSet{ci.colouring.domain_size()}, budget);
    const Json report = report_to_json(ci, verdict);
    if (!common.out.empty()) {
        write_json_file(common.out, report);
    }
    Json manifest = manifest_base("audit", argv);
    manifest["instance"] = f.instance;
    manifest["colouring"] = f.colouring;
    manifest["poly"] = f.poly;
    manifest["fixture_spec"] = Json::array({f.k, f.h, f.lambda});
    manifest["budget"] = budget_json(budget);
    manifest["outputs"] = Json::array({common.out});
    write_manifest(common.out, manifest);

    const auto& spec = ci.colouring.spec();
    std::cout << ci.colouring.label() << " (k=" << spec.k << ", h=" << spec.h << ", lambda=" << spec.lambda
              << "): worst monochromatic sunflower has " << verdict.report.petals << " petals\n"
              << "  core:   " << report["core"].dump() << "\n"
              << "  colour: " << report["colour"].dump() << "\n"
              << (verdict.holds ? "PASS" : "FAIL") << "\n";
    return verdict.holds ? exit_ok : exit_invalid;
}

int run_bench_command(const BenchOptions& b, const CommonOptions& common, const std::vector<std::string>& argv) {
    if (b.grid.size() < 4) {
        throw ParameterError("bench needs at least 4 grid points for the exponent fit");
    }
    BenchConfig config;
    config.grid = b.grid;
    config.colouring = parse_colouring_kind(b.colouring);
    config.algorithms.clear();
    for (const auto& a : b.algorithms) config.algorithms.push_back(parse_algorithm(a));
    config.trials = b.trials;
    config.master_seed = common.seed;
    config.workers = b.threads;
    config.shrink = b.shrink;
    config.dimension = b.d;
    config.catalog.budget = budget_of(common);
    if (!b.poly.empty()) config.catalog.poly = sympoly_from_json(read_json_file(b.poly));
    config.slope_min = b.slope_min;
    config.slope_max = b.slope_max;
    config.median_factor = b.median_factor;

    const auto records = run_bench(config, [](const BenchRecord& r) {
        std::cerr << "N=" << r.n << " " << to_string(r.algorithm) << " trial=" << r.trial << " seed=" << r.seed
                  << " size=" << r.rainbow_size << " " << r.runtime_ms << "ms\n";
    });

    std::ostringstream csv;
    write_bench_csv(csv, records);
    const auto reports = summarize_bench(config, records);
    const Json report_json = bench_report_to_json(reports);
    if (!common.out.empty()) {
        if (common.format == "json") {
            Json all = Json::array();
            for (const auto& r : records) {
                Json j;
                j["N"] = r.n; j["k"] = r.k; j["h"] = r.h; j["lambda"] = r.lambda;
                j["colouring"] = r.colouring; j["algorithm"] = std::string{to_string(r.algorithm)};
                j["trial"] = r.trial; j["seed"] = r.seed; j["rainbow_size"] = r.rainbow_size;
                j["runtime_ms"] = r.runtime_ms;
                all.push_back(std::move(j));
            }
            write_json_file(common.out, all);
        } else {
            write_text_file(common.out, csv.str());
        }
    } else {
        std::cout << csv.str();
    }
    if (!b.report.empty()) write_json_file(b.report, report_json);

    Json manifest = manifest_base("bench", argv);
    manifest["colouring"] = b.colouring;
    manifest["grid"] = b.grid;
    manifest["algorithms"] = b.algorithms;
    manifest["trials"] = b.trials;
    manifest["seed"] = common.seed;
    manifest["threads"] = b.threads;
    manifest["shrink"] = b.shrink;
    manifest["d"] = b.d;
    manifest["poly"] = b.poly;
    manifest["budget"] = budget_json(config.catalog.budget);
    manifest["thresholds"] = Json{{"slope_min", b.slope_min}, {"slope_max", b.slope_max},
                                  {"median_factor", b.median_factor}};
    manifest["format"] = common.format;
    manifest["outputs"] = Json::array({common.out, b.report});
    write_manifest(common.out, manifest);

    for (const auto& rep : reports) {
        std::cout << "# " << to_string(rep.algorithm) << ": ";
        if (rep.fit) {
            std::cout << "fitted slope " << rep.fit->slope << " (se " << rep.fit->std_error << ", 95% CI ["
                      << rep.fit->ci_low << ", " << rep.fit->ci_high << "])";
        } else {
            std::cout << "no fit (" << rep.fit_error << ")";
        }
        std::cout << ", predicted " << rep.predicted << "; slope in [" << b.slope_min << ", " << b.slope_max
                  << "]: " << (rep.slope_pass ? "PASS" : "FAIL") << "; median >= " << b.median_factor
                  << "*N^" << rep.predicted << ": " << (rep.median_pass ? "PASS" : "FAIL") << "\n";
    }
    return exit_ok;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--seed", common.seed, "RNG seed (u64)");
    cmd->add_option("--budget", common.budget, "Enumeration budget (subsets and conflict pairs)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", common.out, "Output path; a <out>.manifest.json is written next to it");
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_instance_options(CLI::App* cmd, FindOptions& f) {
    cmd->add_option("--instance", f.instance, "Instance JSON file")->required();
    cmd->add_option("--colouring", f.colouring, "sidon|poly|circumradius|volume|similarity|constant|injective")
        ->required();
    cmd->add_option("--poly", f.poly, "Symmetric polynomial JSON (poly colouring)");
    cmd->add_option("--fixture-k", f.k, "Edge size for constant/injective fixtures");
    cmd->add_option("--fixture-h", f.h, "Core size for constant/injective fixtures");
    cmd->add_option("--fixture-lambda", f.lambda, "Declared lambda for constant/injective fixtures");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rainbow subsets of coloured complete hypergraphs"};
    app.require_subcommand(1);
    std::vector<std::string> args(argv, argv + argc);

    CommonOptions common;
    GenerateOptions gen;
    FindOptions find;
    BenchOptions bench;

    auto* generate = app.add_subcommand("generate", "Write an instance file");
    generate->add_option("kind", gen.kind, "points|integers-range|integers-random")
        ->required()
        ->check(CLI::IsMember({"points", "integers-range", "integers-random"}));
    generate->add_option("--n", gen.n, "Number of elements")->required()->check(CLI::PositiveNumber);
    generate->add_option("--d", gen.d, "Point dimension")->check(CLI::PositiveNumber);
    generate->add_option("--coord-bound", gen.coord_bound, "Coordinate range [0, B] (default max(4N^2, 16))");
    generate->add_option("--max", gen.max_value, "integers-random: values drawn from [1, max] (default N^2)");
    add_common(generate, common);

    auto* find_cmd = app.add_subcommand("find", "Find a rainbow subset");
    add_instance_options(find_cmd, find);
    find_cmd->add_option("--algorithm", find.algorithm, "greedy|sample-delete|exact")
        ->check(CLI::IsMember({"greedy", "sample-delete", "exact"}));
    find_cmd->add_option("--shrink", find.shrink, "sample-delete: factor applied to the default p");
    find_cmd->add_option("--p", find.p, "sample-delete: explicit keep probability in (0, 1]");
    find_cmd->add_flag("--natural-order", find.natural_order, "greedy: scan vertices in id order");
    add_common(find_cmd, common);

    auto* oracle = app.add_subcommand("oracle", "Alias for find --algorithm exact");
    add_instance_options(oracle, find);
    add_common(oracle, common);

    auto* audit = app.add_subcommand("audit", "Report the worst monochromatic sunflower and check lambda");
    add_instance_options(audit, find);
    add_common(audit, common);

    auto* bench_cmd = app.add_subcommand("bench", "Run trials over a grid of N and fit the growth exponent");
    bench_cmd->add_option("--colouring", bench.colouring, "Colouring selector");
    bench_cmd->add_option("--grid", bench.grid, "Comma-separated ground sizes")->required()->delimiter(',');
    bench_cmd->add_option("--algorithms", bench.algorithms, "Comma-separated algorithms")->delimiter(',');
    bench_cmd->add_option("--trials", bench.trials, "Trials per grid point")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--threads", bench.threads, "Concurrent workers")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--shrink", bench.shrink, "sample-delete shrink factor");
    bench_cmd->add_option("--d", bench.d, "Dimension for point colourings");
    bench_cmd->add_option("--poly", bench.poly, "Symmetric polynomial JSON (poly colouring)");
    bench_cmd->add_option("--report", bench.report, "Write the exponent report as JSON");
    bench_cmd->add_option("--slope-min", bench.slope_min);
    bench_cmd->add_option("--slope-max", bench.slope_max);
    bench_cmd->add_option("--median-factor", bench.median_factor);
    add_common(bench_cmd, common);
    common.format = "json";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*generate) return run_generate(gen, common, args);
        if (*find_cmd) return run_find(find, common, args, "find");
        if (*oracle) {
            find.algorithm = "exact";
            return run_find(find, common, args, "oracle");
        }
        if (*audit) return run_audit(find, common, args);
        if (*bench_cmd) {
            if (!bench_cmd->count("--format")) common.format = "csv";
            return run_bench_command(bench, common, args);
        }
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return exit_invalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::resource: return exit_resource;
            case ErrorKind::internal: return exit_internal;
            default: return exit_invalid;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}
