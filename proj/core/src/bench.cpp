#include "rainbow/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "rainbow/error.hpp"
#include "rainbow/random.hpp"

namespace rainbow {

Instance bench_instance(const BenchConfig& config, std::size_t n) {
    if (needs_points(config.colouring)) {
        const std::uint64_t bound = std::max<std::uint64_t>(4 * static_cast<std::uint64_t>(n) * n, 16);
        return generate_general_position(n, config.dimension, trial_seed(config.master_seed, n), bound);
    }
    return integers_range(n);
}

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record) {
    if (config.grid.empty() || config.algorithms.empty() || config.trials == 0) {
        throw ParameterError("bench needs a non-empty grid, algorithm list and trial count");
    }

    std::vector<ColouredInstance> coloured;
    coloured.reserve(config.grid.size());
    for (std::size_t n : config.grid) {
        coloured.push_back(colour_instance(bench_instance(config, n), config.colouring, config.catalog));
    }

    struct Job {
        std::size_t grid_index;
        Algorithm algorithm;
        std::size_t trial;
    };
    std::vector<Job> jobs;
    for (std::size_t g = 0; g < config.grid.size(); ++g) {
        for (Algorithm a : config.algorithms) {
            for (std::size_t t = 0; t < config.trials; ++t) jobs.push_back(Job{g, a, t});
        }
    }

    std::vector<BenchRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex report_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                const Job& job = jobs[i];
                const ColouredInstance& ci = coloured[job.grid_index];
                const Colouring& c = ci.colouring;
                const GroundSet ground{c.domain_size()};
                const std::uint64_t seed = trial_seed(config.master_seed, job.trial);
                RainbowResult result;
                switch (job.algorithm) {
                    case Algorithm::greedy:
                        result = greedy_rainbow(c, ground, seed, config.catalog.budget);
                        break;
                    case Algorithm::sample_delete:
                        result = sample_and_delete(
                            c, ground, SamplePlan::make(ground.size(), c.spec().k, c.spec().h, seed, config.shrink),
                            config.catalog.budget);
                        break;
                    case Algorithm::exact:
                        result = exact_max_rainbow(c, ground, config.catalog.budget);
                        break;
                }
                BenchRecord& r = records[i];
                r.n = config.grid[job.grid_index];
                r.k = c.spec().k;
                r.h = c.spec().h;
                r.lambda = c.spec().lambda;
                r.colouring = c.label();
                r.algorithm = job.algorithm;
                r.trial = job.trial;
                r.seed = seed;
                r.rainbow_size = result.subset.size();
                r.runtime_ms = result.stats.runtime_ms;
                if (on_record) {
                    std::lock_guard lock{report_mutex};
                    on_record(r);
                }
            } catch (...) {
                std::lock_guard lock{report_mutex};
                if (!failure) failure = std::current_exception();
                next = jobs.size();
            }
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, jobs.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::vector<AlgorithmReport> summarize_bench(const BenchConfig& config, std::span<const BenchRecord> records) {
    std::vector<AlgorithmReport> out;
    for (Algorithm a : config.algorithms) {
        std::vector<BenchRecord> subset;
        std::copy_if(records.begin(), records.end(), std::back_inserter(subset),
                     [a](const BenchRecord& r) { return r.algorithm == a; });
        if (subset.empty()) continue;
        AlgorithmReport rep;
        rep.algorithm = a;
        rep.predicted = predicted_exponent(subset.front().k, subset.front().h);
        rep.medians = median_sizes(subset);
        try {
            rep.fit = estimate_exponent(subset);
        } catch (const ParameterError& e) {
            rep.fit_error = e.what();
        }
        rep.slope_pass = rep.fit && rep.fit->slope >= config.slope_min && rep.fit->slope <= config.slope_max;
        rep.median_pass = std::all_of(rep.medians.begin(), rep.medians.end(), [&](const auto& m) {
            return m.second >= config.median_factor * std::pow(static_cast<double>(m.first), rep.predicted);
        });
        out.push_back(std::move(rep));
    }
    return out;
}

Json bench_report_to_json(std::span<const AlgorithmReport> reports) {
    Json out = Json::array();
    for (const auto& rep : reports) {
        Json j;
        j["algorithm"] = std::string{to_string(rep.algorithm)};
        j["predicted_slope"] = rep.predicted;
        if (rep.fit) {
            j["fitted_slope"] = rep.fit->slope;
            j["std_error"] = rep.fit->std_error;
            j["ci95"] = Json::array({rep.fit->ci_low, rep.fit->ci_high});
        } else {
            j["fitted_slope"] = nullptr;
            j["fit_error"] = rep.fit_error;
        }
        Json medians = Json::array();
        for (const auto& [n, m] : rep.medians) medians.push_back(Json::array({n, m}));
        j["median_sizes"] = std::move(medians);
        j["slope_check"] = rep.slope_pass ? "PASS" : "FAIL";
        j["median_check"] = rep.median_pass ? "PASS" : "FAIL";
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace rainbow
