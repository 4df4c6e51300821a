#include "rainbow/scaling.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {
namespace {

// Two-sided 97.5% quantiles of Student's t for 1..30 degrees of freedom.
constexpr std::array<double, 30> t_975 = {
    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
    2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
    2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};

double t_quantile(std::size_t dof) {
    if (dof == 0) return INFINITY;
    return dof <= t_975.size() ? t_975[dof - 1] : 1.960;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream{line};
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

template <typename T>
T parse_number(const std::string& text, std::string_view column) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParameterError("bad value '" + text + "' in CSV column " + std::string{column});
    }
    return value;
}

}  // namespace

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << bench_csv_header << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << r.k << ',' << r.h << ',' << r.lambda << ',' << r.colouring << ','
            << to_string(r.algorithm) << ',' << r.trial << ',' << r.seed << ',' << r.rainbow_size
            << ',' << std::fixed << std::setprecision(3) << r.runtime_ms << '\n';
        out.unsetf(std::ios::floatfield);
    }
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != bench_csv_header) {
        throw ParameterError("CSV header must be exactly: " + std::string{bench_csv_header});
    }
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 10) {
            throw ParameterError("CSV row has " + std::to_string(f.size()) + " fields, expected 10");
        }
        BenchRecord r;
        r.n = parse_number<std::size_t>(f[0], "N");
        r.k = parse_number<int>(f[1], "k");
        r.h = parse_number<int>(f[2], "h");
        r.lambda = parse_number<int>(f[3], "lambda");
        r.colouring = f[4];
        r.algorithm = parse_algorithm(f[5]);
        r.trial = parse_number<std::size_t>(f[6], "trial");
        r.seed = parse_number<std::uint64_t>(f[7], "seed");
        r.rainbow_size = parse_number<std::size_t>(f[8], "rainbow_size");
        r.runtime_ms = std::stod(f[9]);
        records.push_back(std::move(r));
    }
    return records;
}

ExponentFit estimate_exponent(std::span<const BenchRecord> records) {
    if (records.empty()) {
        throw ParameterError("estimate_exponent: no records");
    }
    std::map<std::size_t, std::vector<double>> sizes;
    for (const auto& r : records) {
        if (r.colouring != records.front().colouring || r.algorithm != records.front().algorithm) {
            throw ParameterError("estimate_exponent: records mix colourings or algorithms");
        }
        sizes[r.n].push_back(static_cast<double>(r.rainbow_size));
    }
    if (sizes.size() < 4) {
        throw ParameterError("estimate_exponent: need at least 4 distinct N values, got " +
                             std::to_string(sizes.size()));
    }

    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [n, trials] : sizes) {
        if (trials.size() < 3) {
            throw ParameterError("estimate_exponent: N=" + std::to_string(n) + " has only " +
                                 std::to_string(trials.size()) + " trials, need 3");
        }
        double mean = 0.0;
        for (double s : trials) mean += s;
        mean /= static_cast<double>(trials.size());
        if (mean <= 0.0) {
            throw ParameterError("estimate_exponent: mean rainbow size is zero at N=" +
                                 std::to_string(n));
        }
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(mean));
    }

    const auto m = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }

    ExponentFit fit;
    fit.points = xs.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double resid = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ssr += resid * resid;
    }
    const std::size_t dof = xs.size() - 2;
    fit.std_error = std::sqrt(ssr / static_cast<double>(dof) / sxx);
    const double half = t_quantile(dof) * fit.std_error;
    fit.ci_low = fit.slope - half;
    fit.ci_high = fit.slope + half;
    return fit;
}

double predicted_exponent(int k, int h) {
    return static_cast<double>(k - h) / static_cast<double>(2 * k - 1);
}

std::vector<std::pair<std::size_t, double>> median_sizes(std::span<const BenchRecord> records) {
    std::map<std::size_t, std::vector<std::size_t>> sizes;
    for (const auto& r : records) sizes[r.n].push_back(r.rainbow_size);
    std::vector<std::pair<std::size_t, double>> out;
    for (auto& [n, v] : sizes) {
        std::sort(v.begin(), v.end());
        const std::size_t mid = v.size() / 2;
        const double median = v.size() % 2 == 1
                                  ? static_cast<double>(v[mid])
                                  : 0.5 * static_cast<double>(v[mid - 1] + v[mid]);
        out.emplace_back(n, median);
    }
    return out;
}

}  // namespace rainbow
